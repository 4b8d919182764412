#pragma once

#include "hyperzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hyperzeta {

class CycScalar;

/// The cyclotomic field Q(zeta_l) for odd l >= 3, presented as Q[x]/Phi_l(x).
///
/// Instances are interned: `get(l)` returns the same object for the same
/// conductor for the lifetime of the process, so field identity can be
/// compared by address.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int ell);

  int ell() const { return ell_; }
  /// phi(l), the degree of the field over Q.
  int degree() const { return degree_; }
  /// Coefficients of Phi_l, low degree first; monic, size degree()+1.
  const std::vector<BigInt>& modulus() const { return modulus_; }

  /// zeta^k for any integer k.
  const CycScalar& zeta_pow(std::int64_t k) const;
  const CycScalar& zero() const;
  const CycScalar& one() const;

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;
  ~CyclotomicField();

 private:
  explicit CyclotomicField(int ell);
  void build_tables();

  int ell_;
  int degree_;
  std::vector<BigInt> modulus_;
  std::vector<CycScalar> powers_;  // zeta^0 .. zeta^(l-1)
  std::unique_ptr<CycScalar> zero_;
};

/// The l-th cyclotomic polynomial, computed by exact division of x^l - 1 by
/// the cyclotomic polynomials of the proper divisors of l.
std::vector<BigInt> cyclotomic_polynomial(int n);

/// Element of Q(zeta_l), stored as the canonical representative of degree
/// < phi(l): integer numerators over one positive common denominator, with
/// the content and denominator coprime. Equality is structural.
///
/// A default-constructed CycScalar is an unbound zero: it acts as the
/// additive identity of every field and adopts the field of the other
/// operand in arithmetic.
class CycScalar {
 public:
  CycScalar() = default;
  explicit CycScalar(const CyclotomicField& field);
  CycScalar(const CyclotomicField& field, const Rat& value);
  CycScalar(const CyclotomicField& field, std::int64_t value);

  /// Sum of coeffs[i] * zeta^i, reduced modulo Phi_l (so exponents >= l are
  /// allowed and wrap through zeta^l = 1).
  static CycScalar from_poly(const CyclotomicField& field,
                             std::span<const BigInt> coeffs);
  static CycScalar from_poly(const CyclotomicField& field,
                             std::span<const std::int64_t> coeffs);
  /// Sum of c * zeta^e over (e, c) with arbitrary integer exponents.
  static CycScalar from_laurent(const CyclotomicField& field,
                                const std::map<std::int64_t, Rat>& terms);
  static CycScalar zeta(const CyclotomicField& field, std::int64_t k = 1) {
    return field.zeta_pow(k);
  }

  const CyclotomicField* field() const { return field_; }
  int ell() const;
  bool bound() const { return field_ != nullptr; }

  Rat coeff(int i) const;
  std::vector<Rat> coeffs() const;
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error when the value is not in Q.
  Rat to_rational() const;

  CycScalar inverse() const;
  CycScalar pow(std::int64_t e) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar& operator*=(const Rat& r);
  CycScalar operator-() const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend CycScalar operator*(CycScalar a, const Rat& r) { return a *= r; }
  friend CycScalar operator*(const Rat& r, CycScalar a) { return a *= r; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Polynomial in z with rational coefficients, highest power first,
  /// e.g. "z^3 - 1/2*z + 2". Zero prints as "0".
  std::string to_string() const;

 private:
  void normalize();
  void bind_like(const CycScalar& o);

  const CyclotomicField* field_ = nullptr;
  std::vector<BigInt> num_;  // size degree() when bound
  BigInt den_ = 1;
};

/// Reduces integer coefficients modulo the monic Phi_l in place; the result
/// has size phi(l).
void reduce_mod_cyclotomic(const CyclotomicField& field, std::vector<BigInt>& v);

const CyclotomicField& common_field(const CycScalar& a, const CycScalar& b);

inline bool is_zero(const CycScalar& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline CycScalar inverse(const CycScalar& x) { return x.inverse(); }
Rat inverse(const Rat& x);

}  // namespace hyperzeta
