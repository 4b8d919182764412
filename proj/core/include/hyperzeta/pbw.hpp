#pragma once

#include "hyperzeta/classical.hpp"
#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/uzero.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace hyperzeta {

/// Normal-form monomial F^(b) K^c B^d E^(a).
struct PBWMonomial {
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t a = 0;
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Element of U_zeta(sl2) on the basis F^(b) K^c B^d E^(a).
///
/// Held as sum over (b, a) of F^(b) h_{b,a} E^(a) with Cartan coefficients
/// h_{b,a}; terms() expands these into monomial coefficients.
class PBWElem {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (b, a)
  using Terms = std::map<PBWMonomial, CycScalar>;

  PBWElem() = default;
  explicit PBWElem(int ell) : ell_(ell) { CyclotomicField::get(ell); }

  static PBWElem scalar(int ell, const CycScalar& s);
  static PBWElem one(int ell) { return cartan(UZeroElem::one(ell)); }
  static PBWElem cartan(const UZeroElem& h);
  /// F^(b) h E^(a)
  static PBWElem part(std::int64_t b, const UZeroElem& h, std::int64_t a);
  static PBWElem E(int ell, std::int64_t a = 1);
  static PBWElem F(int ell, std::int64_t b = 1);
  static PBWElem K(int ell, std::int64_t c = 1) { return cartan(UZeroElem::K(ell, c)); }
  static PBWElem B(int ell, int d = 1) { return cartan(UZeroElem::B(ell, d)); }
  static PBWElem monomial(int ell, const PBWMonomial& m, const CycScalar& coeff);

  int ell() const { return ell_; }
  const std::map<Key, UZeroElem>& parts() const { return parts_; }
  Terms terms() const;
  std::size_t term_count() const;
  bool is_zero() const { return parts_.empty(); }

  /// Terms joined as "(coeff) F^(b) K^c B^d E^(a)"; readable back by the
  /// expression parser.
  std::string to_string() const;

  PBWElem& operator+=(const PBWElem& o);
  PBWElem& operator-=(const PBWElem& o);
  PBWElem& operator*=(const CycScalar& s);
  PBWElem operator-() const;
  friend PBWElem operator+(PBWElem a, const PBWElem& b) { return a += b; }
  friend PBWElem operator-(PBWElem a, const PBWElem& b) { return a -= b; }
  friend PBWElem operator*(PBWElem a, const CycScalar& s) { return a *= s; }
  friend PBWElem operator*(const CycScalar& s, PBWElem a) { return a *= s; }
  friend PBWElem operator*(const PBWElem& x, const PBWElem& y);
  friend bool operator==(const PBWElem& x, const PBWElem& y);

 private:
  void adopt(const PBWElem& o);
  void add_part(const Key& key, const UZeroElem& h);

  int ell_ = 0;  // 0 marks an unbound zero
  std::map<Key, UZeroElem> parts_;
};

/// Monomial text, e.g. "F^(2) K B E"; empty for the unit.
std::string pbw_monomial(const PBWMonomial& m);

/// Normal-ordered product. Uses
///   F^(b) F^(b') = [b+b' over b] F^(b+b'), likewise for E,
///   E^(a) F^(b) = sum_t F^(b-t) [K; 2t-a-b over t] E^(a-t),
///   h F^(b) = F^(b) h(. - 2b),  E^(a) h = h(. - 2a) E^(a),
/// all at zeta, with Cartan factors handled by evaluation shifts.
PBWElem pbw_mul(const PBWElem& x, const PBWElem& y);
PBWElem pbw_pow(const PBWElem& x, std::int64_t n);

/// The Cartan shift sigma_a: sigma_a(h)(m) = h(m + 2a).
UZeroElem cartan_shift(const UZeroElem& h, std::int64_t a);

/// gamma(f^s h^t e^r) = (F^(l))^s B^t (E^(l))^r, extended linearly.
PBWElem gamma(const ClassicalElem& x, int ell);

/// Quantum Frobenius on the basis: F^(b) K^c B^d E^(a) goes to
/// f^(b/l)/(b/l)! h^d e^(a/l)/(a/l)! when l divides a and b, else 0.
/// Throws std::domain_error if an image coefficient is not rational.
ClassicalElem frobenius(const PBWElem& x);

}  // namespace hyperzeta
