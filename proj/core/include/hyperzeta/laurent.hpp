#pragma once

#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperzeta {

class LaurentPoly;

/// Raised by LaurentPoly::exact_div when the divisor does not divide.
class InexactDivision : public std::domain_error {
 public:
  InexactDivision(const std::string& what, std::map<std::int64_t, BigInt> remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const std::map<std::int64_t, BigInt>& remainder() const { return remainder_; }

 private:
  std::map<std::int64_t, BigInt> remainder_;
};

/// Integer Laurent polynomial in q, held densely between its lowest and
/// highest nonzero exponents. No zero coefficients at either end; the zero
/// polynomial has no coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<std::int64_t, BigInt>& terms);
  /// c * q^e
  static LaurentPoly monomial(std::int64_t e, const BigInt& c = 1);
  static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
  /// q^n - q^(-n)
  static LaurentPoly q_difference(std::int64_t n);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt coeff(std::int64_t e) const;
  std::map<std::int64_t, BigInt> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Exact quotient in Z[q, q^-1]. Throws InexactDivision carrying the
  /// remainder when the division does not terminate with zero remainder,
  /// and std::domain_error for a zero divisor.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  /// Substitutes q -> zeta^power in Q(zeta_l).
  CycScalar specialize(const CyclotomicField& field, std::int64_t power = 1) const;

  /// Highest exponent first, e.g. "q^2 - 1 + q^-2"; a negative leading
  /// coefficient on a multi-term polynomial prints as "-(...)".
  std::string to_string() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace hyperzeta
