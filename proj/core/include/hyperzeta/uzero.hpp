#pragma once

#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/rational.hpp"
#include "hyperzeta/weight.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hyperzeta {

/// Element of the rank-one Cartan part kG[B], G = <K | K^l = 1>, B = binom(K, l).
///
/// Stored in residue form: with the idempotents e_r = (1/l) sum_c zeta^(-cr) K^c
/// of kG, every element is uniquely sum_r e_r p_r(B) for polynomials p_r.
/// Evaluation at the integral weight m = m0 + l*m1 is p_m0(m1), products are
/// componentwise, and the coefficients on the monomials K^c B^d are
/// recovered by a discrete Fourier transform (see terms()).
class UZeroElem {
 public:
  /// Polynomial in one variable, low degree first, no trailing zeros.
  using Poly = std::vector<CycScalar>;
  using Terms = std::map<std::pair<int, int>, CycScalar>;

  UZeroElem() = default;
  explicit UZeroElem(int ell);

  static UZeroElem scalar(int ell, const CycScalar& s);
  static UZeroElem scalar(int ell, const Rat& s);
  static UZeroElem one(int ell) { return scalar(ell, Rat(1)); }
  /// K^c for any integer c.
  static UZeroElem K(int ell, std::int64_t c = 1);
  /// B^d, d >= 0.
  static UZeroElem B(int ell, int d = 1);
  /// coeff * K^c * B^d.
  static UZeroElem monomial(int ell, std::int64_t c, int d, const CycScalar& coeff);
  static UZeroElem from_terms(int ell, const Terms& terms);
  /// Builds sum_r e_r p_r(B) from l residue polynomials.
  static UZeroElem from_components(int ell, std::vector<Poly> components);

  int ell() const { return ell_; }
  const CyclotomicField& field() const;
  const std::vector<Poly>& components() const { return comps_; }

  bool is_zero() const;
  /// Largest power of B present; -1 for zero.
  int degree() const;
  bool in_group_algebra() const { return degree() <= 0; }

  /// Value at the integral weight m.
  CycScalar eval(std::int64_t m) const;
  /// Value at the weight (r, x): K -> zeta^r, B -> x.
  CycScalar eval_at(std::int64_t r, const Rat& x) const;
  CycScalar eval(const Weight& w) const;

  /// The element h' with h'(m) = h(m + k) for every integer m.
  UZeroElem translate(std::int64_t k) const;

  /// Coefficients on K^c B^d keyed by (c, d), zeros omitted.
  Terms terms() const;
  CycScalar coeff(int c, int d) const;

  /// e.g. "B + 1/3 + (z) K"
  std::string to_string() const;

  UZeroElem& operator+=(const UZeroElem& o);
  UZeroElem& operator-=(const UZeroElem& o);
  UZeroElem& operator*=(const UZeroElem& o);
  UZeroElem& operator*=(const CycScalar& s);
  UZeroElem operator-() const;

  friend UZeroElem operator+(UZeroElem a, const UZeroElem& b) { return a += b; }
  friend UZeroElem operator-(UZeroElem a, const UZeroElem& b) { return a -= b; }
  friend UZeroElem operator*(UZeroElem a, const UZeroElem& b) { return a *= b; }
  friend UZeroElem operator*(UZeroElem a, const CycScalar& s) { return a *= s; }
  friend UZeroElem operator*(const CycScalar& s, UZeroElem a) { return a *= s; }
  friend bool operator==(const UZeroElem& a, const UZeroElem& b);

 private:
  void adopt(const UZeroElem& o);

  int ell_ = 0;  // 0 marks an unbound zero
  std::vector<Poly> comps_;
};

/// Monomial text "K^c B^d" (empty for c = d = 0).
std::string cartan_monomial(int c, int d);

/// The unique element of degree <= dmax matching values(m) on the grid
/// m = r + l*j, r in [0, l), j in [0, dmax], found by Newton interpolation
/// per residue class. With verify set, the rows j = dmax + 1 and j = -1 are
/// re-evaluated and any disagreement raises InvariantViolation.
UZeroElem uzero_interpolate(int ell, int dmax, const std::function<CycScalar(std::int64_t)>& values,
                            bool verify = true);

/// The element [K; c over t] whose value at m is gauss_binom_at(m + c, t),
/// interpolated with degree bound floor(t/l). Results are memoized.
UZeroElem kshift_binom(std::int64_t c, std::int64_t t, int ell);

/// Right-hand sides of the two expansions of [K; -c over l] and [K; c over l]
/// in terms of K^(+-s) [K; 0 over l-s], c >= 0.
UZeroElem kshift_down_expansion(std::int64_t c, int ell);
UZeroElem kshift_up_expansion(std::int64_t c, int ell);

/// Scalar specializations at K = zeta^m of the two expansions, 0 <= m < l.
/// printed_exponent selects the exponent l*c - s*(m - c) for the upward
/// sum exactly as commonly printed; the default is l*c - s*(m + c), which is
/// what substituting K = zeta^m into the K^(-s) expansion produces.
CycScalar binom_down_expansion_at(std::int64_t m, std::int64_t c, int ell);
CycScalar binom_up_expansion_at(std::int64_t m, std::int64_t c, int ell,
                                bool printed_exponent = false);

/// Coordinates on W = span{K^c, K^c B : c in [0, l)} ordered by c + l*d.
/// Throws std::domain_error if x has B-degree above one.
std::vector<CycScalar> w_coordinates(const UZeroElem& x);
UZeroElem from_w_coordinates(int ell, const std::vector<CycScalar>& coords);

/// Element of W (x) W as a dense (2l) x (2l) coefficient array.
class TensorSq {
 public:
  explicit TensorSq(int ell);
  /// x (x) y for x, y in W.
  static TensorSq outer(const UZeroElem& x, const UZeroElem& y);

  int ell() const { return ell_; }
  std::size_t side() const { return side_; }
  CycScalar& at(std::size_t i, std::size_t j) { return data_[i * side_ + j]; }
  const CycScalar& at(std::size_t i, std::size_t j) const { return data_[i * side_ + j]; }

  /// Applies K^c (x) K^c on the left.
  TensorSq group_shift(std::int64_t c) const;
  /// Exchanges the two tensor factors.
  TensorSq swapped() const;
  bool is_zero() const;
  std::size_t nonzeros() const;
  /// Value under eval_m (x) eval_mprime.
  CycScalar eval(std::int64_t m, std::int64_t mprime) const;

  TensorSq& operator+=(const TensorSq& o);
  TensorSq& operator-=(const TensorSq& o);
  friend TensorSq operator+(TensorSq a, const TensorSq& b) { return a += b; }
  friend TensorSq operator-(TensorSq a, const TensorSq& b) { return a -= b; }
  friend bool operator==(const TensorSq& a, const TensorSq& b);

 private:
  int ell_;
  std::size_t side_;
  std::vector<CycScalar> data_;
};

/// Delta(B) = sum_{j=0}^{l} binom(K, l-j) K^(-j) (x) binom(K, j) K^(l-j).
TensorSq coproduct_B(int ell);
/// Delta on W, extended linearly from Delta(K^c) = K^c (x) K^c and
/// Delta(K^c B) = (K^c (x) K^c) Delta(B).
TensorSq coproduct(const UZeroElem& x);
/// Delta(x) - x (x) 1 - 1 (x) x.
TensorSq primitivity_residual(const UZeroElem& x);

/// a_i = (1/l^2) sum_j j zeta^(-ij), i in [0, l).
std::vector<CycScalar> primitive_coefficients(int ell);
/// B + sum_i a_i K^i.
UZeroElem primitive_element(int ell);
/// Basis of {x in W : Delta(x) = x (x) 1 + 1 (x) x}.
std::vector<UZeroElem> primitive_space(int ell);

}  // namespace hyperzeta
