#pragma once

#include "hyperzeta/cartan.hpp"
#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperzeta {

/// Element (lam0, lam1) of the weight group: lam0 in [0, l)^n, lam1 in Q^n.
///
/// The group law carries from the finite factor into the additive one, so
/// the integral weights embed(m) form a copy of Z^n. A weight is restricted
/// when lam1 = 0.
class Weight {
 public:
  Weight(CartanPtr cartan, std::vector<std::int64_t> lam0, std::vector<Rat> lam1);
  static Weight identity(CartanPtr cartan);

  const CartanPtr& cartan() const { return cartan_; }
  int rank() const { return cartan_->rank(); }
  int ell() const { return cartan_->ell(); }
  const std::vector<std::int64_t>& lam0() const { return lam0_; }
  const std::vector<Rat>& lam1() const { return lam1_; }

  bool is_restricted() const;
  /// True when every lam1 entry is an integer, i.e. the weight is embed(m).
  bool is_integral() const;
  /// Inverse of embed on integral weights: m_j = lam0_j + l*lam1_j.
  std::vector<std::int64_t> to_integers() const;

  /// "((2,4),(0,-1))"
  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b);

 private:
  CartanPtr cartan_;
  std::vector<std::int64_t> lam0_;
  std::vector<Rat> lam1_;
};

/// Throws DomainMismatch unless both weights live over the same datum.
void check_same_datum(const Weight& a, const Weight& b);

/// Componentwise short l-adic decomposition of an integer vector.
Weight embed(const std::vector<std::int64_t>& m, CartanPtr cartan);
/// Rank-one shorthand over the interned sl2 datum.
Weight embed(std::int64_t m, int ell);

Weight weight_add(const Weight& lam, const Weight& mu);
Weight weight_neg(const Weight& lam);
Weight weight_sub(const Weight& lam, const Weight& mu);

/// embed of the i-th column of the Cartan matrix; i is 1-based.
Weight simple_root(int i, CartanPtr cartan);

/// lam <= mu iff mu - lam is a nonnegative integral combination of simple
/// roots.
bool dominance_leq(const Weight& lam, const Weight& mu);

/// Value of K_i: zeta^(d_i * lam0_i). i is 1-based.
CycScalar eval_K(const Weight& lam, int i);
/// Value of binom(K_i, l): lam1_i. i is 1-based.
Rat eval_B(const Weight& lam, int i);

}  // namespace hyperzeta
