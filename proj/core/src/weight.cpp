#include "hyperzeta/weight.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/matrix.hpp"
#include "hyperzeta/qcomb.hpp"

#include <stdexcept>

namespace hyperzeta {

namespace {

void check_index(const Weight& w, int i) {
  if (i < 1 || i > w.rank())
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(w.rank()));
}

}  // namespace

Weight::Weight(CartanPtr cartan, std::vector<std::int64_t> lam0, std::vector<Rat> lam1)
    : cartan_(std::move(cartan)), lam0_(std::move(lam0)), lam1_(std::move(lam1)) {
  if (!cartan_) throw std::invalid_argument("weight needs a Cartan datum");
  const auto n = static_cast<std::size_t>(cartan_->rank());
  if (lam0_.size() != n || lam1_.size() != n)
    throw std::invalid_argument("weight has wrong length for rank " + std::to_string(n));
  for (auto v : lam0_)
    if (v < 0 || v >= cartan_->ell())
      throw std::invalid_argument("lam0 entry " + std::to_string(v) + " outside [0, " +
                                  std::to_string(cartan_->ell()) + ")");
}

Weight Weight::identity(CartanPtr cartan) {
  const auto n = static_cast<std::size_t>(cartan->rank());
  return Weight(cartan, std::vector<std::int64_t>(n, 0), std::vector<Rat>(n, Rat(0)));
}

bool Weight::is_restricted() const {
  for (const auto& x : lam1_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const auto& x : lam1_)
    if (!is_integer(x)) return false;
  return true;
}

std::vector<std::int64_t> Weight::to_integers() const {
  if (!is_integral()) throw std::domain_error("weight " + to_string() + " is not integral");
  std::vector<std::int64_t> m;
  for (std::size_t j = 0; j < lam0_.size(); ++j)
    m.push_back(lam0_[j] + ell() * lam1_[j].get_num().get_si());
  return m;
}

std::string Weight::to_string() const {
  std::string s = "((";
  for (std::size_t j = 0; j < lam0_.size(); ++j) s += (j ? "," : "") + std::to_string(lam0_[j]);
  s += "),(";
  for (std::size_t j = 0; j < lam1_.size(); ++j) s += (j ? "," : "") + hyperzeta::to_string(lam1_[j]);
  return s + "))";
}

bool operator==(const Weight& a, const Weight& b) {
  check_same_datum(a, b);
  return a.lam0_ == b.lam0_ && a.lam1_ == b.lam1_;
}

void check_same_datum(const Weight& a, const Weight& b) {
  if (a.cartan() == b.cartan()) return;
  if (!(*a.cartan() == *b.cartan()))
    throw DomainMismatch("weights over different Cartan data (" + a.cartan()->name() + ", l=" +
                         std::to_string(a.ell()) + " vs " + b.cartan()->name() +
                         ", l=" + std::to_string(b.ell()) + ")");
}

Weight embed(const std::vector<std::int64_t>& m, CartanPtr cartan) {
  if (m.size() != static_cast<std::size_t>(cartan->rank()))
    throw std::invalid_argument("embed: vector length does not match rank");
  std::vector<std::int64_t> lam0;
  std::vector<Rat> lam1;
  for (auto v : m) {
    auto d = short_ladic(v, cartan->ell());
    lam0.push_back(d.m0);
    lam1.emplace_back(static_cast<long>(d.m1));
  }
  return Weight(std::move(cartan), std::move(lam0), std::move(lam1));
}

Weight embed(std::int64_t m, int ell) { return embed(std::vector<std::int64_t>{m}, CartanData::sl2(ell)); }

Weight weight_add(const Weight& lam, const Weight& mu) {
  check_same_datum(lam, mu);
  const int ell = lam.ell();
  auto lam0 = lam.lam0();
  auto lam1 = lam.lam1();
  for (std::size_t j = 0; j < lam0.size(); ++j) {
    lam0[j] += mu.lam0()[j];
    lam1[j] += mu.lam1()[j];
    if (lam0[j] >= ell) {
      lam0[j] -= ell;
      lam1[j] += 1;
    }
  }
  return Weight(lam.cartan(), std::move(lam0), std::move(lam1));
}

Weight weight_neg(const Weight& lam) {
  const int ell = lam.ell();
  auto lam0 = lam.lam0();
  auto lam1 = lam.lam1();
  for (std::size_t j = 0; j < lam0.size(); ++j) {
    if (lam0[j] > 0) {
      lam0[j] = ell - lam0[j];
      lam1[j] = -lam1[j] - 1;
    } else {
      lam1[j] = -lam1[j];
    }
  }
  return Weight(lam.cartan(), std::move(lam0), std::move(lam1));
}

Weight weight_sub(const Weight& lam, const Weight& mu) {
  check_same_datum(lam, mu);
  const int ell = lam.ell();
  auto lam0 = lam.lam0();
  auto lam1 = lam.lam1();
  for (std::size_t j = 0; j < lam0.size(); ++j) {
    lam0[j] -= mu.lam0()[j];
    lam1[j] -= mu.lam1()[j];
    if (lam0[j] < 0) {
      lam0[j] += ell;
      lam1[j] -= 1;
    }
  }
  return Weight(lam.cartan(), std::move(lam0), std::move(lam1));
}

Weight simple_root(int i, CartanPtr cartan) {
  if (i < 1 || i > cartan->rank())
    throw std::out_of_range("simple root index " + std::to_string(i) + " outside 1.." +
                            std::to_string(cartan->rank()));
  std::vector<std::int64_t> col;
  for (int j = 0; j < cartan->rank(); ++j) col.push_back(cartan->entry(j, i - 1));
  return embed(col, std::move(cartan));
}

bool dominance_leq(const Weight& lam, const Weight& mu) {
  const Weight diff = weight_sub(mu, lam);
  if (!diff.is_integral()) return false;
  const auto m = diff.to_integers();
  const auto& c = *lam.cartan();
  const auto n = static_cast<std::size_t>(c.rank());
  // Column i of the Cartan matrix is the simple root rho_i.
  RatMatrix a(n, n, Rat(0));
  std::vector<Rat> rhs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a(j, i) = c.entry(static_cast<int>(j), static_cast<int>(i));
    rhs.emplace_back(static_cast<long>(m[j]));
  }
  const auto x = solve(a, rhs);
  if (!x) return false;
  for (const auto& xi : *x)
    if (!is_integer(xi) || sgn(xi) < 0) return false;
  return true;
}

CycScalar eval_K(const Weight& lam, int i) {
  check_index(lam, i);
  const auto& field = CyclotomicField::get(lam.ell());
  const int d = lam.cartan()->symmetrizers()[static_cast<std::size_t>(i - 1)];
  return field.zeta_pow(d * lam.lam0()[static_cast<std::size_t>(i - 1)]);
}

Rat eval_B(const Weight& lam, int i) {
  check_index(lam, i);
  return lam.lam1()[static_cast<std::size_t>(i - 1)];
}

}  // namespace hyperzeta
