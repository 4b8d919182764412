#include "hyperzeta/uzero.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/format.hpp"
#include "hyperzeta/matrix.hpp"
#include "hyperzeta/qcomb.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hyperzeta {

namespace {

using Poly = UZeroElem::Poly;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void add_into(Poly& acc, const Poly& p, const CyclotomicField& f) {
  if (acc.size() < p.size()) acc.resize(p.size(), f.zero());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) acc[i] += p[i];
  trim(acc);
}

void sub_into(Poly& acc, const Poly& p, const CyclotomicField& f) {
  if (acc.size() < p.size()) acc.resize(p.size(), f.zero());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) acc[i] -= p[i];
  trim(acc);
}

Poly mul(const Poly& a, const Poly& b, const CyclotomicField& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

CycScalar evaluate(const Poly& p, const Rat& x, const CyclotomicField& f) {
  CycScalar acc = f.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// p(x + s) by expanding each power binomially.
Poly taylor_shift(const Poly& p, std::int64_t s, const CyclotomicField& f) {
  if (s == 0 || p.size() <= 1) return p;
  Poly out(p.size(), f.zero());
  const Rat shift(static_cast<long>(s));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    Rat spow = 1;  // s^(i-j) as j runs down from i
    for (std::size_t j = i + 1; j-- > 0;) {
      out[j] += p[i] * (Rat(binomial(BigInt(static_cast<long>(i)), static_cast<std::int64_t>(j))) * spow);
      spow *= shift;
    }
  }
  trim(out);
  return out;
}

// Power-basis coefficients of binom(x, k) = x(x-1)...(x-k+1)/k!.
std::vector<Rat> binomial_basis(std::size_t k) {
  std::vector<Rat> c{Rat(1)};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * static_cast<long>(i);
    }
    c = std::move(next);
  }
  const Rat inv_fact = Rat(1) / Rat(factorial(static_cast<std::int64_t>(k)));
  for (auto& x : c) x *= inv_fact;
  return c;
}

}  // namespace

UZeroElem::UZeroElem(int ell) : ell_(ell) {
  CyclotomicField::get(ell);
  comps_.assign(static_cast<std::size_t>(ell), Poly{});
}

const CyclotomicField& UZeroElem::field() const {
  if (ell_ == 0) throw std::logic_error("unbound Cartan element has no field");
  return CyclotomicField::get(ell_);
}

UZeroElem UZeroElem::scalar(int ell, const CycScalar& s) {
  UZeroElem x(ell);
  if (s.is_zero()) return x;
  const auto& f = x.field();
  for (auto& p : x.comps_) p = Poly{s.bound() ? s : f.zero()};
  return x;
}

UZeroElem UZeroElem::scalar(int ell, const Rat& s) {
  return scalar(ell, CycScalar(CyclotomicField::get(ell), s));
}

UZeroElem UZeroElem::K(int ell, std::int64_t c) {
  UZeroElem x(ell);
  const auto& f = x.field();
  for (int r = 0; r < ell; ++r) x.comps_[static_cast<std::size_t>(r)] = Poly{f.zeta_pow(c * r)};
  return x;
}

UZeroElem UZeroElem::B(int ell, int d) {
  if (d < 0) throw std::invalid_argument("negative power of B");
  UZeroElem x(ell);
  const auto& f = x.field();
  Poly p(static_cast<std::size_t>(d) + 1, f.zero());
  p.back() = f.one();
  for (auto& comp : x.comps_) comp = p;
  return x;
}

UZeroElem UZeroElem::monomial(int ell, std::int64_t c, int d, const CycScalar& coeff) {
  if (d < 0) throw std::invalid_argument("negative power of B");
  UZeroElem x(ell);
  if (coeff.is_zero()) return x;
  const auto& f = x.field();
  for (int r = 0; r < ell; ++r) {
    Poly p(static_cast<std::size_t>(d) + 1, f.zero());
    p.back() = coeff * f.zeta_pow(c * r);
    x.comps_[static_cast<std::size_t>(r)] = std::move(p);
  }
  return x;
}

UZeroElem UZeroElem::from_terms(int ell, const Terms& terms) {
  UZeroElem x(ell);
  const auto& f = x.field();
  for (const auto& [key, coeff] : terms) {
    if (coeff.is_zero()) continue;
    const auto [c, d] = key;
    if (d < 0) throw std::invalid_argument("negative power of B");
    for (int r = 0; r < ell; ++r) {
      auto& p = x.comps_[static_cast<std::size_t>(r)];
      if (p.size() <= static_cast<std::size_t>(d)) p.resize(static_cast<std::size_t>(d) + 1, f.zero());
      p[static_cast<std::size_t>(d)] += coeff * f.zeta_pow(static_cast<std::int64_t>(c) * r);
    }
  }
  for (auto& p : x.comps_) trim(p);
  return x;
}

UZeroElem UZeroElem::from_components(int ell, std::vector<Poly> components) {
  if (components.size() != static_cast<std::size_t>(ell))
    throw std::invalid_argument("need one residue polynomial per class");
  UZeroElem x(ell);
  const auto& f = x.field();
  for (auto& p : components) {
    for (auto& c : p)
      if (!c.bound()) c = f.zero();
    trim(p);
  }
  x.comps_ = std::move(components);
  return x;
}

bool UZeroElem::is_zero() const {
  for (const auto& p : comps_)
    if (!p.empty()) return false;
  return true;
}

int UZeroElem::degree() const {
  int d = -1;
  for (const auto& p : comps_) d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

CycScalar UZeroElem::eval(std::int64_t m) const {
  const auto lad = short_ladic(m, ell_);
  return eval_at(lad.m0, Rat(static_cast<long>(lad.m1)));
}

CycScalar UZeroElem::eval_at(std::int64_t r, const Rat& x) const {
  return evaluate(comps_[static_cast<std::size_t>(floor_mod(r, ell_))], x, field());
}

CycScalar UZeroElem::eval(const Weight& w) const {
  if (w.rank() != 1 || w.ell() != ell_)
    throw DomainMismatch("Cartan element over l=" + std::to_string(ell_) +
                         " evaluated at weight " + w.to_string());
  return eval_at(w.lam0()[0], w.lam1()[0]);
}

UZeroElem UZeroElem::translate(std::int64_t k) const {
  if (ell_ == 0 || k == 0) return *this;
  UZeroElem out(ell_);
  const auto& f = field();
  for (std::int64_t r = 0; r < ell_; ++r) {
    const std::int64_t target = r + k;
    const auto& src = comps_[static_cast<std::size_t>(floor_mod(target, ell_))];
    out.comps_[static_cast<std::size_t>(r)] = taylor_shift(src, floor_div(target, ell_), f);
  }
  return out;
}

UZeroElem::Terms UZeroElem::terms() const {
  Terms out;
  if (ell_ == 0) return out;
  const auto& f = field();
  const Rat inv_ell = Rat(1, static_cast<unsigned long>(ell_));
  const int deg = degree();
  for (int d = 0; d <= deg; ++d)
    for (int c = 0; c < ell_; ++c) {
      CycScalar acc = f.zero();
      for (int r = 0; r < ell_; ++r) {
        const auto& p = comps_[static_cast<std::size_t>(r)];
        if (static_cast<std::size_t>(d) < p.size() && !p[static_cast<std::size_t>(d)].is_zero())
          acc += p[static_cast<std::size_t>(d)] * f.zeta_pow(-static_cast<std::int64_t>(c) * r);
      }
      acc *= inv_ell;
      if (!acc.is_zero()) out.emplace(std::make_pair(c, d), std::move(acc));
    }
  return out;
}

CycScalar UZeroElem::coeff(int c, int d) const {
  const auto t = terms();
  auto it = t.find({floor_mod(c, ell_), d});
  return it == t.end() ? field().zero() : it->second;
}

std::string cartan_monomial(int c, int d) {
  std::string s;
  if (c == 1)
    s = "K";
  else if (c != 0)
    s = "K^" + std::to_string(c);
  if (d > 0) {
    if (!s.empty()) s += " ";
    s += d == 1 ? "B" : "B^" + std::to_string(d);
  }
  return s;
}

std::string UZeroElem::to_string() const {
  std::vector<std::pair<CycScalar, std::string>> parts;
  for (const auto& [key, coeff] : terms()) parts.emplace_back(coeff, cartan_monomial(key.first, key.second));
  return format_terms(parts);
}

void UZeroElem::adopt(const UZeroElem& o) {
  if (o.ell_ == 0) return;
  if (ell_ == 0) {
    *this = UZeroElem(o.ell_);
    return;
  }
  if (ell_ != o.ell_)
    throw DomainMismatch("Cartan elements over l=" + std::to_string(ell_) + " and l=" +
                         std::to_string(o.ell_));
}

UZeroElem& UZeroElem::operator+=(const UZeroElem& o) {
  adopt(o);
  if (o.ell_ == 0) return *this;
  const auto& f = field();
  for (std::size_t r = 0; r < comps_.size(); ++r) add_into(comps_[r], o.comps_[r], f);
  return *this;
}

UZeroElem& UZeroElem::operator-=(const UZeroElem& o) {
  adopt(o);
  if (o.ell_ == 0) return *this;
  const auto& f = field();
  for (std::size_t r = 0; r < comps_.size(); ++r) sub_into(comps_[r], o.comps_[r], f);
  return *this;
}

UZeroElem& UZeroElem::operator*=(const UZeroElem& o) {
  adopt(o);
  if (o.ell_ == 0) {
    for (auto& p : comps_) p.clear();
    return *this;
  }
  const auto& f = field();
  for (std::size_t r = 0; r < comps_.size(); ++r) comps_[r] = mul(comps_[r], o.comps_[r], f);
  return *this;
}

UZeroElem& UZeroElem::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    for (auto& p : comps_) p.clear();
    return *this;
  }
  for (auto& p : comps_)
    for (auto& c : p)
      if (!c.is_zero()) c *= s;
  return *this;
}

UZeroElem UZeroElem::operator-() const {
  UZeroElem out = *this;
  for (auto& p : out.comps_)
    for (auto& c : p) c = -c;
  return out;
}

bool operator==(const UZeroElem& a, const UZeroElem& b) {
  if (a.ell_ == 0 || b.ell_ == 0) return a.is_zero() && b.is_zero();
  if (a.ell_ != b.ell_)
    throw DomainMismatch("comparing Cartan elements over different l");
  return a.comps_ == b.comps_;
}

UZeroElem uzero_interpolate(int ell, int dmax, const std::function<CycScalar(std::int64_t)>& values,
                            bool verify) {
  if (dmax < 0) throw std::invalid_argument("interpolation degree bound must be >= 0");
  const auto& f = CyclotomicField::get(ell);
  std::vector<std::vector<Rat>> basis;
  for (int k = 0; k <= dmax; ++k) basis.push_back(binomial_basis(static_cast<std::size_t>(k)));

  std::vector<Poly> comps;
  for (std::int64_t r = 0; r < ell; ++r) {
    std::vector<CycScalar> diff;
    for (std::int64_t j = 0; j <= dmax; ++j) diff.push_back(values(r + ell * j));
    // Newton forward differences: after step k, diff[k] holds Delta^k y_0.
    for (int k = 1; k <= dmax; ++k)
      for (int j = dmax; j >= k; --j) diff[static_cast<std::size_t>(j)] -= diff[static_cast<std::size_t>(j - 1)];
    Poly p(static_cast<std::size_t>(dmax) + 1, f.zero());
    for (int k = 0; k <= dmax; ++k) {
      const auto& dk = diff[static_cast<std::size_t>(k)];
      if (dk.is_zero()) continue;
      for (std::size_t i = 0; i < basis[static_cast<std::size_t>(k)].size(); ++i)
        if (sgn(basis[static_cast<std::size_t>(k)][i]) != 0) p[i] += dk * basis[static_cast<std::size_t>(k)][i];
    }
    trim(p);
    if (verify)
      for (std::int64_t j : {static_cast<std::int64_t>(dmax) + 1, std::int64_t{-1}}) {
        const CycScalar want = values(r + ell * j);
        const CycScalar got = evaluate(p, Rat(static_cast<long>(j)), f);
        if (!(want == got))
          throw InvariantViolation("interpolation with degree bound " + std::to_string(dmax) +
                                   " disagrees at m=" + std::to_string(r + ell * j) + ": expected " +
                                   want.to_string() + ", got " + got.to_string());
      }
    comps.push_back(std::move(p));
  }
  return UZeroElem::from_components(ell, std::move(comps));
}

UZeroElem kshift_binom(std::int64_t c, std::int64_t t, int ell) {
  if (t < 0) throw std::invalid_argument("kshift_binom needs t >= 0");
  using Key = std::tuple<int, std::int64_t, std::int64_t>;
  static std::mutex mutex;
  static std::map<Key, UZeroElem> cache;
  const Key key{ell, c, t};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  UZeroElem value = uzero_interpolate(ell, static_cast<int>(t / ell), [&](std::int64_t m) {
    return gauss_binom_at(m + c, t, ell);
  });
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

UZeroElem kshift_down_expansion(std::int64_t c, int ell) {
  if (c < 0) throw std::invalid_argument("expansion needs c >= 0");
  const auto& f = CyclotomicField::get(ell);
  UZeroElem sum(ell);
  for (std::int64_t s = 0; s <= ell; ++s) {
    CycScalar coeff = f.zeta_pow(c * (ell - s)) * gauss_binom_at(c + s - 1, s, ell);
    if (s % 2 == 1) coeff = -coeff;
    if (coeff.is_zero()) continue;
    sum += UZeroElem::K(ell, s) * kshift_binom(0, ell - s, ell) * coeff;
  }
  return sum;
}

UZeroElem kshift_up_expansion(std::int64_t c, int ell) {
  if (c < 0) throw std::invalid_argument("expansion needs c >= 0");
  const auto& f = CyclotomicField::get(ell);
  UZeroElem sum(ell);
  for (std::int64_t s = 0; s <= ell; ++s) {
    CycScalar coeff = f.zeta_pow(c * (ell - s)) * gauss_binom_at(c, s, ell);
    if (coeff.is_zero()) continue;
    sum += UZeroElem::K(ell, -s) * kshift_binom(0, ell - s, ell) * coeff;
  }
  return sum;
}

CycScalar binom_down_expansion_at(std::int64_t m, std::int64_t c, int ell) {
  const auto& f = CyclotomicField::get(ell);
  CycScalar sum = f.zero();
  for (std::int64_t s = 0; s <= ell; ++s) {
    CycScalar term = f.zeta_pow(ell * c + s * (m - c)) * gauss_binom_at(c + s - 1, s, ell) *
                     gauss_binom_at(m, ell - s, ell);
    if (s % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

CycScalar binom_up_expansion_at(std::int64_t m, std::int64_t c, int ell, bool printed_exponent) {
  const auto& f = CyclotomicField::get(ell);
  CycScalar sum = f.zero();
  for (std::int64_t s = 0; s <= ell; ++s) {
    const std::int64_t e = printed_exponent ? ell * c - s * (m - c) : ell * c - s * (m + c);
    sum += f.zeta_pow(e) * gauss_binom_at(c, s, ell) * gauss_binom_at(m, ell - s, ell);
  }
  return sum;
}

std::vector<CycScalar> w_coordinates(const UZeroElem& x) {
  const int ell = x.ell();
  const auto& f = x.field();
  if (x.degree() > 1) throw std::domain_error("element " + x.to_string() + " is not in W");
  std::vector<CycScalar> out(2 * static_cast<std::size_t>(ell), f.zero());
  for (const auto& [key, coeff] : x.terms())
    out[static_cast<std::size_t>(key.first + ell * key.second)] = coeff;
  return out;
}

UZeroElem from_w_coordinates(int ell, const std::vector<CycScalar>& coords) {
  if (coords.size() != 2 * static_cast<std::size_t>(ell))
    throw std::invalid_argument("W has dimension 2l");
  UZeroElem::Terms t;
  for (int i = 0; i < 2 * ell; ++i)
    if (!coords[static_cast<std::size_t>(i)].is_zero()) t.emplace(std::make_pair(i % ell, i / ell), coords[static_cast<std::size_t>(i)]);
  return UZeroElem::from_terms(ell, t);
}

TensorSq::TensorSq(int ell)
    : ell_(ell),
      side_(2 * static_cast<std::size_t>(ell)),
      data_(side_ * side_, CyclotomicField::get(ell).zero()) {}

TensorSq TensorSq::outer(const UZeroElem& x, const UZeroElem& y) {
  const int ell = x.ell() ? x.ell() : y.ell();
  TensorSq out(ell);
  if (x.is_zero() || y.is_zero()) return out;
  const auto cx = w_coordinates(x);
  const auto cy = w_coordinates(y);
  for (std::size_t i = 0; i < out.side_; ++i) {
    if (cx[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.side_; ++j)
      if (!cy[j].is_zero()) out.at(i, j) = cx[i] * cy[j];
  }
  return out;
}

TensorSq TensorSq::group_shift(std::int64_t c) const {
  TensorSq out(ell_);
  const auto ell = static_cast<std::size_t>(ell_);
  const auto shift = static_cast<std::size_t>(floor_mod(c, ell_));
  auto move = [&](std::size_t i) { return (i % ell + shift) % ell + ell * (i / ell); };
  for (std::size_t i = 0; i < side_; ++i)
    for (std::size_t j = 0; j < side_; ++j)
      if (!at(i, j).is_zero()) out.at(move(i), move(j)) = at(i, j);
  return out;
}

TensorSq TensorSq::swapped() const {
  TensorSq out(ell_);
  for (std::size_t i = 0; i < side_; ++i)
    for (std::size_t j = 0; j < side_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool TensorSq::is_zero() const { return nonzeros() == 0; }

std::size_t TensorSq::nonzeros() const {
  std::size_t n = 0;
  for (const auto& v : data_)
    if (!v.is_zero()) ++n;
  return n;
}

CycScalar TensorSq::eval(std::int64_t m, std::int64_t mprime) const {
  const auto& f = CyclotomicField::get(ell_);
  auto basis_value = [&](std::size_t i, std::int64_t x) {
    const auto lad = short_ladic(x, ell_);
    CycScalar v = f.zeta_pow(static_cast<std::int64_t>(i % side_ % static_cast<std::size_t>(ell_)) * x);
    if (i >= static_cast<std::size_t>(ell_)) v *= Rat(static_cast<long>(lad.m1));
    return v;
  };
  CycScalar sum = f.zero();
  for (std::size_t i = 0; i < side_; ++i)
    for (std::size_t j = 0; j < side_; ++j)
      if (!at(i, j).is_zero()) sum += at(i, j) * basis_value(i, m) * basis_value(j, mprime);
  return sum;
}

TensorSq& TensorSq::operator+=(const TensorSq& o) {
  if (o.ell_ != ell_) throw DomainMismatch("tensor squares over different l");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

TensorSq& TensorSq::operator-=(const TensorSq& o) {
  if (o.ell_ != ell_) throw DomainMismatch("tensor squares over different l");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

bool operator==(const TensorSq& a, const TensorSq& b) {
  return a.ell_ == b.ell_ && a.data_ == b.data_;
}

TensorSq coproduct_B(int ell) {
  TensorSq out(ell);
  for (std::int64_t j = 0; j <= ell; ++j) {
    const UZeroElem left = kshift_binom(0, ell - j, ell) * UZeroElem::K(ell, -j);
    const UZeroElem right = kshift_binom(0, j, ell) * UZeroElem::K(ell, ell - j);
    out += TensorSq::outer(left, right);
  }
  return out;
}

TensorSq coproduct(const UZeroElem& x) {
  const int ell = x.ell();
  const auto coords = w_coordinates(x);
  TensorSq out(ell);
  bool need_b = false;
  for (int c = 0; c < ell; ++c) {
    const auto& v = coords[static_cast<std::size_t>(c)];
    if (!v.is_zero()) out.at(static_cast<std::size_t>(c), static_cast<std::size_t>(c)) += v;
    if (!coords[static_cast<std::size_t>(c + ell)].is_zero()) need_b = true;
  }
  if (!need_b) return out;
  const TensorSq db = coproduct_B(ell);
  for (int c = 0; c < ell; ++c) {
    const auto& v = coords[static_cast<std::size_t>(c + ell)];
    if (v.is_zero()) continue;
    TensorSq shifted = db.group_shift(c);
    for (std::size_t i = 0; i < shifted.side(); ++i)
      for (std::size_t j = 0; j < shifted.side(); ++j)
        if (!shifted.at(i, j).is_zero()) out.at(i, j) += v * shifted.at(i, j);
  }
  return out;
}

TensorSq primitivity_residual(const UZeroElem& x) {
  const int ell = x.ell();
  const UZeroElem one = UZeroElem::one(ell);
  return coproduct(x) - TensorSq::outer(x, one) - TensorSq::outer(one, x);
}

std::vector<CycScalar> primitive_coefficients(int ell) {
  const auto& f = CyclotomicField::get(ell);
  const Rat scale(1, static_cast<unsigned long>(ell) * static_cast<unsigned long>(ell));
  std::vector<CycScalar> a;
  for (std::int64_t i = 0; i < ell; ++i) {
    CycScalar s = f.zero();
    for (std::int64_t j = 0; j < ell; ++j) s += f.zeta_pow(-i * j) * Rat(static_cast<long>(j));
    a.push_back(s * scale);
  }
  return a;
}

UZeroElem primitive_element(int ell) {
  UZeroElem p = UZeroElem::B(ell);
  const auto a = primitive_coefficients(ell);
  for (int i = 0; i < ell; ++i) p += UZeroElem::monomial(ell, i, 0, a[static_cast<std::size_t>(i)]);
  return p;
}

std::vector<UZeroElem> primitive_space(int ell) {
  const auto& f = CyclotomicField::get(ell);
  const std::size_t w = 2 * static_cast<std::size_t>(ell);
  ExactMatrix system(w * w, w, f.zero());
  for (std::size_t k = 0; k < w; ++k) {
    std::vector<CycScalar> e(w, f.zero());
    e[k] = f.one();
    const TensorSq r = primitivity_residual(from_w_coordinates(ell, e));
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) system(i * w + j, k) = r.at(i, j);
  }
  std::vector<UZeroElem> out;
  for (const auto& v : kernel(system)) out.push_back(from_w_coordinates(ell, v));
  return out;
}

}  // namespace hyperzeta
