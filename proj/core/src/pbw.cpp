#include "hyperzeta/pbw.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/format.hpp"
#include "hyperzeta/qcomb.hpp"

#include <stdexcept>

namespace hyperzeta {

PBWElem PBWElem::scalar(int ell, const CycScalar& s) { return cartan(UZeroElem::scalar(ell, s)); }

PBWElem PBWElem::cartan(const UZeroElem& h) { return part(0, h, 0); }

PBWElem PBWElem::part(std::int64_t b, const UZeroElem& h, std::int64_t a) {
  if (b < 0 || a < 0) throw std::invalid_argument("negative divided power");
  if (h.ell() == 0) throw std::invalid_argument("PBW part needs a bound Cartan element");
  PBWElem x(h.ell());
  if (!h.is_zero()) x.parts_.emplace(Key{b, a}, h);
  return x;
}

PBWElem PBWElem::E(int ell, std::int64_t a) { return part(0, UZeroElem::one(ell), a); }
PBWElem PBWElem::F(int ell, std::int64_t b) { return part(b, UZeroElem::one(ell), 0); }

PBWElem PBWElem::monomial(int ell, const PBWMonomial& m, const CycScalar& coeff) {
  return part(m.b, UZeroElem::monomial(ell, m.c, static_cast<int>(m.d), coeff), m.a);
}

PBWElem::Terms PBWElem::terms() const {
  Terms out;
  for (const auto& [key, h] : parts_)
    for (const auto& [cd, coeff] : h.terms())
      out.emplace(PBWMonomial{key.first, cd.first, cd.second, key.second}, coeff);
  return out;
}

std::size_t PBWElem::term_count() const { return terms().size(); }

std::string pbw_monomial(const PBWMonomial& m) {
  std::string s;
  auto append = [&](const std::string& piece) {
    if (piece.empty()) return;
    if (!s.empty()) s += " ";
    s += piece;
  };
  if (m.b == 1)
    append("F");
  else if (m.b > 1)
    append("F^(" + std::to_string(m.b) + ")");
  append(cartan_monomial(static_cast<int>(m.c), static_cast<int>(m.d)));
  if (m.a == 1)
    append("E");
  else if (m.a > 1)
    append("E^(" + std::to_string(m.a) + ")");
  return s;
}

std::string PBWElem::to_string() const {
  std::vector<std::pair<CycScalar, std::string>> parts;
  for (const auto& [m, coeff] : terms()) parts.emplace_back(coeff, pbw_monomial(m));
  return format_terms(parts);
}

void PBWElem::adopt(const PBWElem& o) {
  if (o.ell_ == 0) return;
  if (ell_ == 0) {
    ell_ = o.ell_;
    return;
  }
  if (ell_ != o.ell_)
    throw DomainMismatch("PBW elements over l=" + std::to_string(ell_) + " and l=" + std::to_string(o.ell_));
}

void PBWElem::add_part(const Key& key, const UZeroElem& h) {
  if (h.is_zero()) return;
  auto it = parts_.find(key);
  if (it == parts_.end()) {
    parts_.emplace(key, h);
    return;
  }
  it->second += h;
  if (it->second.is_zero()) parts_.erase(it);
}

PBWElem& PBWElem::operator+=(const PBWElem& o) {
  adopt(o);
  for (const auto& [key, h] : o.parts_) add_part(key, h);
  return *this;
}

PBWElem& PBWElem::operator-=(const PBWElem& o) {
  adopt(o);
  for (const auto& [key, h] : o.parts_) add_part(key, -h);
  return *this;
}

PBWElem& PBWElem::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [key, h] : parts_) h *= s;
  return *this;
}

PBWElem PBWElem::operator-() const {
  PBWElem out = *this;
  for (auto& [key, h] : out.parts_) h = -h;
  return out;
}

PBWElem operator*(const PBWElem& x, const PBWElem& y) { return pbw_mul(x, y); }

bool operator==(const PBWElem& x, const PBWElem& y) {
  if (x.ell_ != 0 && y.ell_ != 0 && x.ell_ != y.ell_)
    throw DomainMismatch("comparing PBW elements over different l");
  return x.parts_ == y.parts_;
}

UZeroElem cartan_shift(const UZeroElem& h, std::int64_t a) { return h.translate(2 * a); }

PBWElem pbw_mul(const PBWElem& x, const PBWElem& y) {
  if (x.is_zero() || y.is_zero()) {
    PBWElem z(x.ell() ? x.ell() : y.ell());
    if (x.ell() && y.ell() && x.ell() != y.ell()) throw DomainMismatch("PBW product over different l");
    return z;
  }
  if (x.ell() != y.ell()) throw DomainMismatch("PBW product over different l");
  const int ell = x.ell();
  PBWElem out(ell);
  for (const auto& [k1, h1] : x.parts()) {
    const auto [b1, a1] = k1;
    for (const auto& [k2, h2] : y.parts()) {
      const auto [b2, a2] = k2;
      for (std::int64_t t = 0; t <= std::min(a1, b2); ++t) {
        const std::int64_t b = b1 + b2 - t;
        const std::int64_t a = a1 - t + a2;
        const CycScalar coeff = gauss_binom_at(b, b1, ell) * gauss_binom_at(a, a2, ell);
        if (coeff.is_zero()) continue;
        UZeroElem h = h1.translate(-2 * (b2 - t));
        if (t > 0) h *= kshift_binom(2 * t - a1 - b2, t, ell);
        h *= h2.translate(-2 * (a1 - t));
        h *= coeff;
        out += PBWElem::part(b, h, a);
      }
    }
  }
  return out;
}

PBWElem pbw_pow(const PBWElem& x, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative power of a PBW element");
  if (x.ell() == 0) throw std::invalid_argument("power of an unbound zero");
  PBWElem acc = PBWElem::one(x.ell());
  for (std::int64_t i = 0; i < n; ++i) acc = pbw_mul(acc, x);
  return acc;
}

PBWElem gamma(const ClassicalElem& x, int ell) {
  const auto& field = CyclotomicField::get(ell);
  const PBWElem fl = PBWElem::F(ell, ell);
  const PBWElem el = PBWElem::E(ell, ell);
  PBWElem out(ell);
  for (const auto& [key, p] : x.parts()) {
    const auto [s, r] = key;
    UZeroElem h(ell);
    for (std::size_t t = 0; t < p.size(); ++t)
      if (sgn(p[t]) != 0) h += UZeroElem::monomial(ell, 0, static_cast<int>(t), CycScalar(field, p[t]));
    out += pbw_mul(pbw_mul(pbw_pow(fl, s), PBWElem::cartan(h)), pbw_pow(el, r));
  }
  return out;
}

ClassicalElem frobenius(const PBWElem& x) {
  ClassicalElem out;
  const int ell = x.ell();
  for (const auto& [key, h] : x.parts()) {
    const auto [b, a] = key;
    if (b % ell != 0 || a % ell != 0) continue;
    // K -> 1 keeps exactly the residue-zero component.
    const auto& p0 = h.components()[0];
    HPoly p;
    for (const auto& c : p0) {
      if (!c.is_rational())
        throw std::domain_error("Frobenius image coefficient " + c.to_string() + " is not rational");
      p.push_back(c.to_rational());
    }
    const Rat scale = Rat(1) / Rat(factorial(b / ell) * factorial(a / ell));
    for (auto& v : p) v *= scale;
    out += ClassicalElem::part(b / ell, std::move(p), a / ell);
  }
  return out;
}

}  // namespace hyperzeta
