#include "hyperzeta/classical.hpp"

#include <stdexcept>

namespace hyperzeta {

namespace {

void trim(HPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

HPoly poly_mul(const HPoly& a, const HPoly& b) {
  if (a.empty() || b.empty()) return {};
  HPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// p(h + s)
HPoly poly_shift(const HPoly& p, std::int64_t s) {
  if (s == 0 || p.size() <= 1) return p;
  HPoly out(p.size(), Rat(0));
  const Rat shift(static_cast<long>(s));
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat spow = 1;
    for (std::size_t j = i + 1; j-- > 0;) {
      out[j] += p[i] * Rat(binomial(BigInt(static_cast<long>(i)), static_cast<std::int64_t>(j))) * spow;
      spow *= shift;
    }
  }
  trim(out);
  return out;
}

// binom(h + c, k) as a polynomial in h.
HPoly binom_poly(std::int64_t c, std::int64_t k) {
  HPoly p{Rat(1)};
  for (std::int64_t i = 0; i < k; ++i) p = poly_mul(p, HPoly{Rat(static_cast<long>(c - i)), Rat(1)});
  const Rat inv = Rat(1) / Rat(factorial(k));
  for (auto& x : p) x *= inv;
  return p;
}

std::string power(const char* sym, std::int64_t n) {
  if (n == 0) return "";
  return n == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(n);
}

}  // namespace

ClassicalElem ClassicalElem::scalar(const Rat& c) { return part(0, HPoly{c}, 0); }
ClassicalElem ClassicalElem::e(std::int64_t r) { return monomial(0, 0, r); }
ClassicalElem ClassicalElem::f(std::int64_t s) { return monomial(s, 0, 0); }
ClassicalElem ClassicalElem::h(std::int64_t t) { return monomial(0, t, 0); }

ClassicalElem ClassicalElem::monomial(std::int64_t s, std::int64_t t, std::int64_t r, const Rat& c) {
  if (t < 0) throw std::invalid_argument("negative power of h");
  HPoly p(static_cast<std::size_t>(t) + 1, Rat(0));
  p.back() = c;
  return part(s, std::move(p), r);
}

ClassicalElem ClassicalElem::part(std::int64_t s, HPoly p, std::int64_t r) {
  if (s < 0 || r < 0) throw std::invalid_argument("negative power of e or f");
  ClassicalElem x;
  trim(p);
  if (!p.empty()) x.parts_.emplace(Key{s, r}, std::move(p));
  return x;
}

ClassicalElem::Terms ClassicalElem::terms() const {
  Terms out;
  for (const auto& [key, p] : parts_)
    for (std::size_t t = 0; t < p.size(); ++t)
      if (sgn(p[t]) != 0) out.emplace(std::make_tuple(key.first, static_cast<std::int64_t>(t), key.second), p[t]);
  return out;
}

std::string ClassicalElem::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms()) {
    const auto [s, t, r] = key;
    std::string mono;
    for (const auto& piece : {power("f", s), power("h", t), power("e", r)})
      if (!piece.empty()) mono += (mono.empty() ? "" : " ") + piece;
    Rat a = abs(c);
    std::string body = (a == 1 && !mono.empty()) ? mono : hyperzeta::to_string(a) + (mono.empty() ? "" : " " + mono);
    if (first)
      out = sgn(c) < 0 ? "-" + body : body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    first = false;
  }
  return first ? "0" : out;
}

void ClassicalElem::add_part(const Key& key, const HPoly& p) {
  if (p.empty()) return;
  auto& acc = parts_[key];
  if (acc.size() < p.size()) acc.resize(p.size(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
  trim(acc);
  if (acc.empty()) parts_.erase(key);
}

ClassicalElem& ClassicalElem::operator+=(const ClassicalElem& o) {
  for (const auto& [key, p] : o.parts_) add_part(key, p);
  return *this;
}

ClassicalElem& ClassicalElem::operator-=(const ClassicalElem& o) {
  for (const auto& [key, p] : o.parts_) {
    HPoly neg = p;
    for (auto& x : neg) x = -x;
    add_part(key, neg);
  }
  return *this;
}

ClassicalElem& ClassicalElem::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [key, p] : parts_)
    for (auto& x : p) x *= c;
  return *this;
}

ClassicalElem operator*(const ClassicalElem& x, const ClassicalElem& y) { return classical_mul(x, y); }

ClassicalElem classical_mul(const ClassicalElem& x, const ClassicalElem& y) {
  // f^s1 p1 e^r1 . f^s2 p2 e^r2, straightening e^r1 f^s2 by
  //   e^r f^s = sum_k r! s! / ((r-k)! (s-k)!) f^(s-k) binom(h - r - s + 2k, k) e^(r-k).
  ClassicalElem out;
  for (const auto& [k1, p1] : x.parts()) {
    const auto [s1, r1] = k1;
    for (const auto& [k2, p2] : y.parts()) {
      const auto [s2, r2] = k2;
      for (std::int64_t k = 0; k <= std::min(r1, s2); ++k) {
        const Rat c(factorial(r1) * factorial(s2) / (factorial(r1 - k) * factorial(s2 - k)));
        HPoly p = poly_mul(poly_shift(p1, -2 * (s2 - k)), binom_poly(2 * k - r1 - s2, k));
        p = poly_mul(p, poly_shift(p2, -2 * (r1 - k)));
        for (auto& v : p) v *= c;
        out += ClassicalElem::part(s1 + s2 - k, std::move(p), r1 - k + r2);
      }
    }
  }
  return out;
}

}  // namespace hyperzeta
