#pragma once

#include "hyperzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperzeta {

/// Polynomial in h over Q, low degree first, no trailing zeros.
using HPoly = std::vector<Rat>;

/// Element of U(sl2) in the normal-ordered basis f^s h^t e^r, stored as
/// sum over (s, r) of f^s p_{s,r}(h) e^r.
class ClassicalElem {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (s, r)
  using Terms = std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Rat>;

  ClassicalElem() = default;

  static ClassicalElem scalar(const Rat& c);
  static ClassicalElem one() { return scalar(Rat(1)); }
  static ClassicalElem e(std::int64_t r = 1);
  static ClassicalElem f(std::int64_t s = 1);
  static ClassicalElem h(std::int64_t t = 1);
  /// c * f^s h^t e^r
  static ClassicalElem monomial(std::int64_t s, std::int64_t t, std::int64_t r, const Rat& c = Rat(1));
  /// f^s p(h) e^r
  static ClassicalElem part(std::int64_t s, HPoly p, std::int64_t r);

  const std::map<Key, HPoly>& parts() const { return parts_; }
  /// Coefficients keyed by (s, t, r).
  Terms terms() const;
  bool is_zero() const { return parts_.empty(); }

  /// e.g. "f h^2 e - 1/2 h"
  std::string to_string() const;

  ClassicalElem& operator+=(const ClassicalElem& o);
  ClassicalElem& operator-=(const ClassicalElem& o);
  ClassicalElem& operator*=(const Rat& c);
  friend ClassicalElem operator+(ClassicalElem a, const ClassicalElem& b) { return a += b; }
  friend ClassicalElem operator-(ClassicalElem a, const ClassicalElem& b) { return a -= b; }
  friend ClassicalElem operator*(ClassicalElem a, const Rat& c) { return a *= c; }
  friend ClassicalElem operator*(const ClassicalElem& a, const ClassicalElem& b);
  friend bool operator==(const ClassicalElem& a, const ClassicalElem& b) = default;

 private:
  void add_part(const Key& key, const HPoly& p);

  std::map<Key, HPoly> parts_;
};

/// Normal-ordered product, from [h,e] = 2e, [h,f] = -2f, [e,f] = h.
ClassicalElem classical_mul(const ClassicalElem& x, const ClassicalElem& y);

}  // namespace hyperzeta
