#include "hyperzeta/qcomb.hpp"

#include "hyperzeta/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hyperzeta {

LAdic short_ladic(std::int64_t m, int ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("l must be odd and >= 3, got " + std::to_string(ell));
  return {floor_mod(m, ell), floor_div(m, ell)};
}

LaurentPoly q_integer(std::int64_t n) {
  if (n == 0) return {};
  return LaurentPoly::q_difference(n).exact_div(LaurentPoly::q_difference(1));
}

LaurentPoly q_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q-factorial of a negative integer");
  LaurentPoly acc = LaurentPoly::constant(1);
  for (std::int64_t k = 2; k <= n; ++k) acc = acc * q_integer(k);
  return acc;
}

LaurentPoly gauss_binom(std::int64_t m, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("gauss_binom needs t >= 0");
  LaurentPoly acc = LaurentPoly::constant(1);
  for (std::int64_t s = 1; s <= t; ++s) {
    acc = acc * LaurentPoly::q_difference(m - s + 1);
    if (acc.is_zero()) return acc;
    try {
      acc = acc.exact_div(LaurentPoly::q_difference(s));
    } catch (const InexactDivision& e) {
      throw InvariantViolation("gauss_binom(" + std::to_string(m) + ", " + std::to_string(t) +
                               ") left a remainder at step " + std::to_string(s));
    }
  }
  return acc;
}

void check_symmetrizer(int ell, int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("symmetrizer d must be 1, 2 or 3");
  if (std::gcd(ell, d) != 1)
    throw std::invalid_argument("symmetrizer d=" + std::to_string(d) + " is not coprime to l=" +
                                std::to_string(ell));
}

CycScalar gauss_binom_at(std::int64_t m, std::int64_t t, int ell, int d) {
  check_symmetrizer(ell, d);
  if (t < 0) throw std::invalid_argument("gauss_binom_at needs t >= 0");
  const auto& field = CyclotomicField::get(ell);
  if (t == 0) return field.one();
  if (m >= 0 && t > m) return field.zero();

  using Key = std::tuple<int, int, std::int64_t, std::int64_t>;
  static std::mutex mutex;
  static std::map<Key, CycScalar> cache;
  const Key key{ell, d, m, t};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CycScalar value = gauss_binom(m, t).specialize(field, d);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

CycScalar q_integer_at(std::int64_t n, int ell, int d) {
  check_symmetrizer(ell, d);
  return q_integer(n).specialize(CyclotomicField::get(ell), d);
}

CycScalar q_factorial_at(std::int64_t n, int ell, int d) {
  const auto& field = CyclotomicField::get(ell);
  CycScalar acc = field.one();
  for (std::int64_t k = 2; k <= n; ++k) acc *= q_integer_at(k, ell, d);
  return acc;
}

std::int64_t binom_shift_eval(std::int64_t m, std::int64_t c, ShiftDirection dir, int ell) {
  if (m < 0 || m >= ell)
    throw std::invalid_argument("binom_shift_eval needs 0 <= m < l, got m=" + std::to_string(m));
  if (c < 0) throw std::invalid_argument("binom_shift_eval needs c >= 0");
  const LAdic cd = short_ladic(c, ell);
  if (dir == ShiftDirection::down) return m >= cd.m0 ? -cd.m1 : -(cd.m1 + 1);
  return m + cd.m0 < ell ? cd.m1 : cd.m1 + 1;
}

CycScalar q_lucas(std::int64_t a0, std::int64_t a1, std::int64_t c0, std::int64_t c1, int ell,
                  int d) {
  if (a0 < 0 || a0 >= ell || c0 < 0 || c0 >= ell)
    throw std::invalid_argument("q_lucas needs 0 <= a0, c0 < l");
  if (a1 < 0 || c1 < 0) throw std::invalid_argument("q_lucas needs a1, c1 >= 0");
  const auto& field = CyclotomicField::get(ell);
  return gauss_binom_at(a0, c0, ell, d) * CycScalar(field, Rat(binomial(BigInt(static_cast<long>(a1)), c1)));
}

}  // namespace hyperzeta
