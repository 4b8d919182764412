#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperzeta {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// n! as an exact integer; n must be nonnegative.
BigInt factorial(std::int64_t n);

/// Classical binomial coefficient binom(n, k) for any integer n and k >= 0,
/// defined by the falling-factorial polynomial n(n-1)...(n-k+1)/k!.
BigInt binomial(const BigInt& n, std::int64_t k);

/// Floor division and the matching nonnegative remainder.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

}  // namespace hyperzeta
