#include "hyperzeta/rational.hpp"

#include <stdexcept>
#include <string>

namespace hyperzeta {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rat(n, d);
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(const BigInt& n, std::int64_t k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (std::int64_t i = 0; i < k; ++i) num *= (n - i);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
  return q;
}

}  // namespace hyperzeta
