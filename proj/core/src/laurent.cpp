#include "hyperzeta/laurent.hpp"

#include <algorithm>

namespace hyperzeta {

LaurentPoly::LaurentPoly(const std::map<std::int64_t, BigInt>& terms) {
  auto first = std::find_if(terms.begin(), terms.end(), [](const auto& t) { return t.second != 0; });
  if (first == terms.end()) return;
  low_ = first->first;
  std::int64_t hi = low_;
  for (const auto& [e, c] : terms)
    if (c != 0) hi = std::max(hi, e);
  coeffs_.assign(static_cast<std::size_t>(hi - low_ + 1), 0);
  for (const auto& [e, c] : terms)
    if (c != 0) coeffs_[static_cast<std::size_t>(e - low_)] = c;
}

LaurentPoly LaurentPoly::monomial(std::int64_t e, const BigInt& c) {
  LaurentPoly p;
  if (c == 0) return p;
  p.low_ = e;
  p.coeffs_.push_back(c);
  return p;
}

LaurentPoly LaurentPoly::q_difference(std::int64_t n) {
  return monomial(n) - monomial(-n);
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coeff(std::int64_t e) const {
  if (coeffs_.empty() || e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<std::int64_t, BigInt> LaurentPoly::terms() const {
  std::map<std::int64_t, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t lo = std::min(low_, o.low_);
  const std::int64_t hi = std::max(high(), o.high());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Laurent division by zero");
  if (is_zero()) return {};
  // Monomials are units, so divide the underlying polynomials (both with
  // nonzero constant term) and shift the exponent back.
  std::vector<BigInt> rem = coeffs_;
  const auto& den = divisor.coeffs_;
  const std::size_t dd = den.size() - 1;
  const BigInt& lead = den.back();
  std::vector<std::pair<std::size_t, BigInt>> den_terms;
  for (std::size_t i = 0; i < den.size(); ++i)
    if (den[i] != 0) den_terms.emplace_back(i, den[i]);

  std::vector<BigInt> quot(rem.size() >= den.size() ? rem.size() - dd : 0, 0);
  bool inexact = false;
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) {
      inexact = true;
      break;
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    quot[k - dd] = c;
    for (const auto& [i, d] : den_terms) mpz_submul(rem[k - dd + i].get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  const bool zero_rem = std::all_of(rem.begin(), rem.end(), [](const BigInt& v) { return v == 0; });
  if (inexact || !zero_rem) {
    std::map<std::int64_t, BigInt> r;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (rem[i] != 0) r.emplace(low_ + static_cast<std::int64_t>(i), rem[i]);
    throw InexactDivision("inexact Laurent division: " + to_string() + " by " + divisor.to_string(),
                          std::move(r));
  }
  LaurentPoly q;
  q.low_ = low_ - divisor.low_;
  q.coeffs_ = std::move(quot);
  q.trim();
  return q;
}

CycScalar LaurentPoly::specialize(const CyclotomicField& field, std::int64_t power) const {
  const int ell = field.ell();
  std::vector<BigInt> buckets(static_cast<std::size_t>(ell), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::int64_t e = (low_ + static_cast<std::int64_t>(i)) * power;
    buckets[static_cast<std::size_t>(floor_mod(e, ell))] += coeffs_[i];
  }
  return CycScalar::from_poly(field, std::span<const BigInt>(buckets));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  const bool wrap = coeffs_.back() < 0 && coeffs_.size() > 1 &&
                    std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }) > 1;
  const LaurentPoly& body = *this;
  const int flip = wrap ? -1 : 1;
  std::string out;
  bool first = true;
  for (std::size_t k = body.coeffs_.size(); k-- > 0;) {
    BigInt c = body.coeffs_[k] * flip;
    if (c == 0) continue;
    const std::int64_t e = body.low_ + static_cast<std::int64_t>(k);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return wrap ? "-(" + out + ")" : out;
}

}  // namespace hyperzeta
