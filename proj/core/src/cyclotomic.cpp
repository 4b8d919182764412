#include "hyperzeta/cyclotomic.hpp"

#include "hyperzeta/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperzeta {

namespace {

using IntPoly = std::vector<BigInt>;  // low degree first

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial; the remainder must vanish.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    if (!num.empty()) throw InvariantViolation("cyclotomic division left a remainder");
    return {};
  }
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    BigInt c = num[k];
    if (c == 0) continue;
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) throw InvariantViolation("cyclotomic division left a remainder");
  return q;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Polynomials over Q for the extended Euclidean inverse.
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
  const Rat lead_inv = 1 / b.back();
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    Rat c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly r(std::max(a.size(), q.size() + b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  IntPoly xn(static_cast<std::size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  IntPoly divisor{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_polynomial(d));
  return divide_monic(xn, divisor);
}

// ---------------------------------------------------------------------------
// CyclotomicField

CyclotomicField::CyclotomicField(int ell) : ell_(ell) {
  modulus_ = cyclotomic_polynomial(ell);
  degree_ = static_cast<int>(modulus_.size()) - 1;
}

CyclotomicField::~CyclotomicField() = default;

void CyclotomicField::build_tables() {
  zero_ = std::make_unique<CycScalar>(*this);
  powers_.reserve(static_cast<std::size_t>(ell_));
  for (int k = 0; k < ell_; ++k) {
    IntPoly mono(static_cast<std::size_t>(k) + 1, 0);
    mono[static_cast<std::size_t>(k)] = 1;
    powers_.push_back(CycScalar::from_poly(*this, std::span<const BigInt>(mono)));
  }
}

const CyclotomicField& CyclotomicField::get(int ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("cyclotomic conductor must be odd and >= 3, got " +
                                std::to_string(ell));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(ell);
  if (it == registry.end()) {
    std::unique_ptr<CyclotomicField> f(new CyclotomicField(ell));
    f->build_tables();
    it = registry.emplace(ell, std::move(f)).first;
  }
  return *it->second;
}

const CycScalar& CyclotomicField::zeta_pow(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(floor_mod(k, ell_))];
}

const CycScalar& CyclotomicField::zero() const { return *zero_; }
const CycScalar& CyclotomicField::one() const { return powers_[0]; }

void reduce_mod_cyclotomic(const CyclotomicField& field, std::vector<BigInt>& v) {
  const auto& phi = field.modulus();
  const std::size_t deg = static_cast<std::size_t>(field.degree());
  for (std::size_t k = v.size(); k-- > deg;) {
    if (v[k] == 0) continue;
    BigInt c = v[k];
    for (std::size_t i = 0; i <= deg; ++i)
      if (phi[i] != 0) v[k - deg + i] -= c * phi[i];
  }
  v.resize(deg, 0);
}

const CyclotomicField& common_field(const CycScalar& a, const CycScalar& b) {
  if (a.field() && b.field() && a.field() != b.field())
    throw DomainMismatch("cyclotomic operands over different fields (l=" +
                         std::to_string(a.field()->ell()) + " vs l=" +
                         std::to_string(b.field()->ell()) + ")");
  const CyclotomicField* f = a.field() ? a.field() : b.field();
  if (!f) throw std::invalid_argument("operation needs a field but both operands are unbound");
  return *f;
}

Rat inverse(const Rat& x) {
  if (sgn(x) == 0) throw std::domain_error("division by zero");
  return 1 / x;
}

// ---------------------------------------------------------------------------
// CycScalar

CycScalar::CycScalar(const CyclotomicField& field)
    : field_(&field), num_(static_cast<std::size_t>(field.degree()), 0), den_(1) {}

CycScalar::CycScalar(const CyclotomicField& field, const Rat& value) : CycScalar(field) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycScalar::CycScalar(const CyclotomicField& field, std::int64_t value) : CycScalar(field) {
  num_[0] = static_cast<long>(value);
}

CycScalar CycScalar::from_poly(const CyclotomicField& field, std::span<const BigInt> coeffs) {
  const int ell = field.ell();
  std::vector<BigInt> folded(static_cast<std::size_t>(std::max(ell, field.degree())), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    folded[i % static_cast<std::size_t>(ell)] += coeffs[i];
  reduce_mod_cyclotomic(field, folded);
  CycScalar r(field);
  r.num_ = std::move(folded);
  return r;
}

CycScalar CycScalar::from_poly(const CyclotomicField& field,
                               std::span<const std::int64_t> coeffs) {
  std::vector<BigInt> big;
  big.reserve(coeffs.size());
  for (auto c : coeffs) big.emplace_back(static_cast<long>(c));
  return from_poly(field, std::span<const BigInt>(big));
}

CycScalar CycScalar::from_laurent(const CyclotomicField& field,
                                  const std::map<std::int64_t, Rat>& terms) {
  CycScalar r(field);
  for (const auto& [e, c] : terms) r += field.zeta_pow(e) * c;
  return r;
}

int CycScalar::ell() const {
  if (!field_) throw std::logic_error("unbound cyclotomic zero has no conductor");
  return field_->ell();
}

Rat CycScalar::coeff(int i) const {
  if (!field_ || i < 0 || i >= static_cast<int>(num_.size())) return Rat(0);
  return make_rat(num_[static_cast<std::size_t>(i)], den_);
}

std::vector<Rat> CycScalar::coeffs() const {
  std::vector<Rat> out;
  out.reserve(num_.size());
  for (const auto& n : num_) out.push_back(make_rat(n, den_));
  return out;
}

bool CycScalar::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const BigInt& n) { return n == 0; });
}

bool CycScalar::is_one() const {
  if (!field_ || den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const BigInt& n) { return n == 0; });
}

bool CycScalar::is_rational() const {
  if (num_.size() <= 1) return true;
  return std::all_of(num_.begin() + 1, num_.end(), [](const BigInt& n) { return n == 0; });
}

Rat CycScalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return num_.empty() ? Rat(0) : make_rat(num_[0], den_);
}

void CycScalar::normalize() {
  if (den_ == 1) return;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  BigInt g = den_;
  for (const auto& n : num_) {
    if (g == 1) break;
    if (n != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g != 1) {
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    for (auto& n : num_)
      if (n != 0) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  }
}

void CycScalar::bind_like(const CycScalar& o) {
  if (!field_ && o.field_) {
    field_ = o.field_;
    num_.assign(static_cast<std::size_t>(field_->degree()), 0);
    den_ = 1;
  } else if (field_ && o.field_ && field_ != o.field_) {
    common_field(*this, o);
  }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (!o.field_) return *this;
  bind_like(o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    if (den_ != 1) normalize();
    return *this;
  }
  for (std::size_t i = 0; i < num_.size(); ++i) {
    num_[i] *= o.den_;
    num_[i] += o.num_[i] * den_;
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (!a.field_ || !b.field_) {
    const CycScalar& bound = a.field_ ? a : b;
    return bound.field_ ? CycScalar(*bound.field_) : CycScalar();
  }
  const CyclotomicField& f = common_field(a, b);
  const std::size_t n = a.num_.size();
  // Rational operands: scale coefficientwise.
  if (b.is_rational() || a.is_rational()) {
    const CycScalar& vec = b.is_rational() ? a : b;
    const CycScalar& sc = b.is_rational() ? b : a;
    CycScalar r(f);
    if (sc.num_[0] == 0) return r;
    for (std::size_t i = 0; i < n; ++i)
      if (vec.num_[i] != 0) r.num_[i] = vec.num_[i] * sc.num_[0];
    r.den_ = vec.den_ * sc.den_;
    r.normalize();
    return r;
  }
  std::vector<BigInt> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  reduce_mod_cyclotomic(f, prod);
  CycScalar r(f);
  r.num_ = std::move(prod);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar& CycScalar::operator*=(const Rat& r) {
  if (!field_) return *this;
  if (sgn(r) == 0) {
    for (auto& n : num_) n = 0;
    den_ = 1;
    return *this;
  }
  for (auto& n : num_) n *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  const CyclotomicField& f = *field_;
  if (is_rational()) return CycScalar(f, Rat(1) / to_rational());
  // Extended Euclid: find s with s*a = 1 mod Phi.
  RatPoly a;
  for (const auto& n : num_) a.push_back(make_rat(n, den_));
  trim(a);
  RatPoly m;
  for (const auto& c : f.modulus()) m.push_back(Rat(c));
  RatPoly r0 = m, r1 = a, s0{}, s1{Rat(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw InvariantViolation("non-invertible element in a field");
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // s1 * a = r1[0] (a nonzero constant) mod Phi.
  const Rat c = 1 / r1[0];
  CycScalar out(f);
  BigInt common = 1;
  for (const auto& v : s1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
  common *= c.get_den();
  std::vector<BigInt> nums(static_cast<std::size_t>(f.degree()), 0);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    Rat scaled = s1[i] * c * Rat(common);
    nums[i] = scaled.get_num();
  }
  out.num_ = std::move(nums);
  out.den_ = common;
  out.normalize();
  return out;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  return *this = *this * o.inverse();
}

CycScalar CycScalar::pow(std::int64_t e) const {
  if (!field_) {
    if (e <= 0) throw std::domain_error("non-positive power of zero");
    return *this;
  }
  CycScalar base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  CycScalar acc = field_->one();
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (!a.field_ || !b.field_) return a.is_zero() && b.is_zero();
  if (a.field_ != b.field_) return false;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = num_.size(); k-- > 0;) {
    if (num_[k] == 0) continue;
    Rat c = make_rat(num_[k], den_);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += hyperzeta::to_string(c);
      continue;
    }
    if (c != 1) out += hyperzeta::to_string(c) + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hyperzeta
