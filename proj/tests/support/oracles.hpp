#pragma once

// Floating-point reference values used as independent oracles for the
// exact code paths. Every comparison goes through an explicit tolerance.

#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/laurent.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

inline cplx zeta(int ell, std::int64_t k = 1) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / ell;
  return {std::cos(a), std::sin(a)};
}

/// Image of x under the embedding z -> exp(2 pi i / l).
inline cplx embed(const hyperzeta::CycScalar& x) {
  if (!x.bound()) return 0.0;
  cplx s = 0.0;
  auto cs = x.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) s += cs[i].get_d() * zeta(x.ell(), static_cast<std::int64_t>(i));
  return s;
}

inline cplx eval(const hyperzeta::LaurentPoly& p, cplx q) {
  cplx s = 0.0;
  for (const auto& [e, c] : p.terms()) s += c.get_d() * std::pow(q, static_cast<double>(e));
  return s;
}

/// Product formula for [m over t] at a generic real q, in doubles.
inline double gauss_binom_product(std::int64_t m, std::int64_t t, double q) {
  double r = 1.0;
  for (std::int64_t s = 1; s <= t; ++s) {
    const double top = std::pow(q, double(m - s + 1)) - std::pow(q, double(-(m - s + 1)));
    const double bot = std::pow(q, double(s)) - std::pow(q, double(-s));
    r *= top / bot;
  }
  return r;
}

/// Symmetric q-integer at a complex q with q^2 != 1.
inline cplx q_int(std::int64_t n, cplx q) {
  return (std::pow(q, double(n)) - std::pow(q, double(-n))) / (q - 1.0 / q);
}

inline bool close(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace oracle
