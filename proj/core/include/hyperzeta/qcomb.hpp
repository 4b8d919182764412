#pragma once

#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/laurent.hpp"

#include <cstdint>

namespace hyperzeta {

/// Short l-adic decomposition m = m0 + m1*l with 0 <= m0 < l.
struct LAdic {
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  friend bool operator==(const LAdic&, const LAdic&) = default;
};

LAdic short_ladic(std::int64_t m, int ell);

/// Symmetric q-integer [n] = (q^n - q^-n)/(q - q^-1).
LaurentPoly q_integer(std::int64_t n);
/// [n]! = [1][2]...[n], n >= 0.
LaurentPoly q_factorial(std::int64_t n);

/// Gaussian binomial [m over t] as an element of Z[q, q^-1], from the
/// product over s = 1..t of (q^(m-s+1) - q^-(m-s+1)) / (q^s - q^-s). Every
/// partial product is itself a Laurent polynomial, so each division step is
/// exact; a nonzero remainder raises InvariantViolation. Valid for every
/// integer m (negative m included) and t >= 0.
LaurentPoly gauss_binom(std::int64_t m, std::int64_t t);

/// gauss_binom(m, t) specialized at q -> zeta^d in Q(zeta_l). d is the
/// symmetrizer (1, 2 or 3) and must be coprime to l. Results are memoized.
CycScalar gauss_binom_at(std::int64_t m, std::int64_t t, int ell, int d = 1);

/// q-integer [n] at zeta^d.
CycScalar q_integer_at(std::int64_t n, int ell, int d = 1);
/// [n]! at zeta^d; nonzero exactly when n < l.
CycScalar q_factorial_at(std::int64_t n, int ell, int d = 1);

enum class ShiftDirection { down, up };

/// Closed-form value of [m - c over l] (down) or [m + c over l] (up) at a
/// root of unity, for 0 <= m < l and c >= 0, by the branch on the short
/// l-adic digits of c.
std::int64_t binom_shift_eval(std::int64_t m, std::int64_t c, ShiftDirection dir, int ell);

/// Factored value [a0 over c0]_zeta * binom(a1, c1) of the binomial
/// [a0 + a1*l over c0 + c1*l]_zeta.
CycScalar q_lucas(std::int64_t a0, std::int64_t a1, std::int64_t c0, std::int64_t c1, int ell,
                  int d = 1);

/// Throws std::invalid_argument unless d is in {1,2,3} and gcd(d, l) = 1.
void check_symmetrizer(int ell, int d);

}  // namespace hyperzeta
