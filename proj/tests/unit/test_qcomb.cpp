#include "hyperzeta/qcomb.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace hyperzeta;

TEST_CASE("short l-adic decomposition") {
  CHECK(short_ladic(7, 5) == LAdic{2, 1});
  CHECK(short_ladic(-7, 5) == LAdic{3, -2});
  CHECK(short_ladic(0, 3) == LAdic{0, 0});
  for (int ell : {3, 5, 7})
    for (std::int64_t m = -50; m <= 50; ++m) {
      LAdic d = short_ladic(m, ell);
      CHECK(d.m0 >= 0);
      CHECK(d.m0 < ell);
      CHECK(d.m0 + d.m1 * ell == m);
    }
}

TEST_CASE("Laurent polynomial arithmetic") {
  LaurentPoly q = LaurentPoly::monomial(1), qi = LaurentPoly::monomial(-1);
  CHECK((q * qi) == LaurentPoly::constant(1));
  CHECK((q + qi).to_string() == "q + q^-1");
  CHECK(LaurentPoly::q_difference(2).exact_div(LaurentPoly::q_difference(1)) == q + qi);
  CHECK_THROWS_AS(LaurentPoly::q_difference(3).exact_div(LaurentPoly::q_difference(2)), InexactDivision);
  CHECK_THROWS_AS(q.exact_div(LaurentPoly()), std::domain_error);
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("q-integers and factorials") {
  CHECK(q_integer(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(q_integer(-2) == -q_integer(2));
  CHECK(q_factorial(0) == LaurentPoly::constant(1));
  CHECK(q_factorial(3) == q_integer(2) * q_integer(3));
  CHECK(q_factorial_at(5, 5).is_zero());
  CHECK(!q_factorial_at(4, 5).is_zero());
  CHECK(q_integer_at(5, 5).is_zero());
}

TEST_CASE("Gaussian binomial examples") {
  CHECK(gauss_binom(2, 1).to_string() == "q + q^-1");
  CHECK(gauss_binom(-2, 3).to_string() == "-(q^3 + q + q^-1 + q^-3)");
  CHECK(gauss_binom(-2, 3) == -gauss_binom(4, 3));
  CHECK(gauss_binom(5, 0) == LaurentPoly::constant(1));
  CHECK(gauss_binom(3, 5).is_zero());
  CHECK(gauss_binom_at(7, 5, 5) == CycScalar(CyclotomicField::get(5), 1));
  CHECK(gauss_binom_at(10, 5, 5) == CycScalar(CyclotomicField::get(5), 2));
}

TEST_CASE("Gaussian binomial matches the product formula at a generic q") {
  for (double q : {1.07, 0.83}) {
    for (std::int64_t m = -9; m <= 9; ++m)
      for (std::int64_t t = 0; t <= 7; ++t) {
        double want = oracle::gauss_binom_product(m, t, q);
        CHECK(oracle::close(oracle::eval(gauss_binom(m, t), q), want, 1e-9));
      }
  }
}

TEST_CASE("specialization matches the complex value of the Laurent polynomial") {
  for (int ell : {3, 5, 7})
    for (int d : {1, 2})
      for (std::int64_t m = -2 * ell; m <= 2 * ell; ++m)
        for (std::int64_t t = 0; t <= ell + 1; ++t) {
          auto z = oracle::zeta(ell, d);
          CHECK(oracle::close(oracle::embed(gauss_binom_at(m, t, ell, d)), oracle::eval(gauss_binom(m, t), z)));
        }
}

TEST_CASE("reflection identity for negative tops") {
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t t = 0; t <= 8; ++t) {
      LaurentPoly rhs = gauss_binom(-m + t - 1, t);
      CHECK(gauss_binom(m, t) == (t % 2 ? -rhs : rhs));
    }
}

TEST_CASE("Pascal recurrences") {
  for (std::int64_t m = 0; m <= 10; ++m)
    for (std::int64_t t = 1; t <= m + 1; ++t) {
      auto lhs = gauss_binom(m + 1, t);
      CHECK(lhs == LaurentPoly::monomial(-t) * gauss_binom(m, t) + LaurentPoly::monomial(m - t + 1) * gauss_binom(m, t - 1));
      CHECK(lhs == LaurentPoly::monomial(t) * gauss_binom(m, t) + LaurentPoly::monomial(t - m - 1) * gauss_binom(m, t - 1));
    }
}

TEST_CASE("the binomial over l at zeta is the top l-adic digit") {
  for (int ell : {3, 5, 7})
    for (std::int64_t m = -3 * ell; m <= 3 * ell; ++m)
      CHECK(gauss_binom_at(m, ell, ell) == CycScalar(CyclotomicField::get(ell), short_ladic(m, ell).m1));
}

TEST_CASE("shifted binomial branch formulas") {
  CHECK(binom_shift_eval(3, 7, ShiftDirection::down, 5) == -1);
  CHECK(binom_shift_eval(1, 7, ShiftDirection::down, 5) == -2);
  CHECK(binom_shift_eval(3, 7, ShiftDirection::up, 5) == 2);
  for (int ell : {3, 5, 7}) {
    const auto& f = CyclotomicField::get(ell);
    for (std::int64_t m = 0; m < ell; ++m)
      for (std::int64_t c = 0; c < 3 * ell; ++c) {
        CHECK(CycScalar(f, binom_shift_eval(m, c, ShiftDirection::down, ell)) == gauss_binom_at(m - c, ell, ell));
        CHECK(CycScalar(f, binom_shift_eval(m, c, ShiftDirection::up, ell)) == gauss_binom_at(m + c, ell, ell));
      }
  }
}

TEST_CASE("q-Lucas factorization") {
  for (int ell : {3, 5})
    for (std::int64_t a0 = 0; a0 < ell; ++a0)
      for (std::int64_t c0 = 0; c0 < ell; ++c0)
        for (std::int64_t a1 = 0; a1 <= 4; ++a1)
          for (std::int64_t c1 = 0; c1 <= 4; ++c1)
            CHECK(q_lucas(a0, a1, c0, c1, ell) == gauss_binom_at(a0 + a1 * ell, c0 + c1 * ell, ell));
  CHECK(q_lucas(0, 6, 0, 1, 5) == CycScalar(CyclotomicField::get(5), 6));
}

TEST_CASE("symmetrizer validation") {
  CHECK_NOTHROW(check_symmetrizer(5, 3));
  CHECK_THROWS_AS(check_symmetrizer(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_symmetrizer(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gauss_binom_at(3, 1, 9, 3), std::invalid_argument);
}
