#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/matrix.hpp"
#include "hyperzeta/sparse_span.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hyperzeta;

namespace {

CycScalar random_cyc(std::mt19937_64& rng, int ell) {
  const auto& f = CyclotomicField::get(ell);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), exp(0, ell - 1), count(0, 4);
  CycScalar x(f);
  for (int i = count(rng); i > 0; --i) x += f.zeta_pow(exp(rng)) * make_rat(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("rational parsing and helpers") {
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(factorial(5) == 120);
  CHECK(binomial(-2, 3) == -4);
  CHECK(floor_div(-7, 5) == -2);
  CHECK(floor_mod(-7, 5) == 3);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(3) == std::vector<BigInt>{1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<BigInt>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
  CHECK(CyclotomicField::get(15).degree() == 8);
}

TEST_CASE("field interning and examples") {
  const auto& f = CyclotomicField::get(5);
  CHECK(&f == &CyclotomicField::get(5));
  CHECK_THROWS_AS(CyclotomicField::get(4), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicField::get(1), std::invalid_argument);
  CycScalar z = CycScalar::zeta(f);
  CHECK(z.pow(5).is_one());
  CHECK((z + z.pow(2) + z.pow(3) + z.pow(4)) == CycScalar(f, -1));
  CHECK(z.pow(-1) == z.pow(4));
  CHECK(z.inverse() * z == f.one());
  CHECK(CycScalar(f, make_rat(1, 3)).to_rational() == make_rat(1, 3));
  CHECK_THROWS_AS(z.to_rational(), std::domain_error);
  CHECK(CycScalar(f).to_string() == "0");
}

TEST_CASE("unbound zero adopts the other operand's field") {
  const auto& f = CyclotomicField::get(7);
  CycScalar u;
  CHECK(!u.bound());
  CycScalar s = u + f.zeta_pow(3);
  CHECK(s == f.zeta_pow(3));
  CHECK(u == CycScalar(f));
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS(CycScalar::zeta(CyclotomicField::get(3)) + CycScalar::zeta(CyclotomicField::get(5)));
}

TEST_CASE("field axioms against the complex embedding") {
  std::mt19937_64 rng(11);
  for (int ell : {3, 5, 7, 9, 15}) {
    for (int i = 0; i < 60; ++i) {
      CycScalar x = random_cyc(rng, ell), y = random_cyc(rng, ell), w = random_cyc(rng, ell);
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(oracle::close(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y)));
      CHECK(oracle::close(oracle::embed(x - y), oracle::embed(x) - oracle::embed(y)));
      if (!x.is_zero()) {
        CHECK((x * x.inverse()).is_one());
        CHECK(oracle::close(oracle::embed(y / x), oracle::embed(y) / oracle::embed(x)));
      }
    }
  }
}

TEST_CASE("Vandermonde matrix of the l-th roots of unity") {
  for (int ell = 3; ell <= 13; ell += 2) {
    const auto& f = CyclotomicField::get(ell);
    auto n = static_cast<std::size_t>(ell);
    ExactMatrix v = zero_matrix(f, n, n), w = zero_matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        v(i, j) = f.zeta_pow(static_cast<std::int64_t>(i * j));
        w(i, j) = f.zeta_pow(-static_cast<std::int64_t>(i * j)) * make_rat(1, ell);
      }
    CHECK(v * w == identity_matrix(f, n));
    CHECK(rank(v) == n);
    CHECK(inverse(v) == w);
  }
}

TEST_CASE("rank-nullity and solve on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 6), sparse(0, 2);
  const auto& f = CyclotomicField::get(5);
  for (int i = 0; i < 60; ++i) {
    auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    ExactMatrix m = zero_matrix(f, r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (sparse(rng) == 0) m(a, b) = random_cyc(rng, 5);
    auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    std::vector<CycScalar> x(c, CycScalar(f));
    for (auto& v : x) v = random_cyc(rng, 5);
    auto b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("singular matrices and rational matrices") {
  RatMatrix m(2, 2, Rat(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(inverse(m), SingularMatrix);
  std::vector<Rat> b{Rat(1), Rat(3)};
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("sparse span agrees with dense rank and records relations") {
  std::mt19937_64 rng(9);
  const auto& f = CyclotomicField::get(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t ambient = 6;
    SparseSpan<CycScalar> span(ambient, CycScalar(f), true);
    ExactMatrix rows = zero_matrix(f, 8, ambient);
    std::vector<std::vector<CycScalar>> vs;
    for (std::size_t i = 0; i < 8; ++i) {
      std::vector<CycScalar> v(ambient, CycScalar(f));
      for (std::size_t j = 0; j < ambient; ++j)
        if (rng() % 3 == 0) v[j] = random_cyc(rng, 3);
      if (i >= 5) {  // force dependencies
        for (std::size_t j = 0; j < ambient; ++j) v[j] = vs[i - 5][j] + vs[i - 4][j] * f.zeta_pow(1);
      }
      vs.push_back(v);
      for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = v[j];
      auto ins = span.insert(to_sparse(v), i);
      if (!ins.independent) {
        std::vector<CycScalar> sum(ambient, CycScalar(f));
        for (const auto& [id, coeff] : ins.relation)
          for (std::size_t j = 0; j < ambient; ++j) sum[j] += coeff * vs[id][j];
        for (const auto& x : sum) CHECK(x.is_zero());
      }
    }
    CHECK(span.rank() == rank(rows));
  }
}
