#include "hyperzeta/pbw.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"

#include <doctest.h>

#include <random>

using namespace hyperzeta;

namespace {

PBWElem random_monomial(std::mt19937_64& rng, int ell) {
  std::uniform_int_distribution<std::int64_t> idx(0, 2 * ell + 2), c(0, ell - 1), d(0, 1), n(1, 4);
  PBWMonomial m{idx(rng), c(rng), d(rng), idx(rng)};
  return PBWElem::monomial(ell, m, CyclotomicField::get(ell).zeta_pow(c(rng)) * Rat(n(rng)));
}

}  // namespace

TEST_CASE("classical enveloping algebra") {
  using C = ClassicalElem;
  CHECK((C::e() * C::f()).to_string() == "h + f e");
  CHECK(C::e() * C::f() - C::f() * C::e() == C::h());
  CHECK(C::h() * C::e() - C::e() * C::h() == C::e() * Rat(2));
  CHECK(C::h() * C::f() - C::f() * C::h() == C::f() * Rat(-2));
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; b <= 2; ++b)
      for (std::int64_t c = 0; c <= 2; ++c) {
        C x = C::monomial(a, b, c), y = C::monomial(c, a, b), z = C::monomial(b, c, a);
        CHECK((x * y) * z == x * (y * z));
      }
}

TEST_CASE("classical products act correctly on V(p)") {
  // operator oracle: the matrices of e, f, h on V(3)
  auto v = classical_simple(3);
  auto mat = [&](const ClassicalElem& x) {
    RatMatrix out(v.dim(), v.dim(), Rat(0));
    for (const auto& [k, coeff] : x.terms()) {
      auto [s, t, r] = k;
      RatMatrix m = RatMatrix::identity(v.dim(), Rat(0), Rat(1));
      for (std::int64_t i = 0; i < s; ++i) m = m * v.f;
      for (std::int64_t i = 0; i < t; ++i) m = m * v.h;
      for (std::int64_t i = 0; i < r; ++i) m = m * v.e;
      out += m * coeff;
    }
    return out;
  };
  using C = ClassicalElem;
  std::vector<C> xs{C::e(), C::f(), C::h(), C::e(2), C::monomial(1, 1, 2)};
  for (const auto& x : xs)
    for (const auto& y : xs) CHECK(mat(x * y) == mat(x) * mat(y));
}

TEST_CASE("commutation examples") {
  for (int ell : {3, 5, 7}) {
    const auto& f = CyclotomicField::get(ell);
    PBWElem E = PBWElem::E(ell), F = PBWElem::F(ell), K = PBWElem::K(ell);
    PBWElem KE = K * E;
    CHECK(KE.terms().size() == 1);
    CHECK(KE.terms().begin()->first == PBWMonomial{0, 1, 0, 1});
    CHECK(E * K == K * E * f.zeta_pow(-2));
    CHECK((K * E - E * K * f.zeta_pow(2)).is_zero());
    CHECK(E * F == F * E + PBWElem::cartan(kshift_binom(0, 1, ell)));
    CHECK(pbw_pow(K, ell) == PBWElem::one(ell));
    CHECK(PBWElem::F(ell, ell) * PBWElem::F(ell, ell) == PBWElem::F(ell, 2 * ell) * CycScalar(f, 2));
    CHECK(pbw_pow(E, ell).is_zero());
    for (std::int64_t t = 0; t <= 2 * ell; ++t) {
      PBWElem bf = PBWElem::B(ell) * PBWElem::F(ell, t);
      CHECK(bf == PBWElem::part(t, kshift_binom(-2 * t, ell, ell), 0));
      CHECK(bf.parts().size() == 1);
    }
  }
}

TEST_CASE("printing") {
  const int ell = 3;
  CHECK(PBWElem::one(ell).to_string() == "1");
  CHECK(PBWElem::E(ell).to_string() == "E");
  CHECK(PBWElem::F(ell, 2).to_string() == "F^(2)");
  CHECK(pbw_monomial({2, 1, 1, 1}) == "F^(2) K B E");
  CHECK(PBWElem(ell).to_string() == "0");
}

TEST_CASE("associativity on random monomials") {
  std::mt19937_64 rng(17);
  for (int ell : {3, 5})
    for (int i = 0; i < 40; ++i) {
      PBWElem x = random_monomial(rng, ell), y = random_monomial(rng, ell), z = random_monomial(rng, ell);
      CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("divided powers factor through E and E^(l)") {
  for (int ell : {3, 5})
    for (std::int64_t a = 0; a <= 3 * ell; ++a) {
      std::int64_t a0 = a % ell, a1 = a / ell;
      CycScalar scale = q_factorial_at(a0, ell).inverse() * make_rat(1, factorial(a1));
      CHECK(pbw_pow(PBWElem::E(ell), a0) * pbw_pow(PBWElem::E(ell, ell), a1) * scale == PBWElem::E(ell, a));
      CHECK(pbw_pow(PBWElem::F(ell), a0) * pbw_pow(PBWElem::F(ell, ell), a1) * scale == PBWElem::F(ell, a));
    }
}

TEST_CASE("products agree with module operators") {
  const int ell = 3;
  auto m = tensor_module(restricted_simple(2, ell), frobenius_twist(classical_simple(2), ell));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    PBWElem x = random_monomial(rng, ell), y = random_monomial(rng, ell);
    CHECK(rep_of_pbw(m, x * y) == rep_of_pbw(m, x) * rep_of_pbw(m, y));
  }
}

TEST_CASE("Cartan shifts") {
  const int ell = 5;
  UZeroElem h = UZeroElem::B(ell) + UZeroElem::K(ell, 2);
  CHECK(cartan_shift(cartan_shift(h, 3), -1) == cartan_shift(h, 2));
  for (std::int64_t m = -10; m <= 10; ++m) CHECK(cartan_shift(h, 2).eval(m) == h.eval(m + 4));
  CHECK(PBWElem::cartan(h) * PBWElem::F(ell, 3) == PBWElem::part(3, cartan_shift(h, -3), 0));
  CHECK(PBWElem::E(ell, 3) * PBWElem::cartan(h) == PBWElem::part(0, cartan_shift(h, -3), 3));
}

TEST_CASE("Frobenius and its section") {
  for (int ell : {3, 5}) {
    const auto& f = CyclotomicField::get(ell);
    for (std::int64_t s = 0; s <= 3; ++s)
      for (std::int64_t t = 0; t <= 3; ++t)
        for (std::int64_t r = 0; r <= 3; ++r) {
          auto x = ClassicalElem::monomial(s, t, r);
          CHECK(frobenius(gamma(x, ell)) == x);
        }
    CHECK(gamma(ClassicalElem::f(2), ell) == PBWElem::F(ell, 2 * ell) * CycScalar(f, 2));
    CHECK(frobenius(PBWElem::E(ell)).is_zero());
    CHECK(frobenius(PBWElem::K(ell)) == ClassicalElem::one());
    CHECK(frobenius(PBWElem::E(ell, 2 * ell)) == ClassicalElem::e(2) * make_rat(1, 2));
    CHECK(frobenius(PBWElem::monomial(ell, {ell, 2, 1, 0}, f.one())) == ClassicalElem::monomial(1, 1, 0));
    CHECK_THROWS_AS(frobenius(PBWElem::B(ell) * f.zeta_pow(1)), std::domain_error);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> k(0, 2), c(0, ell - 1), d(0, 2);
    for (int i = 0; i < 40; ++i) {
      PBWElem x = PBWElem::monomial(ell, {k(rng) * ell, c(rng), d(rng), k(rng) * ell}, f.one());
      PBWElem y = PBWElem::monomial(ell, {k(rng) * ell, c(rng), d(rng), k(rng) * ell}, f.one());
      CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
    }
  }
}

TEST_CASE("mixing roots of unity is rejected") {
  CHECK_THROWS(PBWElem::E(3) * PBWElem::E(5));
}
