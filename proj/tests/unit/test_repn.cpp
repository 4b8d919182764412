#include "hyperzeta/errors.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"

#include <doctest.h>

using namespace hyperzeta;

TEST_CASE("restricted simple modules") {
  const int ell = 5;
  const auto& f = CyclotomicField::get(ell);
  auto l = restricted_simple(2, ell);
  CHECK(l.dim() == 3);
  CHECK(l.labels() == std::vector<Weight>{embed(2, ell), embed(0, ell), embed(-2, ell)});
  CHECK(l.labels()[2].to_string() == "((3),(-1))");
  CHECK(l.op(Gen::K)(0, 0) == f.zeta_pow(2));
  CHECK(l.op(Gen::K)(2, 2) == f.zeta_pow(-2));
  CHECK(l.is_restricted_type());
  CHECK_FALSE(l.is_twisted_type());
  auto l3 = restricted_simple(3, ell);
  CHECK(l3.op(Gen::B)(2, 2) == CycScalar(f, -1));
  auto triv = restricted_simple(0, ell);
  CHECK(triv.op(Gen::E).is_zero());
  CHECK(triv.op(Gen::K) == identity_matrix(f, 1));
  CHECK_THROWS_AS(restricted_simple(ell, ell), std::invalid_argument);
}

TEST_CASE("classical and twisted modules") {
  auto v = classical_simple(3);
  CHECK_NOTHROW(v.check_relations());
  auto w = frobenius_twist(v, 3);
  CHECK(w.is_twisted_type());
  CHECK(w.labels()[0] == embed(9, 3));
  RatMatrix bad = v.e;
  bad(0, 1) += 1;
  CHECK_THROWS_AS((ClassicalModule{bad, v.f, v.h}.check_relations()), InvariantViolation);
}

TEST_CASE("relation checks reject a broken module") {
  const int ell = 3;
  auto l = restricted_simple(2, ell);
  auto ops = l.ops();
  ops[static_cast<std::size_t>(Gen::E)] = ops[static_cast<std::size_t>(Gen::E)] * CycScalar(l.field(), 2);
  CHECK_THROWS_AS(WeightModule(ell, l.labels(), ops, "broken"), InvariantViolation);
}

TEST_CASE("tensor products in both orders") {
  const int ell = 3;
  auto l = restricted_simple(1, ell);
  auto v = frobenius_twist(classical_simple(1), ell);
  auto lv = tensor_product(l, v), vl = tensor_product(v, l);
  CHECK(lv.dim() == 4);
  CHECK(vl.dim() == 4);
  CHECK(find_intertwiner(lv, vl).has_value());
  CHECK(is_simple(lv).simple);
  CHECK(is_simple(lv).span_dim == 16);
  CHECK(commutant(lv, GenSubset::all) == 1);
}

TEST_CASE("divided power operators") {
  const int ell = 3;
  auto m = simple_module(2 + 2 * ell, ell);
  for (std::int64_t a = 0; a <= 2 * ell + 1; ++a) {
    // E^(a) E^(1) = [a+1] E^(a+1)
    ExactMatrix lhs = rep_E_div(m, a) * m.op(Gen::E);
    CHECK(lhs == rep_E_div(m, a + 1) * q_integer_at(a + 1, ell));
    ExactMatrix fl = rep_F_div(m, a) * m.op(Gen::F);
    CHECK(fl == rep_F_div(m, a + 1) * q_integer_at(a + 1, ell));
  }
  CHECK(rep_of_pbw(m, PBWElem::E(ell, ell)) == m.op(Gen::El));
}

TEST_CASE("primitive vectors") {
  auto prim = primitive_vectors(simple_module(7, 3));
  REQUIRE(prim.size() == 1);
  CHECK(prim[0].weight.to_string() == "((1),(2))");
  CHECK(prim[0].basis.size() == 1);
  auto two = direct_sum(restricted_simple(1, 3), restricted_simple(1, 3));
  auto p2 = primitive_vectors(two);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].basis.size() == 2);
}

TEST_CASE("tensor product theorem, small cases") {
  for (std::int64_t m : {0, 2, 3, 7, 11}) {
    auto rep = tensor_theorem_check(m, 3);
    INFO("m = " << m);
    CHECK(rep.passed());
    CHECK(rep.dim == rep.expected_dim);
    CHECK(rep.certificate.span_dim == rep.dim * rep.dim);
  }
  auto r = tensor_theorem_check(3, 3);
  REQUIRE(r.primitive_weights.size() == 1);
  CHECK(r.primitive_weights[0] == embed(3, 3));
}

TEST_CASE("annihilators") {
  auto a1 = uzeta_annihilator(restricted_simple(1, 3));
  CHECK(a1.codimension == 4);
  CHECK(a1.kernel.size() == 23);
  auto a2 = uzeta_annihilator(restricted_simple(2, 3));
  CHECK(a2.codimension == 9);
  CHECK(same_annihilator(a1, uzeta_annihilator(simple_module(1 + 3 * 2, 3))));
  CHECK_FALSE(same_annihilator(a1, a2));
  for (std::int64_t m0 = 0; m0 < 3; ++m0)
    for (std::int64_t p = 0; p <= 2; ++p) CHECK(duflo_check(m0 + 3 * p, 3).passed());
}

TEST_CASE("commutants and negative controls") {
  for (int ell : {3, 5})
    for (std::int64_t m0 = 0; m0 < ell; ++m0) CHECK(commutant(restricted_simple(m0, ell), GenSubset::uzeta) == 1);
  auto l0 = restricted_simple(0, 3);
  auto ds = direct_sum(l0, l0);
  auto cert = is_simple(ds);
  CHECK_FALSE(cert.simple);
  CHECK(cert.span_dim == 1);
  CHECK(cert.target == 4);
  CHECK(commutant(ds, GenSubset::all) == 4);
  // V(1)^Fr has trivial u_zeta action, so its u_zeta commutant is everything.
  CHECK(commutant(simple_module(3, 3), GenSubset::uzeta) == 4);
  CHECK(commutant(simple_module(3, 3), GenSubset::all) == 1);
}

TEST_CASE("cyclic submodules") {
  const int ell = 3;
  auto l1 = restricted_simple(1, ell);
  auto two = direct_sum(l1, l1);
  std::vector<CycScalar> v(two.dim(), CycScalar(two.field()));
  v[0] = two.field().one();
  v[2] = two.field().zeta_pow(1);
  auto sub = cyclic_submodule(two, {v});
  CHECK(sub.dim() == 2);
  CHECK(is_simple(sub).simple);
  CHECK(find_intertwiner(sub, l1).has_value());
}

TEST_CASE("weight mapping hits every carry branch") {
  for (int ell : {3, 5}) {
    std::size_t borrow = 0, carry = 0, plain_down = 0, plain_up = 0;
    for (std::int64_t m0 = 0; m0 < ell; ++m0)
      for (std::int64_t p = 0; p <= 3; ++p) {
        auto rep = weight_mapping_check(simple_module(m0 + ell * p, ell), 2 * ell + 1);
        CHECK(rep.passed());
        borrow += rep.down_borrow;
        carry += rep.up_carry;
        plain_down += rep.down_no_borrow;
        plain_up += rep.up_no_carry;
      }
    CHECK(borrow > 0);
    CHECK(carry > 0);
    CHECK(plain_down > 0);
    CHECK(plain_up > 0);
  }
}

TEST_CASE("the twisted module at m = l") {
  for (int ell : {3, 5}) {
    auto m = simple_module(ell, ell);
    CHECK(m.dim() == 2);
    CHECK(m.labels() == std::vector<Weight>{embed(ell, ell), embed(-ell, ell)});
    CHECK(m.labels()[1].to_string() == "((0),(-1))");
  }
}
