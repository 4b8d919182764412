// Runs the fifteen acceptance criteria, one PASS/FAIL line each, and exits
// nonzero when any criterion fails or overruns its time limit.

#include "hyperzeta/cli/expr.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"
#include "hyperzeta/uzero.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifndef HYPERZETA_CLI_PATH
#error "HYPERZETA_CLI_PATH must name the hyperzeta executable"
#endif

using namespace hyperzeta;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void expect(bool cond, const std::function<std::string()>& what) {
    if (!cond) fail(what());
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

std::string s(std::int64_t v) { return std::to_string(v); }

CycScalar cyc(int ell, std::int64_t v) { return CycScalar(CyclotomicField::get(ell), v); }

Outcome reflection() {
  Outcome o;
  for (std::int64_t m = -8; m <= 8; ++m)
    for (std::int64_t t = 0; t <= 8; ++t) {
      LaurentPoly rhs = gauss_binom(-m + t - 1, t);
      o.expect(gauss_binom(m, t) == (t % 2 ? -rhs : rhs), [&] { return "m=" + s(m) + " t=" + s(t); });
    }
  return o;
}

Outcome top_digit() {
  Outcome o;
  for (int ell : {3, 5, 7})
    for (std::int64_t m = -3 * ell; m <= 3 * ell; ++m)
      o.expect(gauss_binom_at(m, ell, ell) == cyc(ell, short_ladic(m, ell).m1),
               [&] { return "l=" + s(ell) + " m=" + s(m); });
  return o;
}

Outcome branches() {
  Outcome o;
  for (int ell : {3, 5, 7})
    for (std::int64_t m = 0; m < ell; ++m)
      for (std::int64_t c = 0; c < 3 * ell; ++c) {
        o.expect(cyc(ell, binom_shift_eval(m, c, ShiftDirection::down, ell)) == gauss_binom_at(m - c, ell, ell),
                 [&] { return "down l=" + s(ell) + " m=" + s(m) + " c=" + s(c); });
        o.expect(cyc(ell, binom_shift_eval(m, c, ShiftDirection::up, ell)) == gauss_binom_at(m + c, ell, ell),
                 [&] { return "up l=" + s(ell) + " m=" + s(m) + " c=" + s(c); });
      }
  return o;
}

Outcome expansions() {
  Outcome o;
  const int ell = 5;
  for (std::int64_t c = 0; c < 15; ++c) {
    o.expect(kshift_binom(-c, ell, ell) == kshift_down_expansion(c, ell), [&] { return "down element c=" + s(c); });
    o.expect(kshift_binom(c, ell, ell) == kshift_up_expansion(c, ell), [&] { return "up element c=" + s(c); });
    for (std::int64_t m = 0; m < ell; ++m) {
      o.expect(binom_down_expansion_at(m, c, ell) == gauss_binom_at(m - c, ell, ell),
               [&] { return "down scalar m=" + s(m) + " c=" + s(c); });
      o.expect(binom_up_expansion_at(m, c, ell) == gauss_binom_at(m + c, ell, ell),
               [&] { return "up scalar m=" + s(m) + " c=" + s(c); });
    }
  }
  return o;
}

Outcome weight_group() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> u(-100, 100);
  std::size_t pairs = 0;
  for (int ell : {3, 5, 7})
    for (int rank : {1, 2}) {
      auto cd = CartanData::of_type('A', rank, ell);
      for (int i = 0; i < 2000; ++i) {
        std::vector<std::int64_t> m(static_cast<std::size_t>(rank)), n(m.size()), sum(m.size()), neg(m.size()),
            diff(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) {
          m[j] = u(rng);
          n[j] = u(rng);
          sum[j] = m[j] + n[j];
          neg[j] = -m[j];
          diff[j] = m[j] - n[j];
        }
        Weight a = embed(m, cd), b = embed(n, cd);
        auto where = [&] { return cd->name() + " l=" + s(ell) + " sample " + s(i); };
        o.expect(weight_add(a, b) == embed(sum, cd), where);
        o.expect(weight_neg(a) == embed(neg, cd), where);
        o.expect(weight_sub(a, b) == embed(diff, cd), where);
        ++pairs;
      }
    }
  o.expect(pairs >= 10000, [&] { return "only " + s(static_cast<std::int64_t>(pairs)) + " pairs"; });
  return o;
}

Outcome primitive() {
  Outcome o;
  for (int ell : {3, 5, 7}) {
    TensorSq res = primitivity_residual(primitive_element(ell));
    o.expect(res.side() == static_cast<std::size_t>(2 * ell) && res.is_zero(), [&] { return "residual l=" + s(ell); });
    o.expect(primitive_space(ell).size() == 1, [&] { return "space dimension l=" + s(ell); });
    o.expect(primitive_coefficients(ell)[0] == CycScalar(CyclotomicField::get(ell), make_rat(ell - 1, 2 * ell)),
             [&] { return "a0 l=" + s(ell); });
  }
  return o;
}

Outcome vandermonde() {
  Outcome o;
  for (int ell = 3; ell <= 13; ell += 2) {
    const auto& f = CyclotomicField::get(ell);
    auto n = static_cast<std::size_t>(ell);
    ExactMatrix v = zero_matrix(f, n, n), w = zero_matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        v(i, j) = f.zeta_pow(static_cast<std::int64_t>(i * j));
        w(i, j) = f.zeta_pow(-static_cast<std::int64_t>(i * j)) * make_rat(1, ell);
      }
    o.expect(v * w == identity_matrix(f, n), [&] { return "l=" + s(ell); });
  }
  return o;
}

Outcome associativity() {
  Outcome o;
  for (int ell : {3, 5}) {
    const auto& f = CyclotomicField::get(ell);
    std::mt19937_64 rng(static_cast<std::uint64_t>(ell));
    std::uniform_int_distribution<std::int64_t> idx(0, 2 * ell + 2), c(0, ell - 1), d(0, 1);
    auto mono = [&] { return PBWElem::monomial(ell, {idx(rng), c(rng), d(rng), idx(rng)}, f.zeta_pow(c(rng))); };
    for (int i = 0; i < 200; ++i) {
      PBWElem x = mono(), y = mono(), z = mono();
      o.expect((x * y) * z == x * (y * z),
               [&] { return "l=" + s(ell) + ": " + x.to_string() + " | " + y.to_string() + " | " + z.to_string(); });
    }
  }
  return o;
}

Outcome section() {
  Outcome o;
  for (int ell : {3, 5})
    for (std::int64_t a = 0; a <= 3; ++a)
      for (std::int64_t t = 0; t <= 3; ++t)
        for (std::int64_t r = 0; r <= 3; ++r) {
          ClassicalElem x = ClassicalElem::monomial(a, t, r);
          o.expect(frobenius(gamma(x, ell)) == x,
                   [&] { return "l=" + s(ell) + " f^" + s(a) + " h^" + s(t) + " e^" + s(r); });
        }
  return o;
}

std::vector<WeightModule> criterion_modules(int ell) {
  std::vector<WeightModule> mods;
  for (std::int64_t m0 = 0; m0 < ell; ++m0) {
    mods.push_back(restricted_simple(m0, ell));
    for (std::int64_t p = 0; p <= 3; ++p)
      mods.push_back(tensor_module(restricted_simple(m0, ell), frobenius_twist(classical_simple(p), ell)));
  }
  return mods;
}

Outcome compatibility() {
  Outcome o;
  for (int ell : {3, 5}) {
    std::vector<PBWElem> gens{PBWElem::E(ell), PBWElem::F(ell), PBWElem::K(ell), PBWElem::B(ell),
                              PBWElem::E(ell, ell), PBWElem::F(ell, ell)};
    for (const auto& m : criterion_modules(ell)) {
      std::vector<ExactMatrix> reps;
      for (const auto& g : gens) reps.push_back(rep_of_pbw(m, g));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          o.expect(rep_of_pbw(m, gens[i] * gens[j]) == reps[i] * reps[j],
                   [&] { return m.name() + " pair " + s(static_cast<std::int64_t>(i)) + "," + s(static_cast<std::int64_t>(j)); });
    }
  }
  return o;
}

Outcome weight_mapping() {
  Outcome o;
  for (int ell : {3, 5}) {
    std::size_t borrow = 0, no_borrow = 0, carry = 0, no_carry = 0;
    for (const auto& m : criterion_modules(ell)) {
      auto rep = weight_mapping_check(m, 2 * ell + 1);
      o.expect(rep.passed(), [&] { return m.name() + ": " + rep.failures.front(); });
      borrow += rep.down_borrow;
      no_borrow += rep.down_no_borrow;
      carry += rep.up_carry;
      no_carry += rep.up_no_carry;
    }
    o.expect(borrow && no_borrow && carry && no_carry, [&] { return "a branch was not exercised at l=" + s(ell); });
  }
  return o;
}

Outcome tensor_theorem() {
  Outcome o;
  for (auto [ell, top] : {std::pair{3, 12}, std::pair{5, 20}})
    for (std::int64_t m = 0; m <= top; ++m) {
      auto rep = tensor_theorem_check(m, ell);
      o.expect(rep.passed(), [&] { return "l=" + s(ell) + " m=" + s(m) + ": " + rep.failures.front(); });
    }
  return o;
}

Outcome annihilators() {
  Outcome o;
  for (int ell : {3, 5}) {
    for (std::int64_t m0 = 0; m0 < ell; ++m0) {
      Annihilator base = uzeta_annihilator(restricted_simple(m0, ell));
      o.expect(base.codimension == static_cast<std::size_t>((m0 + 1) * (m0 + 1)),
               [&] { return "codimension of L(" + s(m0) + ") at l=" + s(ell); });
      for (std::int64_t p = 0; p <= 3; ++p) {
        auto m = tensor_module(restricted_simple(m0, ell), frobenius_twist(classical_simple(p), ell));
        Annihilator a = uzeta_annihilator(m);
        o.expect(a.codimension == base.codimension && same_annihilator(a, base),
                 [&] { return "l=" + s(ell) + " m0=" + s(m0) + " p=" + s(p); });
      }
    }
  }
  return o;
}

Outcome commutants() {
  Outcome o;
  for (int ell : {3, 5, 7})
    for (std::int64_t m0 = 0; m0 < ell; ++m0)
      o.expect(commutant(restricted_simple(m0, ell), GenSubset::uzeta) == 1,
               [&] { return "l=" + s(ell) + " m0=" + s(m0); });
  return o;
}

Outcome cli_end_to_end() {
  Outcome o;
  std::string cmd = std::string("\"") + HYPERZETA_CLI_PATH + "\" verify --suite all --ell 3,5 > /dev/null";
  int status = std::system(cmd.c_str());
  o.expect(status == 0, [&] { return "verify exited with status " + s(status); });
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    int ell = i % 2 ? 5 : 3;
    const auto& f = CyclotomicField::get(ell);
    std::uniform_int_distribution<std::int64_t> idx(0, 2 * ell), c(0, ell - 1), d(0, 2), n(-9, 9), den(1, 5);
    PBWElem x(ell);
    for (int k = 0; k < 3; ++k) {
      CycScalar coeff(f);
      for (int j = 0; j < 3; ++j) coeff += f.zeta_pow(c(rng)) * make_rat(n(rng), den(rng));
      x += PBWElem::monomial(ell, {idx(rng), c(rng), d(rng), idx(rng)}, coeff);
    }
    std::string text = x.to_string();
    PBWElem back = cli::evaluate(*cli::parse(text), ell);
    o.expect(back == x, [&] { return "round trip of " + text; });
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gaussian binomial reflection identity", 5, reflection},
      {2, "binomial over l is the top l-adic digit", 5, top_digit},
      {3, "shifted binomial branch formulas", 0, branches},
      {4, "expansions of shifted Cartan binomials", 30, expansions},
      {5, "embed is a homomorphism; negation and subtraction", 0, weight_group},
      {6, "primitive element of the Cartan part", 10, primitive},
      {7, "Vandermonde inverse over the l-th roots", 0, vandermonde},
      {8, "PBW associativity on random triples", 60, associativity},
      {9, "Frobenius after section is the identity", 0, section},
      {10, "module operators respect products", 120, compatibility},
      {11, "divided powers move weights with carries", 0, weight_mapping},
      {12, "tensor product theorem", 300, tensor_theorem},
      {13, "annihilators of twisted tensor products", 300, annihilators},
      {14, "commutant of restricted simples", 0, commutants},
      {15, "command-line end to end", 0, cli_end_to_end},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    if (!o.ok) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "%s %2d. %s (%.2f s)", o.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs);
    std::cout << line;
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
