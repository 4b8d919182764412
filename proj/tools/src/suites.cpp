#include "hyperzeta/cli/suites.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"
#include "hyperzeta/uzero.hpp"

#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>

namespace hyperzeta::cli {

namespace {

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view suite, int ell) {
    std::uint32_t h = 2166136261u;  // FNV-1a
    for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h,
                      static_cast<std::uint32_t>(ell)};
    gen_.seed(seq);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
  return s + ")";
}

/// Runs body against a fresh check and appends it; an escaping exception is
/// recorded as one failed case.
template <class Body>
void check(Report& report, const std::string& suite, const std::string& id, std::optional<int> ell,
           Body&& body) {
  Check c;
  c.suite = suite;
  c.id = id;
  c.ell = ell;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.record_error(e.what());
  }
  report.checks.push_back(std::move(c));
}

CycScalar cyc(int ell, std::int64_t v) { return CycScalar(CyclotomicField::get(ell), v); }

CycScalar random_scalar(Rng& rng, int ell) {
  const auto& f = CyclotomicField::get(ell);
  CycScalar s(f);
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < terms; ++i)
    s += CycScalar::zeta(f, rng.uniform(0, ell - 1)) * make_rat(rng.uniform(-5, 5), rng.uniform(1, 4));
  return s;
}

UZeroElem random_cartan(Rng& rng, int ell, int max_degree) {
  UZeroElem h(ell);
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < terms; ++i)
    h += UZeroElem::monomial(ell, rng.uniform(0, ell - 1), static_cast<int>(rng.uniform(0, max_degree)),
                             random_scalar(rng, ell));
  return h;
}

// ---------------------------------------------------------------- qcomb

void qcomb_common(Report& r) {
  const std::string S = "qcomb";
  check(r, S, "eq5.reflection", std::nullopt, [](Check& c) {
    for (std::int64_t m = -8; m <= 8; ++m)
      for (std::int64_t t = 0; t <= 8; ++t) {
        LaurentPoly rhs = gauss_binom(-m + t - 1, t);
        if (t % 2) rhs = -rhs;
        c.record(gauss_binom(m, t) == rhs, [&] { return "m=" + str(m) + " t=" + str(t); });
      }
  });
  check(r, S, "pascal", std::nullopt, [](Check& c) {
    for (std::int64_t m = 0; m <= 10; ++m)
      for (std::int64_t t = 1; t <= m + 1; ++t) {
        LaurentPoly lhs = gauss_binom(m + 1, t);
        LaurentPoly a = LaurentPoly::monomial(-t) * gauss_binom(m, t) +
                        LaurentPoly::monomial(m - t + 1) * gauss_binom(m, t - 1);
        LaurentPoly b = LaurentPoly::monomial(t) * gauss_binom(m, t) +
                        LaurentPoly::monomial(t - m - 1) * gauss_binom(m, t - 1);
        c.record(lhs == a && lhs == b, [&] { return "m=" + str(m) + " t=" + str(t); });
      }
  });
  check(r, S, "examples", std::nullopt, [](Check& c) {
    c.record(gauss_binom(2, 1).to_string() == "q + q^-1", [] { return "gauss_binom(2,1)"; });
    c.record(gauss_binom(-2, 3).to_string() == "-(q^3 + q + q^-1 + q^-3)", [] { return "gauss_binom(-2,3)"; });
    c.record(gauss_binom_at(7, 5, 5) == cyc(5, 1), [] { return "gauss_binom_at(7,5,5)"; });
    c.record(gauss_binom_at(10, 5, 5) == cyc(5, 2), [] { return "gauss_binom_at(10,5,5)"; });
    c.record(short_ladic(-7, 5) == LAdic{3, -2}, [] { return "short_ladic(-7,5)"; });
    c.record(binom_shift_eval(3, 7, ShiftDirection::down, 5) == -1, [] { return "down m=3 c=7"; });
    c.record(binom_shift_eval(1, 7, ShiftDirection::down, 5) == -2, [] { return "down m=1 c=7"; });
    c.record(binom_shift_eval(3, 7, ShiftDirection::up, 5) == 2, [] { return "up m=3 c=7"; });
    c.record(q_factorial_at(5, 5).is_zero() && !q_factorial_at(4, 5).is_zero(), [] { return "[5]! at l=5"; });
  });
}

void qcomb_ell(Report& r, int ell, Rng& rng) {
  const std::string S = "qcomb";
  const auto& f = CyclotomicField::get(ell);
  check(r, S, "eq6.top_digit", ell, [&](Check& c) {
    for (std::int64_t m = -3 * ell; m <= 3 * ell; ++m)
      c.record(gauss_binom_at(m, ell, ell) == cyc(ell, short_ladic(m, ell).m1),
               [&] { return "m=" + str(m); });
  });
  check(r, S, "eq7_8.branches", ell, [&](Check& c) {
    for (std::int64_t m = 0; m < ell; ++m)
      for (std::int64_t k = 0; k < 3 * ell; ++k) {
        c.record(cyc(ell, binom_shift_eval(m, k, ShiftDirection::down, ell)) == gauss_binom_at(m - k, ell, ell),
                 [&] { return "down m=" + str(m) + " c=" + str(k); });
        c.record(cyc(ell, binom_shift_eval(m, k, ShiftDirection::up, ell)) == gauss_binom_at(m + k, ell, ell),
                 [&] { return "up m=" + str(m) + " c=" + str(k); });
      }
  });
  check(r, S, "q_lucas", ell, [&](Check& c) {
    for (std::int64_t a0 = 0; a0 < ell; ++a0)
      for (std::int64_t c0 = 0; c0 < ell; ++c0)
        for (std::int64_t a1 = 0; a1 <= 4; ++a1)
          for (std::int64_t c1 = 0; c1 <= 4; ++c1)
            c.record(q_lucas(a0, a1, c0, c1, ell) == gauss_binom_at(a0 + a1 * ell, c0 + c1 * ell, ell), [&] {
              return "a=" + str(a0) + "+" + str(a1) + "l c=" + str(c0) + "+" + str(c1) + "l";
            });
  });
  check(r, S, "specialize.homomorphism", ell, [&](Check& c) {
    for (int i = 0; i < 200; ++i) {
      std::int64_t m1 = rng.uniform(-6, 6), t1 = rng.uniform(0, 5), m2 = rng.uniform(-6, 6), t2 = rng.uniform(0, 5);
      LaurentPoly x = gauss_binom(m1, t1), y = gauss_binom(m2, t2);
      std::int64_t power = rng.uniform(1, ell - 1);
      c.record((x * y).specialize(f, power) == x.specialize(f, power) * y.specialize(f, power) &&
                   (x + y).specialize(f, power) == x.specialize(f, power) + y.specialize(f, power),
               [&] { return "[" + str(m1) + "," + str(t1) + "] [" + str(m2) + "," + str(t2) + "]"; });
    }
  });
  check(r, S, "exact.field_axioms", ell, [&](Check& c) {
    for (int i = 0; i < 200; ++i) {
      CycScalar x = random_scalar(rng, ell), y = random_scalar(rng, ell), z = random_scalar(rng, ell);
      bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x * y == y * x &&
                (x - x).is_zero();
      if (!x.is_zero()) ok = ok && (x * x.inverse()).is_one();
      c.record(ok, [&] { return x.to_string() + " ; " + y.to_string() + " ; " + z.to_string(); });
    }
  });
  check(r, S, "exact.vandermonde", ell, [&](Check& c) {
    auto n = static_cast<std::size_t>(ell);
    ExactMatrix v = zero_matrix(f, n, n), w = zero_matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto e = static_cast<std::int64_t>(i * j);
        v(i, j) = f.zeta_pow(e);
        w(i, j) = f.zeta_pow(-e) * make_rat(1, ell);
      }
    c.record(v * w == identity_matrix(f, n), [] { return "V * V^-1 != I"; });
    c.record(rank(v) == n, [] { return "rank deficient"; });
  });
  check(r, S, "exact.rank_nullity", ell, [&](Check& c) {
    for (int i = 0; i < 30; ++i) {
      auto rows = static_cast<std::size_t>(rng.uniform(1, 5)), cols = static_cast<std::size_t>(rng.uniform(1, 5));
      ExactMatrix m = zero_matrix(f, rows, cols);
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < cols; ++b)
          if (rng.uniform(0, 2) == 0) m(a, b) = random_scalar(rng, ell);
      auto ker = kernel(m);
      bool ok = rank(m) + ker.size() == cols;
      for (const auto& v : ker)
        for (const auto& x : m.apply(v)) ok = ok && x.is_zero();
      c.record(ok, [&] { return "matrix " + m.shape() + " sample " + str(i); });
    }
  });
}

// ---------------------------------------------------------------- weights

void weights_ell(Report& r, int ell, Rng& rng) {
  const std::string S = "weights";
  std::vector<CartanPtr> data{CartanData::of_type('A', 1, ell), CartanData::of_type('A', 2, ell),
                              CartanData::of_type('B', 2, ell)};
  auto random_vec = [&](int n, std::int64_t bound) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.uniform(-bound, bound);
    return v;
  };
  auto add_vec = [](std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, int sign = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
    return a;
  };
  check(r, S, "embed.homomorphism", ell, [&](Check& c) {
    for (const auto& cd : data)
      for (int i = 0; i < 1200; ++i) {
        auto m = random_vec(cd->rank(), 100), n = random_vec(cd->rank(), 100);
        c.record(weight_add(embed(m, cd), embed(n, cd)) == embed(add_vec(m, n), cd),
                 [&] { return cd->name() + " " + vec_str(m) + " + " + vec_str(n); });
      }
  });
  check(r, S, "embed.neg_sub", ell, [&](Check& c) {
    for (const auto& cd : data)
      for (int i = 0; i < 400; ++i) {
        auto m = random_vec(cd->rank(), 100), n = random_vec(cd->rank(), 100);
        auto neg = m;
        for (auto& x : neg) x = -x;
        c.record(weight_neg(embed(m, cd)) == embed(neg, cd) &&
                     weight_sub(embed(m, cd), embed(n, cd)) == embed(add_vec(m, n, -1), cd) &&
                     embed(m, cd).to_integers() == m,
                 [&] { return cd->name() + " " + vec_str(m) + " , " + vec_str(n); });
      }
  });
  auto random_weight = [&](const CartanPtr& cd) {
    std::vector<std::int64_t> l0;
    std::vector<Rat> l1;
    for (int i = 0; i < cd->rank(); ++i) {
      l0.push_back(rng.uniform(0, ell - 1));
      l1.push_back(make_rat(rng.uniform(-20, 20), rng.uniform(1, 6)));
    }
    return Weight(cd, l0, l1);
  };
  check(r, S, "group.axioms", ell, [&](Check& c) {
    for (const auto& cd : data)
      for (int i = 0; i < 200; ++i) {
        Weight x = random_weight(cd), y = random_weight(cd), z = random_weight(cd);
        Weight zero = Weight::identity(cd);
        bool ok = weight_add(weight_add(x, y), z) == weight_add(x, weight_add(y, z)) &&
                  weight_add(x, y) == weight_add(y, x) && weight_add(x, zero) == x &&
                  weight_add(x, weight_neg(x)) == zero && weight_sub(x, y) == weight_add(x, weight_neg(y));
        c.record(ok, [&] { return x.to_string() + " " + y.to_string() + " " + z.to_string(); });
      }
  });
  check(r, S, "eval.characters", ell, [&](Check& c) {
    for (const auto& cd : data)
      for (int i = 0; i < 200; ++i) {
        Weight x = random_weight(cd), y = random_weight(cd);
        Weight s = weight_add(x, y);
        bool ok = true;
        for (int j = 1; j <= cd->rank(); ++j) {
          auto jj = static_cast<std::size_t>(j - 1);
          ok = ok && eval_K(s, j) == eval_K(x, j) * eval_K(y, j);
          Rat carry = x.lam0()[jj] + y.lam0()[jj] >= ell ? Rat(1) : Rat(0);
          ok = ok && eval_B(s, j) == eval_B(x, j) + eval_B(y, j) + carry;
        }
        c.record(ok, [&] { return x.to_string() + " + " + y.to_string(); });
      }
  });
  check(r, S, "dominance.order", ell, [&](Check& c) {
    auto a1 = data[0], a2 = data[1];
    for (int i = 0; i < 300; ++i) {
      auto m = random_vec(1, 12), n = random_vec(1, 12);
      std::int64_t d = n[0] - m[0];
      bool expect = d >= 0 && d % 2 == 0;
      c.record(dominance_leq(embed(m, a1), embed(n, a1)) == expect,
               [&] { return "A1 " + vec_str(m) + " <= " + vec_str(n); });
      auto p = random_vec(2, 9), q = random_vec(2, 9);
      std::int64_t d1 = q[0] - p[0], d2 = q[1] - p[1];
      std::int64_t x1 = 2 * d1 + d2, x2 = d1 + 2 * d2;
      bool expect2 = x1 >= 0 && x2 >= 0 && x1 % 3 == 0 && x2 % 3 == 0;
      c.record(dominance_leq(embed(p, a2), embed(q, a2)) == expect2,
               [&] { return "A2 " + vec_str(p) + " <= " + vec_str(q); });
    }
    for (int i = 0; i < 100; ++i) {
      auto p = random_vec(2, 4), q = random_vec(2, 4), s = random_vec(2, 4);
      Weight x = embed(p, a2), y = embed(q, a2), z = embed(s, a2);
      bool refl = dominance_leq(x, x);
      bool anti = !(dominance_leq(x, y) && dominance_leq(y, x)) || x == y;
      bool trans = !(dominance_leq(x, y) && dominance_leq(y, z)) || dominance_leq(x, z);
      c.record(refl && anti && trans, [&] { return vec_str(p) + " " + vec_str(q) + " " + vec_str(s); });
    }
  });
  check(r, S, "examples", ell, [&](Check& c) {
    auto a2 = data[1];
    c.record(simple_root(1, a2) == embed({2, -1}, a2), [] { return "simple_root(1, A2)"; });
    c.record(weight_neg(Weight::identity(a2)) == Weight::identity(a2), [] { return "neg identity"; });
    Weight s = weight_add(embed(ell - 2, ell), embed(ell - 1, ell));
    c.record(s.lam0() == std::vector<std::int64_t>{ell - 3} && s.lam1() == std::vector<Rat>{Rat(1)},
             [&] { return "carry: " + s.to_string(); });
    c.record(dominance_leq(embed(1, ell), embed(7, ell)) && !dominance_leq(embed(1, ell), embed(4, ell)),
             [] { return "dominance 1 <= 7, 1 </= 4"; });
  });
  check(r, S, "cartan.g2_constraint", ell, [&](Check& c) {
    bool threw = false;
    try {
      CartanData::of_type('G', 2, ell);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    c.record(threw == (ell % 3 == 0), [&] { return threw ? "G2 rejected" : "G2 accepted"; });
  });
}

// ---------------------------------------------------------------- uzero

void uzero_ell(Report& r, int ell, Rng& rng) {
  const std::string S = "uzero";
  const auto& f = CyclotomicField::get(ell);
  check(r, S, "eval.homomorphism", ell, [&](Check& c) {
    for (int i = 0; i < 100; ++i) {
      UZeroElem x = random_cartan(rng, ell, 2), y = random_cartan(rng, ell, 2);
      UZeroElem p = x * y, s = x + y;
      for (std::int64_t m = -3 * ell; m <= 3 * ell; m += 1 + rng.uniform(0, 2))
        c.record(p.eval(m) == x.eval(m) * y.eval(m) && s.eval(m) == x.eval(m) + y.eval(m),
                 [&] { return "x=" + x.to_string() + " y=" + y.to_string() + " m=" + str(m); });
    }
  });
  check(r, S, "terms.roundtrip", ell, [&](Check& c) {
    for (int i = 0; i < 100; ++i) {
      UZeroElem x = random_cartan(rng, ell, 3);
      c.record(UZeroElem::from_terms(ell, x.terms()) == x, [&] { return x.to_string(); });
    }
  });
  check(r, S, "kshift.values", ell, [&](Check& c) {
    for (std::int64_t k = -2 * ell; k <= 2 * ell; ++k)
      for (std::int64_t t = 0; t <= 2 * ell + 1; ++t) {
        UZeroElem h = kshift_binom(k, t, ell);
        bool ok = h.degree() <= t / ell;
        for (std::int64_t m = -3 * ell; m <= 3 * ell && ok; ++m) ok = h.eval(m) == gauss_binom_at(m + k, t, ell);
        c.record(ok, [&] { return "c=" + str(k) + " t=" + str(t); });
      }
  });
  check(r, S, "expansion.element", ell, [&](Check& c) {
    for (std::int64_t k = 0; k < 3 * ell; ++k) {
      c.record(kshift_binom(-k, ell, ell) == kshift_down_expansion(k, ell), [&] { return "down c=" + str(k); });
      c.record(kshift_binom(k, ell, ell) == kshift_up_expansion(k, ell), [&] { return "up c=" + str(k); });
    }
  });
  check(r, S, "expansion.scalar", ell, [&](Check& c) {
    for (std::int64_t m = 0; m < ell; ++m)
      for (std::int64_t k = 0; k < 3 * ell; ++k) {
        c.record(binom_down_expansion_at(m, k, ell) == gauss_binom_at(m - k, ell, ell),
                 [&] { return "down m=" + str(m) + " c=" + str(k); });
        c.record(binom_up_expansion_at(m, k, ell) == gauss_binom_at(m + k, ell, ell),
                 [&] { return "up m=" + str(m) + " c=" + str(k); });
      }
  });
  check(r, S, "coproduct.cocommutative", ell, [&](Check& c) {
    TensorSq db = coproduct_B(ell);
    c.record(db.swapped() == db, [] { return "Delta(B) not symmetric"; });
    for (int i = 0; i < 20; ++i) {
      UZeroElem x = UZeroElem::monomial(ell, rng.uniform(0, ell - 1), static_cast<int>(rng.uniform(0, 1)),
                                        random_scalar(rng, ell));
      TensorSq d = coproduct(x);
      c.record(d.swapped() == d, [&] { return x.to_string(); });
    }
  });
  check(r, S, "coproduct.carry", ell, [&](Check& c) {
    TensorSq db = coproduct_B(ell);
    for (std::int64_t m = -2 * ell; m < 2 * ell; ++m)
      for (std::int64_t n = -2 * ell; n < 2 * ell; ++n) {
        LAdic a = short_ladic(m, ell), b = short_ladic(n, ell);
        std::int64_t carry = a.m0 + b.m0 >= ell ? 1 : 0;
        c.record(db.eval(m, n) == cyc(ell, a.m1 + b.m1 + carry), [&] { return "m=" + str(m) + " m'=" + str(n); });
      }
  });
  check(r, S, "coproduct.multiplicative", ell, [&](Check& c) {
    for (std::int64_t k = 0; k < ell; ++k) {
      UZeroElem x = UZeroElem::K(ell, k);
      TensorSq d = coproduct(x * UZeroElem::B(ell));
      c.record(d == coproduct_B(ell).group_shift(k), [&] { return "K^" + str(k) + " B"; });
    }
  });
  check(r, S, "primitive.residual", ell, [&](Check& c) {
    TensorSq res = primitivity_residual(primitive_element(ell));
    c.record(res.is_zero(), [&] { return str(static_cast<std::int64_t>(res.nonzeros())) + " nonzero entries"; });
    c.info["side"] = res.side();
  });
  check(r, S, "primitive.space", ell, [&](Check& c) {
    auto space = primitive_space(ell);
    c.record(space.size() == 1, [&] { return "dimension " + str(static_cast<std::int64_t>(space.size())); });
  });
  check(r, S, "primitive.coefficients", ell, [&](Check& c) {
    auto a = primitive_coefficients(ell);
    c.record(a.size() == static_cast<std::size_t>(ell) && a[0] == CycScalar(f, make_rat(ell - 1, 2 * ell)),
             [&] { return "a0=" + a[0].to_string(); });
    c.record(primitive_element(ell).eval(0).is_zero(), [] { return "p(0) != 0"; });
    // B itself is not primitive.
    c.record(!primitivity_residual(UZeroElem::B(ell)).is_zero(), [] { return "B primitive"; });
  });
}

// ---------------------------------------------------------------- pbw

PBWElem random_monomial(Rng& rng, int ell, std::int64_t max_index, int max_degree) {
  PBWMonomial m{rng.uniform(0, max_index), rng.uniform(0, ell - 1), rng.uniform(0, max_degree),
                rng.uniform(0, max_index)};
  return PBWElem::monomial(ell, m, random_scalar(rng, ell));
}

void pbw_common(Report& r) {
  const std::string S = "pbw";
  check(r, S, "classical.relations", std::nullopt, [](Check& c) {
    using C = ClassicalElem;
    c.record(C::e() * C::f() == C::f() * C::e() + C::h(), [] { return "[e,f] = h"; });
    c.record(C::h() * C::e() == C::e() * C::h() + C::e() * Rat(2), [] { return "[h,e] = 2e"; });
    c.record(C::h() * C::f() == C::f() * C::h() - C::f() * Rat(2), [] { return "[h,f] = -2f"; });
    for (std::int64_t s = 0; s <= 2; ++s)
      for (std::int64_t t = 0; t <= 2; ++t)
        for (std::int64_t q = 0; q <= 2; ++q) {
          C x = C::monomial(s, t, q), y = C::monomial(q, s, t), z = C::monomial(t, q, s);
          c.record((x * y) * z == x * (y * z), [&] { return "assoc " + x.to_string(); });
        }
  });
}

void pbw_ell(Report& r, int ell, Rng& rng) {
  const std::string S = "pbw";
  const auto& f = CyclotomicField::get(ell);
  check(r, S, "assoc.random", ell, [&](Check& c) {
    for (int i = 0; i < 200; ++i) {
      PBWElem x = random_monomial(rng, ell, 2 * ell + 2, 1), y = random_monomial(rng, ell, 2 * ell + 2, 1),
              z = random_monomial(rng, ell, 2 * ell + 2, 1);
      c.record((x * y) * z == x * (y * z),
               [&] { return x.to_string() + " | " + y.to_string() + " | " + z.to_string(); });
    }
  });
  check(r, S, "shift.coherence", ell, [&](Check& c) {
    for (int i = 0; i < 50; ++i) {
      UZeroElem h = random_cartan(rng, ell, 1), g = random_cartan(rng, ell, 1);
      std::int64_t a = rng.uniform(-2 * ell, 2 * ell), b = rng.uniform(-2 * ell, 2 * ell);
      bool ok = cartan_shift(h * g, a) == cartan_shift(h, a) * cartan_shift(g, a) &&
                cartan_shift(cartan_shift(h, a), b) == cartan_shift(h, a + b);
      std::int64_t t = rng.uniform(0, 2 * ell + 2);
      ok = ok && PBWElem::cartan(h) * PBWElem::F(ell, t) == PBWElem::part(t, cartan_shift(h, -t), 0);
      ok = ok && PBWElem::E(ell, t) * PBWElem::cartan(h) == PBWElem::part(0, cartan_shift(h, -t), t);
      c.record(ok, [&] { return "h=" + h.to_string() + " a=" + str(a) + " b=" + str(b) + " t=" + str(t); });
    }
  });
  check(r, S, "divided_power.factorization", ell, [&](Check& c) {
    for (std::int64_t a = 0; a <= 3 * ell; ++a) {
      std::int64_t a0 = a % ell, a1 = a / ell;
      CycScalar scale = q_factorial_at(a0, ell).inverse() * make_rat(1, factorial(a1));
      PBWElem e = pbw_pow(PBWElem::E(ell), a0) * pbw_pow(PBWElem::E(ell, ell), a1) * scale;
      PBWElem fe = pbw_pow(PBWElem::F(ell), a0) * pbw_pow(PBWElem::F(ell, ell), a1) * scale;
      c.record(e == PBWElem::E(ell, a) && fe == PBWElem::F(ell, a), [&] { return "a=" + str(a); });
    }
    c.record(pbw_pow(PBWElem::E(ell), ell).is_zero() && pbw_pow(PBWElem::F(ell), ell).is_zero(),
             [] { return "E^l or F^l nonzero"; });
  });
  check(r, S, "frobenius.multiplicative", ell, [&](Check& c) {
    for (int i = 0; i < 100; ++i) {
      auto pick = [&] {
        std::int64_t q = rng.uniform(0, 2) * ell;
        return rng.uniform(0, 3) == 0 ? q + rng.uniform(1, ell - 1) : q;
      };
      PBWElem x = PBWElem::monomial(ell, {pick(), rng.uniform(0, ell - 1), rng.uniform(0, 2), pick()}, f.one());
      PBWElem y = PBWElem::monomial(ell, {pick(), rng.uniform(0, ell - 1), rng.uniform(0, 2), pick()}, f.one());
      c.record(frobenius(x * y) == frobenius(x) * frobenius(y),
               [&] { return x.to_string() + " | " + y.to_string(); });
    }
  });
  check(r, S, "frobenius.section", ell, [&](Check& c) {
    for (std::int64_t s = 0; s <= 3; ++s)
      for (std::int64_t t = 0; t <= 3; ++t)
        for (std::int64_t q = 0; q <= 3; ++q) {
          ClassicalElem x = ClassicalElem::monomial(s, t, q);
          c.record(frobenius(gamma(x, ell)) == x,
                   [&] { return "f^" + str(s) + " h^" + str(t) + " e^" + str(q); });
        }
  });
  check(r, S, "triangular.refactor", ell, [&](Check& c) {
    std::vector<PBWElem> gens{PBWElem::E(ell), PBWElem::F(ell), PBWElem::K(ell), PBWElem::B(ell),
                              PBWElem::E(ell, ell), PBWElem::F(ell, ell), PBWElem::E(ell, 2)};
    for (int i = 0; i < 40; ++i) {
      PBWElem x = PBWElem::one(ell);
      std::string word;
      for (std::int64_t k = rng.uniform(1, 4); k > 0; --k) {
        auto g = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1));
        x = x * gens[g];
        word += str(static_cast<std::int64_t>(g));
      }
      PBWElem y(ell);
      for (const auto& [m, coeff] : x.terms())
        y += PBWElem::F(ell, m.b) * PBWElem::K(ell, m.c) * PBWElem::B(ell, static_cast<int>(m.d)) *
             PBWElem::E(ell, m.a) * coeff;
      c.record(x == y, [&] { return "word " + word; });
    }
  });
  check(r, S, "examples", ell, [&](Check& c) {
    PBWElem E = PBWElem::E(ell), F = PBWElem::F(ell), K = PBWElem::K(ell);
    c.record(K * E - E * K * f.zeta_pow(2) == PBWElem(ell), [] { return "K E = z^2 E K"; });
    c.record(K * F - F * K * f.zeta_pow(-2) == PBWElem(ell), [] { return "K F = z^-2 F K"; });
    c.record(E * F == F * E + PBWElem::cartan(kshift_binom(0, 1, ell)), [] { return "E F"; });
    c.record(pbw_pow(K, ell) == PBWElem::one(ell), [] { return "K^l"; });
    c.record(PBWElem::F(ell, ell) * PBWElem::F(ell, ell) == PBWElem::F(ell, 2 * ell) * cyc(ell, 2),
             [] { return "F^(l) F^(l)"; });
    for (std::int64_t t = 0; t <= 2 * ell; ++t) {
      c.record(PBWElem::B(ell) * PBWElem::F(ell, t) == PBWElem::part(t, kshift_binom(-2 * t, ell, ell), 0),
               [&] { return "B F^(" + str(t) + ")"; });
      c.record(PBWElem::E(ell, t) * PBWElem::B(ell) == PBWElem::part(0, kshift_binom(-2 * t, ell, ell), t),
               [&] { return "E^(" + str(t) + ") B"; });
    }
    c.record(gamma(ClassicalElem::f(2), ell) == PBWElem::F(ell, 2 * ell) * cyc(ell, 2), [] { return "gamma(f^2)"; });
    c.record(frobenius(E).is_zero() && frobenius(K) == ClassicalElem::one(), [] { return "Fr(E), Fr(K)"; });
    PBWElem x = PBWElem::monomial(ell, {ell, 2, 1, 0}, f.one());
    c.record(frobenius(x) == ClassicalElem::monomial(1, 1, 0), [] { return "Fr(F^(l) K^2 B)"; });
  });
}

// ---------------------------------------------------------------- repn

void repn_ell(Report& r, int ell) {
  const std::string S = "repn";
  std::vector<WeightModule> mods;
  for (std::int64_t m0 = 0; m0 < ell; ++m0) {
    mods.push_back(restricted_simple(m0, ell));
    for (std::int64_t p = 0; p <= 3; ++p)
      mods.push_back(tensor_module(restricted_simple(m0, ell), frobenius_twist(classical_simple(p), ell)));
  }
  std::vector<PBWElem> gens{PBWElem::E(ell),     PBWElem::F(ell),     PBWElem::K(ell),    PBWElem::B(ell),
                            PBWElem::E(ell, ell), PBWElem::F(ell, ell), PBWElem::E(ell, 2), PBWElem::F(ell, 2)};
  std::vector<std::string> gen_names{"E", "F", "K", "B", "E^(l)", "F^(l)", "E^(2)", "F^(2)"};
  check(r, S, "operator.compatibility", ell, [&](Check& c) {
    for (const auto& m : mods) {
      std::vector<ExactMatrix> reps;
      for (const auto& g : gens) reps.push_back(rep_of_pbw(m, g));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          c.record(rep_of_pbw(m, gens[i] * gens[j]) == reps[i] * reps[j],
                   [&] { return m.name() + " " + gen_names[i] + "*" + gen_names[j]; });
    }
  });
  check(r, S, "weight_mapping", ell, [&](Check& c) {
    std::size_t borrow = 0, no_borrow = 0, carry = 0, no_carry = 0;
    for (const auto& m : mods) {
      auto rep = weight_mapping_check(m, 2 * ell + 1);
      c.record(rep.passed(), [&] { return m.name() + ": " + rep.failures.front(); });
      borrow += rep.down_borrow;
      no_borrow += rep.down_no_borrow;
      carry += rep.up_carry;
      no_carry += rep.up_no_carry;
    }
    c.record(borrow > 0 && no_borrow > 0 && carry > 0 && no_carry > 0, [] { return "a carry branch was never hit"; });
    c.info = json{{"down_no_borrow", no_borrow}, {"down_borrow", borrow}, {"up_no_carry", no_carry}, {"up_carry", carry}};
  });
  check(r, S, "tensor_theorem", ell, [&](Check& c) {
    for (std::int64_t m = 0; m <= 4 * ell; ++m) {
      auto rep = tensor_theorem_check(m, ell);
      c.record(rep.passed(), [&] { return "m=" + str(m) + ": " + rep.failures.front(); });
    }
  });
  check(r, S, "annihilator.tensor", ell, [&](Check& c) {
    for (std::int64_t m0 = 0; m0 < ell; ++m0)
      for (std::int64_t p = 0; p <= 3; ++p) {
        auto rep = duflo_check(m0 + p * ell, ell);
        c.record(rep.passed(), [&] { return "m0=" + str(m0) + " p=" + str(p) + ": " + rep.failures.front(); });
      }
  });
  check(r, S, "commutant.restricted", ell, [&](Check& c) {
    for (std::int64_t m0 = 0; m0 < ell; ++m0) {
      std::size_t d = commutant(restricted_simple(m0, ell), GenSubset::uzeta);
      c.record(d == 1, [&] { return "L(" + str(m0) + ") commutant " + str(static_cast<std::int64_t>(d)); });
    }
  });
  check(r, S, "negative_controls", ell, [&](Check& c) {
    auto l0 = restricted_simple(0, ell), l1 = restricted_simple(1, ell);
    auto ds = direct_sum(l0, l0);
    auto cert = is_simple(ds);
    c.record(!cert.simple && cert.span_dim == 1, [] { return "L(0)+L(0) reported simple"; });
    c.record(commutant(ds, GenSubset::all) == 4, [] { return "L(0)+L(0) commutant != 4"; });
    auto mixed = direct_sum(l1, l0);
    c.record(!is_simple(mixed).simple, [] { return "L(1)+L(0) reported simple"; });
    c.record(!find_intertwiner(l1, simple_module(ell, ell)).has_value(), [] { return "L(1) ~ V(1)^Fr"; });
    const auto& f = CyclotomicField::get(ell);
    auto two = direct_sum(l1, l1);
    std::vector<CycScalar> v(two.dim(), CycScalar(f));
    v[0] = f.one();
    v[l1.dim()] = f.one();
    auto sub = cyclic_submodule(two, {v});
    c.record(sub.dim() == l1.dim() && is_simple(sub).simple && find_intertwiner(sub, l1).has_value(),
             [] { return "diagonal submodule of L(1)+L(1)"; });
    c.record(!is_simple(two).simple, [] { return "L(1)+L(1) reported simple"; });
  });
  check(r, S, "examples", ell, [&](Check& c) {
    auto l = restricted_simple(ell - 1, ell);
    c.record(uzeta_annihilator(l).codimension == static_cast<std::size_t>(ell * ell),
             [] { return "annihilator of L(l-1)"; });
    auto a1 = uzeta_annihilator(restricted_simple(1, ell));
    c.record(a1.codimension == 4 && a1.kernel.size() == static_cast<std::size_t>(ell * ell * ell - 4),
             [] { return "annihilator of L(1)"; });
    auto prim = primitive_vectors(simple_module(2 * ell + 1, ell));
    c.record(prim.size() == 1 && prim[0].basis.size() == 1 && prim[0].weight == embed(2 * ell + 1, ell),
             [] { return "primitive line of L(2l+1)"; });
    auto l2 = restricted_simple(2, ell);
    std::vector<Weight> expect{embed(2, ell), embed(0, ell), embed(-2, ell)};
    c.record(l2.labels() == expect, [] { return "labels of L(2)"; });
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qcomb", "weights", "uzero", "pbw", "repn"};
  return names;
}

void suite_qcomb(Report& report, const std::vector<int>& ells, std::uint64_t seed) {
  qcomb_common(report);
  for (int ell : ells) {
    Rng rng(seed, "qcomb", ell);
    qcomb_ell(report, ell, rng);
  }
}

void suite_weights(Report& report, const std::vector<int>& ells, std::uint64_t seed) {
  for (int ell : ells) {
    Rng rng(seed, "weights", ell);
    weights_ell(report, ell, rng);
  }
}

void suite_uzero(Report& report, const std::vector<int>& ells, std::uint64_t seed) {
  for (int ell : ells) {
    Rng rng(seed, "uzero", ell);
    uzero_ell(report, ell, rng);
  }
}

void suite_pbw(Report& report, const std::vector<int>& ells, std::uint64_t seed) {
  pbw_common(report);
  for (int ell : ells) {
    Rng rng(seed, "pbw", ell);
    pbw_ell(report, ell, rng);
  }
}

void suite_repn(Report& report, const std::vector<int>& ells, std::uint64_t) {
  for (int ell : ells) repn_ell(report, ell);
}

Report run_suites(const std::vector<std::string>& suites, const std::vector<int>& ells, std::uint64_t seed) {
  Report report;
  report.seed = seed;
  report.ells = ells;
  for (const auto& name : suite_names()) {
    bool wanted = false;
    for (const auto& s : suites) wanted = wanted || s == name || s == "all";
    if (!wanted) continue;
    report.suites.push_back(name);
    auto start = std::chrono::steady_clock::now();
    if (name == "qcomb") suite_qcomb(report, ells, seed);
    if (name == "weights") suite_weights(report, ells, seed);
    if (name == "uzero") suite_uzero(report, ells, seed);
    if (name == "pbw") suite_pbw(report, ells, seed);
    if (name == "repn") suite_repn(report, ells, seed);
    report.timings.push_back(
        {name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
  }
  report.sort();
  return report;
}

}  // namespace hyperzeta::cli
