#include "hyperzeta/cli/app.hpp"
#include "hyperzeta/cli/expr.hpp"
#include "hyperzeta/cli/json_io.hpp"
#include "hyperzeta/cli/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace hyperzeta;
using namespace hyperzeta::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

PBWElem nf(const std::string& s, int ell) { return evaluate(*parse(s), ell); }

}  // namespace

TEST_CASE("parser structure") {
  CHECK(parse("E^(2) F^(3)")->to_string() == "(E^(2) * F^(3))");
  CHECK(parse("K E - z^2 E K")->kind == Expr::Kind::sub);
  CHECK(parse("-E + 1/2")->kind == Expr::Kind::add);
  CHECK(parse("K^-1")->kind == Expr::Kind::pow);
  CHECK(parse("  ( E )*F ")->kind == Expr::Kind::mul);
}

TEST_CASE("parser errors carry offsets") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("E^(") == 3);
  CHECK(offset_of("E +") == 3);
  CHECK(offset_of("E ? F") == 2);
  CHECK(offset_of("E^(x)") == 3);
  CHECK(offset_of("(E") == 2);
  CHECK(offset_of("1/0") != std::string::npos);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("Q") == 0);
}

TEST_CASE("evaluation examples") {
  for (int ell : {3, 5, 7}) {
    CHECK(nf("K E - z^2 E K", ell).is_zero());
    CHECK(nf("K^" + std::to_string(ell), ell) == PBWElem::one(ell));
    CHECK(nf("K K^-1", ell) == PBWElem::one(ell));
    CHECK(nf("E F - F E", ell) == PBWElem::cartan(kshift_binom(0, 1, ell)));
    CHECK(nf("E^" + std::to_string(ell), ell).is_zero());
  }
  PBWElem bf = nf("B F^(2)", 5);
  CHECK(bf.parts().size() == 1);
  CHECK(bf.parts().begin()->first == PBWElem::Key{2, 0});
  CHECK_THROWS_AS(nf("F^-1", 5), EvalError);
  CHECK_THROWS_AS(evaluate(*parse("(E + F + K)^8"), 5, 20), TermLimitExceeded);
}

TEST_CASE("printed normal forms parse back to themselves") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    int ell = i % 2 ? 5 : 3;
    const auto& f = CyclotomicField::get(ell);
    std::uniform_int_distribution<std::int64_t> idx(0, 2 * ell), c(0, ell - 1), d(0, 2), n(-7, 7), den(1, 4);
    PBWElem x(ell);
    for (int k = 0; k < 4; ++k) {
      CycScalar coeff(f);
      for (int j = 0; j < 3; ++j) coeff += f.zeta_pow(c(rng)) * make_rat(n(rng), den(rng));
      x += PBWElem::monomial(ell, {idx(rng), c(rng), d(rng), idx(rng)}, coeff);
    }
    std::string text = x.to_string();
    INFO(text);
    CHECK(nf(text, ell) == x);
  }
}

TEST_CASE("weight parsing") {
  auto a2 = CartanData::of_type('A', 2, 5);
  CHECK(parse_weight("((2,4),(0,-1))", a2) == simple_root(1, a2));
  CHECK(parse_weight("2,4;0,-1", a2) == simple_root(1, a2));
  CHECK(parse_weight("1;1/2", CartanData::sl2(5)).lam1()[0] == make_rat(1, 2));
  CHECK_THROWS(parse_weight("(2,4)", a2));
}

TEST_CASE("subcommand outputs") {
  CHECK(call({"qbinom", "--m", "7", "--t", "5", "--ell", "5", "--pretty"}).out == "1\n");
  CHECK(call({"qbinom", "--m", "2", "--t", "1", "--symbolic", "--pretty"}).out == "q + q^-1\n");
  CHECK(call({"qbinom", "--m", "-2", "--t", "3", "--symbolic", "--pretty"}).out == "-(q^3 + q + q^-1 + q^-3)\n");
  auto add = call({"weight", "add", "--lam", "3;0", "--mu", "4;0", "--ell", "5"});
  CHECK(add.code == 0);
  auto j = json::parse(add.out);
  CHECK(j["weight"]["lam0"] == json::array({2}));
  CHECK(j["weight"]["lam1"] == json::array({1}));
  CHECK(call({"weight", "embed", "--m", "-7", "--ell", "5", "--pretty"}).out == "((3),(-2))\n");
  CHECK(call({"weight", "neg", "--lam", "0;0", "--ell", "5", "--pretty"}).out == "((0),(0))\n");
  CHECK(call({"nf", "K^5", "--ell", "5", "--pretty"}).out == "1\n");
  CHECK(call({"nf", "K E - z^2 E K", "--ell", "5", "--pretty"}).out == "0\n");
  CHECK(call({"module", "--m0", "2", "--ell", "5", "--action", "weights", "--pretty"}).out ==
        "[((2),(0)), ((0),(0)), ((3),(-1))]\n");
  CHECK(call({"module", "--m", "7", "--ell", "3", "--action", "primitive", "--pretty"}).out == "((1),(2)) dim 1\n");
  auto triv = json::parse(call({"module", "--m0", "0", "--ell", "3"}).out);
  CHECK(triv["dim"] == 1);
  auto prim = json::parse(call({"primitive", "--ell", "5"}).out);
  CHECK(prim["coefficients"][0]["text"] == "2/5");
  CHECK(prim["residual"] == "0");
  CHECK(prim["eval_at_zero"] == "0");
  CHECK(json::parse(call({"primitive", "--ell", "3"}).out)["coefficients"][0]["text"] == "1/3");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"qbinom", "--m", "x", "--t", "1", "--ell", "5"}).code == 2);
  CHECK(call({"qbinom", "--m", "1", "--t", "1", "--ell", "4"}).code == 2);
  CHECK(call({"qbinom", "--m", "1", "--t", "1"}).code == 2);
  CHECK(call({"qbinom", "--m", "1", "--t", "1", "--ell", "9", "--d", "3"}).code == 2);
  auto g2 = call({"weight", "embed", "--type", "G", "--rank", "2", "--ell", "9", "--m", "1,1"});
  CHECK(g2.code == 2);
  CHECK(g2.err.find("divisible by 3") != std::string::npos);
  CHECK(call({"weight", "embed", "--type", "G", "--rank", "2", "--ell", "7", "--m", "1,1"}).code == 0);
  auto bad = call({"nf", "E^(", "--ell", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 3") != std::string::npos);
  CHECK(call({"nf", "(E + F + K)^8", "--ell", "5", "--max-terms", "10"}).code == 1);
  CHECK(call({"module", "--m0", "5", "--ell", "5"}).code == 2);
  CHECK(call({"module", "--m0", "1", "--m", "1", "--ell", "5"}).code == 2);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
  CHECK(call({"verify", "--suite", "weights", "--ell", "3"}).code == 0);
}

TEST_CASE("verify reports are deterministic and sorted") {
  auto a = call({"verify", "--suite", "qcomb,weights", "--ell", "3", "--seed", "7"});
  auto b = call({"verify", "--suite", "qcomb,weights", "--ell", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(j["status"] == "pass");
  CHECK(j.find("elapsed_seconds") == j.end());
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& c : j["checks"]) keys.emplace_back(c["suite"], c["id"]);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  auto t = json::parse(call({"verify", "--suite", "weights", "--ell", "3", "--timing"}).out);
  CHECK(t.contains("elapsed_seconds"));
}

TEST_CASE("a failing check reports its offending values") {
  Report r;
  Check c;
  c.suite = "demo";
  c.id = "x";
  for (int i = 0; i < 8; ++i) c.record(i < 2, [i] { return "i=" + std::to_string(i); });
  r.checks.push_back(c);
  CHECK_FALSE(r.passed());
  auto j = r.to_json(false);
  CHECK(j["checks"][0]["failures"] == 6);
  CHECK(j["checks"][0]["offending"].size() == Check::kMaxOffending);
  CHECK(j["checks"][0]["offending"][0] == "i=2");
}
