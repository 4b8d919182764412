#include "hyperzeta/cli/app.hpp"

#include "hyperzeta/cli/expr.hpp"
#include "hyperzeta/cli/json_io.hpp"
#include "hyperzeta/cli/suites.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/format.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/uzero.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hyperzeta::cli {

namespace {

/// Invalid flag values detected after CLI11 parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result that violates an expected property (exit 1).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_ell(int ell) {
  if (ell < 3 || ell % 2 == 0) throw UsageError("--ell must be odd and >= 3, got " + std::to_string(ell));
}

void emit(std::ostream& out, const json& j, const std::string& text, bool pretty) {
  if (pretty)
    out << text << "\n";
  else
    out << j.dump(2) << "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

struct QbinomArgs {
  std::int64_t m = 0, t = 0;
  int ell = 0, d = 1;
  bool symbolic = false;
};

int cmd_qbinom(const QbinomArgs& a, bool pretty, std::ostream& out) {
  if (a.t < 0) throw UsageError("--t must be nonnegative");
  if (a.symbolic) {
    LaurentPoly p = gauss_binom(a.m, a.t);
    emit(out, json{{"m", a.m}, {"t", a.t}, {"value", p.to_string()}}, p.to_string(), pretty);
    return kOk;
  }
  if (a.ell == 0) throw UsageError("--ell is required unless --symbolic is given");
  require_ell(a.ell);
  try {
    check_symmetrizer(a.ell, a.d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  CycScalar v = gauss_binom_at(a.m, a.t, a.ell, a.d);
  emit(out, json{{"m", a.m}, {"t", a.t}, {"ell", a.ell}, {"d", a.d}, {"value", cyc_json(v)}, {"text", v.to_string()}},
       v.to_string(), pretty);
  return kOk;
}

struct WeightArgs {
  std::string action;
  std::string type = "A";
  int rank = 1;
  int ell = 0;
  std::string lam, mu, m;
  int i = 1;
};

int cmd_weight(const WeightArgs& a, bool pretty, std::ostream& out) {
  require_ell(a.ell);
  if (a.type.size() != 1) throw UsageError("--type must be one letter A..G");
  CartanPtr cd;
  try {
    cd = CartanData::of_type(a.type[0], a.rank, a.ell);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string(flag) + " is required for weight " + a.action);
    try {
      return parse_weight(v, cd);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  };
  auto result = [&](const Weight& w) {
    emit(out, json{{"action", a.action}, {"cartan", cd->name()}, {"ell", a.ell}, {"weight", weight_json(w)}},
         w.to_string(), pretty);
    return kOk;
  };
  if (a.action == "add") return result(weight_add(need(a.lam, "--lam"), need(a.mu, "--mu")));
  if (a.action == "sub") return result(weight_sub(need(a.lam, "--lam"), need(a.mu, "--mu")));
  if (a.action == "neg") return result(weight_neg(need(a.lam, "--lam")));
  if (a.action == "root") {
    if (a.i < 1 || a.i > cd->rank()) throw UsageError("--i must be in [1, rank]");
    return result(simple_root(a.i, cd));
  }
  if (a.action == "embed") {
    if (a.m.empty()) throw UsageError("--m is required for weight embed");
    auto v = parse_ints(a.m);
    if (static_cast<int>(v.size()) != cd->rank()) throw UsageError("--m needs one integer per rank");
    return result(embed(v, cd));
  }
  // leq
  bool r = dominance_leq(need(a.lam, "--lam"), need(a.mu, "--mu"));
  emit(out, json{{"action", a.action}, {"cartan", cd->name()}, {"ell", a.ell}, {"leq", r}}, r ? "true" : "false",
       pretty);
  return kOk;
}

struct NfArgs {
  std::string expr;
  int ell = 0;
  std::size_t max_terms = 10000;
};

int cmd_nf(const NfArgs& a, bool pretty, std::ostream& out) {
  require_ell(a.ell);
  auto e = parse(a.expr);
  PBWElem x = evaluate(*e, a.ell, a.max_terms);
  std::string text = x.is_zero() ? "0" : x.to_string();
  emit(out, json{{"ell", a.ell}, {"input", a.expr}, {"term_count", x.term_count()}, {"terms", pbw_terms_json(x)},
                 {"text", text}},
       text, pretty);
  return kOk;
}

struct ModuleArgs {
  std::optional<std::int64_t> m0, m;
  int ell = 0;
  std::string action = "matrices";
};

int cmd_module(const ModuleArgs& a, bool pretty, std::ostream& out) {
  require_ell(a.ell);
  if (a.m0.has_value() == a.m.has_value()) throw UsageError("give exactly one of --m0 and --m");
  std::optional<WeightModule> mod;
  if (a.m0) {
    if (*a.m0 < 0 || *a.m0 >= a.ell) throw UsageError("--m0 must lie in [0, l)");
    mod.emplace(restricted_simple(*a.m0, a.ell));
  } else {
    if (*a.m < 0) throw UsageError("--m must be nonnegative");
    mod.emplace(simple_module(*a.m, a.ell));
  }
  const WeightModule& md = *mod;
  if (a.action == "weights") {
    json ws = json::array();
    std::vector<std::string> texts;
    for (const auto& w : md.labels()) {
      ws.push_back(weight_json(w));
      texts.push_back(w.to_string());
    }
    emit(out, json{{"name", md.name()}, {"ell", a.ell}, {"weights", ws}}, "[" + join(texts, ", ") + "]", pretty);
  } else if (a.action == "primitive") {
    json lines = json::array();
    std::vector<std::string> texts;
    for (const auto& p : primitive_vectors(md)) {
      json basis = json::array();
      for (const auto& v : p.basis) {
        json vec = json::array();
        for (const auto& x : v) vec.push_back(cyc_json(x));
        basis.push_back(vec);
      }
      lines.push_back(json{{"weight", weight_json(p.weight)}, {"dim", p.basis.size()}, {"basis", basis}});
      texts.push_back(p.weight.to_string() + " dim " + std::to_string(p.basis.size()));
    }
    emit(out, json{{"name", md.name()}, {"ell", a.ell}, {"primitive", lines}}, join(texts, "\n"), pretty);
  } else {
    std::string text = md.name() + " dim " + std::to_string(md.dim());
    for (Gen g : kAllGens) {
      text += std::string("\n") + gen_name(g) + ":";
      const auto& op = md.op(g);
      for (std::size_t r = 0; r < op.rows(); ++r) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < op.cols(); ++c) row.push_back(op(r, c).to_string());
        text += "\n  [" + join(row, ", ") + "]";
      }
    }
    emit(out, module_json(md), text, pretty);
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> suites{"all"};
  std::vector<int> ells{3, 5};
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, bool pretty, std::ostream& out) {
  for (int ell : a.ells) require_ell(ell);
  for (const auto& s : a.suites) {
    bool known = s == "all";
    for (const auto& n : suite_names()) known = known || s == n;
    if (!known) throw UsageError("unknown suite '" + s + "'");
  }
  std::uint64_t seed = 0;
  if (a.seed) {
    seed = *a.seed;
  } else if (const char* env = std::getenv("HYPERZETA_SEED")) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw UsageError(std::string("HYPERZETA_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  Report report = run_suites(a.suites, a.ells, seed);
  if (pretty)
    out << report.to_text(a.timing);
  else
    out << report.to_json(a.timing).dump(2) << "\n";
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_primitive(int ell, bool pretty, std::ostream& out) {
  require_ell(ell);
  auto a = primitive_coefficients(ell);
  UZeroElem p = primitive_element(ell);
  TensorSq res = primitivity_residual(p);
  std::string residual = res.is_zero() ? "0" : std::to_string(res.nonzeros()) + " nonzero entries";
  CycScalar at0 = p.eval(0);
  json coeffs = json::array();
  std::string text;
  for (std::size_t i = 0; i < a.size(); ++i) {
    coeffs.push_back(json{{"i", i}, {"value", cyc_json(a[i])}, {"text", a[i].to_string()}});
    text += "a" + std::to_string(i) + " = " + a[i].to_string() + "\n";
  }
  text += "element = " + p.to_string() + "\nresidual = " + residual + "\neval(0) = " + at0.to_string();
  emit(out, json{{"ell", ell}, {"coefficients", coeffs}, {"element", p.to_string()}, {"residual", residual},
                 {"eval_at_zero", at0.to_string()}},
       text, pretty);
  if (!res.is_zero() || !at0.is_zero()) throw CheckFailure("primitive element failed its checks");
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the quantized hyperalgebra of sl2 at an odd root of unity", "hyperzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable text instead of JSON");

  QbinomArgs qa;
  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial [m over t], symbolic or at zeta^d");
  qb->add_option("--m", qa.m, "Top entry (any integer)")->required();
  qb->add_option("--t", qa.t, "Bottom entry (t >= 0)")->required();
  qb->add_option("--ell", qa.ell, "Order of the root of unity");
  qb->add_option("--d", qa.d, "Symmetrizer; evaluates at zeta^d")->capture_default_str();
  qb->add_flag("--symbolic", qa.symbolic, "Print the Laurent polynomial in q");

  WeightArgs wa;
  auto* wt = app.add_subcommand("weight", "Weight-group arithmetic");
  wt->add_option("action", wa.action, "add | sub | neg | embed | leq | root")
      ->required()
      ->check(CLI::IsMember({"add", "sub", "neg", "embed", "leq", "root"}));
  wt->add_option("--type", wa.type, "Cartan type letter")->capture_default_str();
  wt->add_option("--rank", wa.rank, "Cartan rank")->capture_default_str();
  wt->add_option("--ell", wa.ell, "Order of the root of unity")->required();
  wt->add_option("--lam", wa.lam, "Weight as ((lam0),(lam1)) or lam0;lam1");
  wt->add_option("--mu", wa.mu, "Second weight");
  wt->add_option("--m", wa.m, "Integer vector for embed, comma separated");
  wt->add_option("--i", wa.i, "Simple root index (1-based)");

  NfArgs na;
  auto* nf = app.add_subcommand("nf", "Normal form of an expression in E, F, K, B and divided powers");
  nf->add_option("expr", na.expr, "Expression, e.g. \"E^(2) F^(3)\"")->required();
  nf->add_option("--ell", na.ell, "Order of the root of unity")->required();
  nf->add_option("--max-terms", na.max_terms, "Cap on intermediate term counts")->capture_default_str();

  ModuleArgs ma;
  auto* md = app.add_subcommand("module", "Construct a simple module and inspect it");
  std::int64_t m0v = 0, mv = 0;
  auto* m0opt = md->add_option("--m0", m0v, "Restricted simple L(m0), 0 <= m0 < l");
  auto* mopt = md->add_option("--m", mv, "Simple module of highest weight m >= 0");
  m0opt->excludes(mopt);
  md->add_option("--ell", ma.ell, "Order of the root of unity")->required();
  md->add_option("--action", ma.action, "matrices | weights | primitive")
      ->check(CLI::IsMember({"matrices", "weights", "primitive"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Run the property suites and print a report");
  vf->add_option("--suite", va.suites, "qcomb | weights | uzero | pbw | repn | all")->delimiter(',');
  vf->add_option("--ell", va.ells, "Comma-separated list of l")->delimiter(',');
  std::uint64_t seed = 0;
  auto* seed_opt = vf->add_option("--seed", seed, "Random seed (default: $HYPERZETA_SEED or 0)");
  vf->add_flag("--timing", va.timing, "Include elapsed times in the report");

  int prim_ell = 0;
  auto* pr = app.add_subcommand("primitive", "Coefficients of the primitive element B + sum a_i K^i");
  pr->add_option("--ell", prim_ell, "Order of the root of unity")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (qb->parsed()) return cmd_qbinom(qa, pretty, out);
    if (wt->parsed()) return cmd_weight(wa, pretty, out);
    if (nf->parsed()) return cmd_nf(na, pretty, out);
    if (md->parsed()) {
      if (m0opt->count()) ma.m0 = m0v;
      if (mopt->count()) ma.m = mv;
      return cmd_module(ma, pretty, out);
    }
    if (vf->parsed()) {
      if (seed_opt->count()) va.seed = seed;
      return cmd_verify(va, pretty, out);
    }
    if (pr->parsed()) return cmd_primitive(prim_ell, pretty, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TermLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CheckFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace hyperzeta::cli
