#include "hyperzeta/errors.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace hyperzeta {

namespace {

using SVec = SparseVec<CycScalar>;

// Nonzero entries of each column of a dense matrix.
struct ColumnSparse {
  std::vector<std::vector<std::pair<std::size_t, CycScalar>>> cols;
  explicit ColumnSparse(const ExactMatrix& m) : cols(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
  }
  bool empty() const {
    for (const auto& c : cols)
      if (!c.empty()) return false;
    return true;
  }
};

// g * P for P an n x n matrix stored row-major as a sparse vector.
SVec left_multiply(const ColumnSparse& g, const SVec& p, std::size_t n) {
  std::map<std::size_t, CycScalar> acc;
  for (const auto& [index, value] : p) {
    const std::size_t k = index / n;
    const std::size_t j = index % n;
    for (const auto& [r, grk] : g.cols[k]) {
      auto [it, fresh] = acc.try_emplace(r * n + j, grk * value);
      if (!fresh) it->second += grk * value;
    }
  }
  SVec out;
  for (auto& [i, v] : acc)
    if (!v.is_zero()) out.emplace_back(i, std::move(v));
  return out;
}

bool same_label(const WeightModule& a, std::size_t i, const WeightModule& b, std::size_t j) {
  return a.labels()[i] == b.labels()[j];
}

// Equation vectors, one per unknown matrix unit X_(i,j) (rows of b, columns
// of a), of the map X -> (X A_g - B_g X)_g, restricted to unknowns allowed
// by the predicate.
struct Equivariance {
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<SVec> columns;
  std::size_t ambient = 0;
};

template <class Allowed>
Equivariance equivariance_system(const WeightModule& a, const WeightModule& b, const std::vector<Gen>& gens,
                                 Allowed allowed) {
  Equivariance sys;
  const auto na = a.dim();
  const auto nb = b.dim();
  sys.ambient = gens.size() * nb * na;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (!allowed(i, j)) continue;
      std::map<std::size_t, CycScalar> acc;
      auto add = [&](std::size_t key, const CycScalar& v) {
        auto [it, fresh] = acc.try_emplace(key, v);
        if (!fresh) it->second += v;
      };
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& ag = a.op(gens[gi]);
        const auto& bg = b.op(gens[gi]);
        const std::size_t base = gi * nb * na;
        // (X A_g)(i, c) = A_g(j, c)
        for (std::size_t c = 0; c < na; ++c)
          if (!ag(j, c).is_zero()) add(base + i * na + c, ag(j, c));
        // (B_g X)(r, j) = B_g(r, i)
        for (std::size_t r = 0; r < nb; ++r)
          if (!bg(r, i).is_zero()) add(base + r * na + j, -bg(r, i));
      }
      SVec col;
      for (auto& [k, v] : acc)
        if (!v.is_zero()) col.emplace_back(k, std::move(v));
      sys.unknowns.emplace_back(i, j);
      sys.columns.push_back(std::move(col));
    }
  return sys;
}

std::size_t matrix_rank(const ExactMatrix& m) { return rank(m); }

}  // namespace

SimplicityCertificate is_simple(const WeightModule& m) {
  const auto n = m.dim();
  const auto& f = m.field();
  SimplicityCertificate cert;
  cert.target = n * n;
  if (n == 0) return cert;
  std::vector<ColumnSparse> gens;
  for (Gen g : kAllGens) {
    ColumnSparse cs(m.op(g));
    if (!cs.empty()) gens.push_back(std::move(cs));
  }
  SparseSpan<CycScalar> span(n * n, f.zero());
  std::deque<SVec> queue;
  SVec id;
  for (std::size_t i = 0; i < n; ++i) id.emplace_back(i * n + i, f.one());
  span.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty() && !span.full()) {
    SVec p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      SVec q = left_multiply(g, p, n);
      if (q.empty()) continue;
      if (span.insert(q).independent) queue.push_back(std::move(q));
      if (span.full()) break;
    }
  }
  cert.span_dim = span.rank();
  cert.simple = cert.span_dim == cert.target;
  return cert;
}

Annihilator uzeta_annihilator(const WeightModule& m) {
  const int ell = m.ell();
  const auto l = static_cast<std::size_t>(ell);
  const auto n = m.dim();
  std::vector<ExactMatrix> fp, kp, ep;
  for (std::size_t i = 0; i < l; ++i) {
    fp.push_back(matrix_power(m.op(Gen::F), i));
    kp.push_back(matrix_power(m.op(Gen::K), i));
    ep.push_back(matrix_power(m.op(Gen::E), i));
  }
  SparseSpan<CycScalar> span(n * n, m.field().zero(), true);
  Annihilator ann;
  ann.ell = ell;
  for (std::size_t b = 0; b < l; ++b)
    for (std::size_t c = 0; c < l; ++c)
      for (std::size_t a = 0; a < l; ++a) {
        const std::size_t id = (b * l + c) * l + a;
        auto ins = span.insert(to_sparse(fp[b] * kp[c] * ep[a]), id);
        if (!ins.independent) ann.kernel.push_back(std::move(ins.relation));
      }
  ann.codimension = span.rank();
  return ann;
}

bool same_annihilator(const Annihilator& a, const Annihilator& b) {
  if (a.ell != b.ell || a.kernel.size() != b.kernel.size()) return false;
  const auto l = static_cast<std::size_t>(a.ell);
  SparseSpan<CycScalar> span(l * l * l, CyclotomicField::get(a.ell).zero());
  for (const auto& v : a.kernel) span.insert(v);
  for (const auto& v : b.kernel)
    if (!span.contains(v)) return false;
  return true;
}

std::size_t commutant(const WeightModule& m, GenSubset subset) {
  std::vector<Gen> gens = subset == GenSubset::all ? std::vector<Gen>(kAllGens.begin(), kAllGens.end())
                                                   : std::vector<Gen>{Gen::E, Gen::F, Gen::K};
  const auto& K = m.op(Gen::K);
  auto allowed = [&](std::size_t i, std::size_t j) {
    if (subset == GenSubset::all) return same_label(m, i, m, j);
    return K(i, i) == K(j, j);
  };
  const auto sys = equivariance_system(m, m, gens, allowed);
  SparseSpan<CycScalar> span(sys.ambient, m.field().zero());
  for (const auto& col : sys.columns) span.insert(col);
  return sys.unknowns.size() - span.rank();
}

std::optional<ExactMatrix> find_intertwiner(const WeightModule& a, const WeightModule& b) {
  if (a.ell() != b.ell()) throw DomainMismatch("intertwiner between modules over different l");
  if (a.dim() != b.dim()) return std::nullopt;
  const auto& f = a.field();
  const std::vector<Gen> gens(kAllGens.begin(), kAllGens.end());
  const auto sys = equivariance_system(a, b, gens, [&](std::size_t i, std::size_t j) { return same_label(b, i, a, j); });
  const auto rel = relations(sys.columns, sys.ambient, f.zero());
  if (rel.empty()) return std::nullopt;
  auto build = [&](const std::vector<CycScalar>& weights) {
    ExactMatrix x = zero_matrix(f, b.dim(), a.dim());
    for (std::size_t k = 0; k < rel.size(); ++k)
      for (const auto& [u, v] : rel[k]) x(sys.unknowns[u].first, sys.unknowns[u].second) += weights[k] * v;
    return x;
  };
  // A generic combination of the solution basis; try a few deterministic ones.
  for (std::int64_t attempt = 1; attempt <= 4; ++attempt) {
    std::vector<CycScalar> w;
    for (std::size_t k = 0; k < rel.size(); ++k)
      w.emplace_back(f, static_cast<std::int64_t>(1 + static_cast<std::int64_t>(k) * attempt));
    ExactMatrix x = build(w);
    if (matrix_rank(x) == a.dim()) return x;
  }
  return std::nullopt;
}

TensorTheoremReport tensor_theorem_check(std::int64_t m, int ell) {
  if (m < 0) throw std::invalid_argument("tensor theorem check needs m >= 0");
  TensorTheoremReport rep;
  rep.m = m;
  rep.ell = ell;
  const auto lad = short_ladic(m, ell);
  rep.m0 = lad.m0;
  rep.m1 = lad.m1;
  rep.expected_dim = static_cast<std::size_t>((lad.m0 + 1) * (lad.m1 + 1));
  try {
    const WeightModule l = restricted_simple(lad.m0, ell);
    const WeightModule v = frobenius_twist(classical_simple(lad.m1), ell);
    const WeightModule t = tensor_module(l, v);
    rep.dim = t.dim();
    if (rep.dim != rep.expected_dim)
      rep.failures.push_back("dimension " + std::to_string(rep.dim) + " != " + std::to_string(rep.expected_dim));
    rep.certificate = is_simple(t);
    if (!rep.certificate.simple)
      rep.failures.push_back("span closure reached " + std::to_string(rep.certificate.span_dim) + " of " +
                             std::to_string(rep.certificate.target));
    const auto prim = primitive_vectors(t);
    std::size_t lines = 0;
    for (const auto& p : prim) {
      rep.primitive_weights.push_back(p.weight);
      lines += p.basis.size();
    }
    rep.highest_weight_ok = lines == 1 && prim.front().weight == embed(m, ell);
    if (!rep.highest_weight_ok) {
      std::string ws;
      for (const auto& w : rep.primitive_weights) ws += " " + w.to_string();
      rep.failures.push_back("expected one primitive line of weight " + embed(m, ell).to_string() + ", found " +
                             std::to_string(lines) + " with weights" + ws);
    }
    const WeightModule reversed = tensor_product(v, l);
    rep.intertwiner_found = find_intertwiner(t, reversed).has_value();
    if (!rep.intertwiner_found) rep.failures.push_back("no invertible intertwiner with " + reversed.name());
  } catch (const InvariantViolation& e) {
    rep.failures.push_back(e.what());
  }
  return rep;
}

DufloReport duflo_check(std::int64_t m, int ell) {
  if (m < 0) throw std::invalid_argument("annihilator check needs m >= 0");
  DufloReport rep;
  rep.m = m;
  rep.ell = ell;
  const auto lad = short_ladic(m, ell);
  try {
    const WeightModule l = restricted_simple(lad.m0, ell);
    const WeightModule t = tensor_module(l, frobenius_twist(classical_simple(lad.m1), ell));
    const auto prim = primitive_vectors(t);
    const bool one_line = prim.size() == 1 && prim.front().basis.size() == 1 && prim.front().weight == embed(m, ell);
    rep.simple_highest_weight = one_line && is_simple(t).simple;
    if (!rep.simple_highest_weight) rep.failures.push_back(t.name() + " is not a simple highest weight module");
    const auto ann_t = uzeta_annihilator(t);
    const auto ann_l = uzeta_annihilator(l);
    rep.kernel_dim_tensor = ann_t.kernel.size();
    rep.kernel_dim_restricted = ann_l.kernel.size();
    rep.codimension = ann_t.codimension;
    rep.equal = same_annihilator(ann_t, ann_l);
    if (!rep.equal)
      rep.failures.push_back("annihilators differ: kernel dims " + std::to_string(rep.kernel_dim_tensor) + " and " +
                             std::to_string(rep.kernel_dim_restricted));
    const auto want = static_cast<std::size_t>((lad.m0 + 1) * (lad.m0 + 1));
    if (rep.codimension != want)
      rep.failures.push_back("codimension " + std::to_string(rep.codimension) + " != " + std::to_string(want));
  } catch (const InvariantViolation& e) {
    rep.failures.push_back(e.what());
  }
  return rep;
}

WeightMappingReport weight_mapping_check(const WeightModule& m, std::int64_t tmax) {
  WeightMappingReport rep;
  const int ell = m.ell();
  const auto n = m.dim();
  const auto& f = m.field();
  const auto& B = m.op(Gen::B);
  for (std::int64_t t = 0; t <= tmax; ++t) {
    const std::int64_t c = 2 * t;
    const auto c0 = short_ladic(c, ell).m0;
    const Weight shift = embed(c, ell);
    const ExactMatrix ft = rep_F_div(m, t);
    const ExactMatrix et = rep_E_div(m, t);
    for (std::size_t j = 0; j < n; ++j) {
      const Weight& lam = m.labels()[j];
      const auto lam0 = lam.lam0()[0];
      const Rat& lam1 = lam.lam1()[0];
      struct Case {
        const ExactMatrix* op;
        Weight target;
        Rat b_value;
        bool branch;
        const char* name;
      };
      const Case cases[2] = {
          {&ft, weight_sub(lam, shift), lam1 + binom_shift_eval(lam0, c, ShiftDirection::down, ell),
           lam0 >= c0, "F"},
          {&et, weight_add(lam, shift), lam1 + binom_shift_eval(lam0, c, ShiftDirection::up, ell),
           lam0 + c0 < ell, "E"},
      };
      for (const auto& cs : cases) {
        bool nonzero = false;
        for (std::size_t r = 0; r < n; ++r) {
          if ((*cs.op)(r, j).is_zero()) continue;
          nonzero = true;
          const std::string where = std::string(cs.name) + "^(" + std::to_string(t) + ") on basis " +
                                    std::to_string(j) + " of weight " + lam.to_string();
          if (!(m.labels()[r] == cs.target))
            rep.failures.push_back(where + " reaches weight " + m.labels()[r].to_string() + ", expected " +
                                   cs.target.to_string());
          if (!(B(r, r) == CycScalar(f, cs.b_value)))
            rep.failures.push_back(where + ": B eigenvalue " + B(r, r).to_string() + ", expected " +
                                   to_string(cs.b_value));
        }
        if (!nonzero) continue;
        ++rep.checked;
        if (cs.name[0] == 'F')
          ++(cs.branch ? rep.down_no_borrow : rep.down_borrow);
        else
          ++(cs.branch ? rep.up_no_carry : rep.up_carry);
      }
    }
  }
  return rep;
}

}  // namespace hyperzeta
