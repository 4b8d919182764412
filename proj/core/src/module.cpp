#include "hyperzeta/repn.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/qcomb.hpp"

#include <map>
#include <stdexcept>

namespace hyperzeta {

namespace {

std::size_t idx(Gen g) { return static_cast<std::size_t>(g); }

void require(bool ok, const WeightModule& m, const std::string& what) {
  if (!ok) throw InvariantViolation(m.name() + ": relation fails: " + what);
}

ExactMatrix scaled(ExactMatrix m, const CycScalar& s) { return m *= s; }

}  // namespace

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::K: return "K";
    case Gen::El: return "E^(l)";
    case Gen::Fl: return "F^(l)";
    case Gen::B: return "B";
  }
  return "?";
}

WeightModule::WeightModule(int ell, std::vector<Weight> labels, std::array<ExactMatrix, 6> ops,
                           std::string name)
    : ell_(ell), labels_(std::move(labels)), ops_(std::move(ops)), name_(std::move(name)) {
  const auto n = labels_.size();
  for (const auto& w : labels_)
    if (w.rank() != 1 || w.ell() != ell_)
      throw DomainMismatch(name_ + ": label " + w.to_string() + " is not an sl2 weight for l=" +
                           std::to_string(ell_));
  for (Gen g : kAllGens) {
    const auto& m = op(g);
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument(name_ + ": matrix of " + gen_name(g) + " has shape " + m.shape() +
                                  ", expected " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& v : m.data())
      if (v.field() != &field())
        throw DomainMismatch(name_ + ": matrix of " + std::string(gen_name(g)) +
                             " has entries outside Q(zeta_" + std::to_string(ell_) + ")");
  }
  check_relations();
}

bool WeightModule::is_restricted_type() const { return op(Gen::El).is_zero() && op(Gen::Fl).is_zero(); }

bool WeightModule::is_twisted_type() const {
  return op(Gen::E).is_zero() && op(Gen::F).is_zero() &&
         op(Gen::K) == identity_matrix(field(), dim());
}

void WeightModule::check_relations() const {
  const auto& f = field();
  const auto n = dim();
  const auto& E = op(Gen::E);
  const auto& F = op(Gen::F);
  const auto& K = op(Gen::K);
  const auto& B = op(Gen::B);

  require(K.is_diagonal(), *this, "K is diagonal");
  require(B.is_diagonal(), *this, "B is diagonal");
  for (std::size_t i = 0; i < n; ++i) {
    require(K(i, i) == eval_K(labels_[i], 1), *this,
            "K eigenvalue matches label " + labels_[i].to_string() + " at basis index " + std::to_string(i));
    require(B(i, i) == CycScalar(f, eval_B(labels_[i], 1)), *this,
            "B eigenvalue matches label " + labels_[i].to_string() + " at basis index " + std::to_string(i));
  }
  const auto l = static_cast<std::size_t>(ell_);
  require(matrix_power(K, l) == identity_matrix(f, n), *this, "K^l = 1");
  require(K * E == scaled(E * K, f.zeta_pow(2)), *this, "K E K^-1 = zeta^2 E");
  require(K * F == scaled(F * K, f.zeta_pow(-2)), *this, "K F K^-1 = zeta^-2 F");
  require(commutator(E, F) == rep_cartan(*this, kshift_binom(0, 1, ell_)), *this, "E F - F E = [K; 0 over 1]");
  require(matrix_power(E, l).is_zero(), *this, "E^l = 0");
  require(matrix_power(F, l).is_zero(), *this, "F^l = 0");
  for (std::int64_t t = 1; t <= ell_ + 1; ++t) {
    const ExactMatrix Ft = rep_F_div(*this, t);
    const ExactMatrix Et = rep_E_div(*this, t);
    require(B * Ft == Ft * rep_cartan(*this, kshift_binom(-2 * t, ell_, ell_)), *this,
            "B F^(" + std::to_string(t) + ") = F^(" + std::to_string(t) + ") [K; " +
                std::to_string(-2 * t) + " over l]");
    require(B * Et == Et * rep_cartan(*this, kshift_binom(2 * t, ell_, ell_)), *this,
            "B E^(" + std::to_string(t) + ") = E^(" + std::to_string(t) + ") [K; " +
                std::to_string(2 * t) + " over l]");
  }
}

void ClassicalModule::check_relations() const {
  const auto n = dim();
  auto fail = [](const std::string& what) { throw InvariantViolation("classical module: " + what); };
  if (e.rows() != n || f.rows() != n || e.cols() != n || f.cols() != n || h.cols() != n)
    fail("matrices are not all square of the same size");
  if (!h.is_diagonal()) fail("h is not diagonal");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_integer(h(i, i))) fail("h has a non-integral eigenvalue");
  if (!(e * f - f * e == h)) fail("[e,f] = h");
  if (!(h * e - e * h == e * Rat(2))) fail("[h,e] = 2e");
  if (!(h * f - f * h == f * Rat(-2))) fail("[h,f] = -2f");
}

WeightModule restricted_simple(std::int64_t m0, int ell) {
  if (m0 < 0 || m0 >= ell)
    throw std::invalid_argument("restricted highest weight " + std::to_string(m0) + " outside [0, " +
                                std::to_string(ell) + ")");
  const auto& f = CyclotomicField::get(ell);
  const auto n = static_cast<std::size_t>(m0 + 1);
  std::vector<Weight> labels;
  std::array<ExactMatrix, 6> ops;
  for (auto& o : ops) o = zero_matrix(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    labels.push_back(embed(m0 - 2 * jj, ell));
    ops[idx(Gen::K)](j, j) = f.zeta_pow(m0 - 2 * jj);
    ops[idx(Gen::B)](j, j) = CycScalar(f, labels.back().lam1()[0]);
    if (j + 1 < n) ops[idx(Gen::F)](j + 1, j) = q_integer_at(jj + 1, ell);
    if (j > 0) ops[idx(Gen::E)](j - 1, j) = q_integer_at(m0 - jj + 1, ell);
  }
  return WeightModule(ell, std::move(labels), std::move(ops), "L(" + std::to_string(m0) + ")");
}

ClassicalModule classical_simple(std::int64_t p) {
  if (p < 0) throw std::invalid_argument("classical highest weight must be >= 0");
  const auto n = static_cast<std::size_t>(p + 1);
  ClassicalModule v{RatMatrix(n, n, Rat(0)), RatMatrix(n, n, Rat(0)), RatMatrix(n, n, Rat(0))};
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<long>(j);
    v.h(j, j) = Rat(p - 2 * jj);
    if (j + 1 < n) v.f(j + 1, j) = Rat(jj + 1);
    if (j > 0) v.e(j - 1, j) = Rat(p - jj + 1);
  }
  v.check_relations();
  return v;
}

WeightModule frobenius_twist(const ClassicalModule& v, int ell) {
  v.check_relations();
  const auto& f = CyclotomicField::get(ell);
  const auto n = v.dim();
  std::vector<Weight> labels;
  for (std::size_t j = 0; j < n; ++j)
    labels.emplace_back(CartanData::sl2(ell), std::vector<std::int64_t>{0}, std::vector<Rat>{v.h(j, j)});
  std::array<ExactMatrix, 6> ops{zero_matrix(f, n, n), zero_matrix(f, n, n), identity_matrix(f, n),
                                 to_cyclotomic(f, v.e), to_cyclotomic(f, v.f), to_cyclotomic(f, v.h)};
  const std::string p = n ? hyperzeta::to_string(v.h(0, 0)) : "?";
  return WeightModule(ell, std::move(labels), std::move(ops), "V(" + p + ")^Fr");
}

WeightModule tensor_product(const WeightModule& a, const WeightModule& b) {
  if (a.ell() != b.ell()) throw DomainMismatch("tensor product of modules over different l");
  const bool ok = (a.is_restricted_type() && b.is_twisted_type()) ||
                  (a.is_twisted_type() && b.is_restricted_type());
  if (!ok)
    throw std::invalid_argument("tensor product needs one restricted-type and one twisted-type factor (" +
                                a.name() + ", " + b.name() + ")");
  const auto& f = a.field();
  const ExactMatrix ia = identity_matrix(f, a.dim());
  const ExactMatrix ib = identity_matrix(f, b.dim());
  std::array<ExactMatrix, 6> ops;
  for (Gen g : kAllGens) {
    if (g == Gen::K)
      ops[idx(g)] = kronecker(a.op(g), b.op(g));
    else
      ops[idx(g)] = kronecker(a.op(g), ib) + kronecker(ia, b.op(g));
  }
  std::vector<Weight> labels;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(weight_add(la, lb));
  return WeightModule(a.ell(), std::move(labels), std::move(ops), a.name() + " (x) " + b.name());
}

WeightModule tensor_module(const WeightModule& l, const WeightModule& v) {
  if (!l.is_restricted_type()) throw std::invalid_argument(l.name() + " is not of restricted type");
  if (!v.is_twisted_type()) throw std::invalid_argument(v.name() + " is not a Frobenius twist");
  return tensor_product(l, v);
}

WeightModule simple_module(std::int64_t m, int ell) {
  if (m < 0) throw std::invalid_argument("highest weight must be >= 0");
  const auto lad = short_ladic(m, ell);
  return tensor_module(restricted_simple(lad.m0, ell), frobenius_twist(classical_simple(lad.m1), ell));
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
  if (a.ell() != b.ell()) throw DomainMismatch("direct sum of modules over different l");
  std::array<ExactMatrix, 6> ops;
  for (Gen g : kAllGens) ops[idx(g)] = block_diagonal(a.op(g), b.op(g));
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return WeightModule(a.ell(), std::move(labels), std::move(ops), a.name() + " (+) " + b.name());
}

WeightModule cyclic_submodule(const WeightModule& m, const std::vector<std::vector<CycScalar>>& generators) {
  const auto& f = m.field();
  const auto n = m.dim();
  SparseSpan<CycScalar> span(n, f.zero());
  std::vector<std::vector<CycScalar>> found;
  std::vector<std::vector<CycScalar>> queue;
  for (const auto& v : generators) {
    if (v.size() != n) throw std::invalid_argument("generator vector has wrong length");
    if (span.insert(to_sparse(v)).independent) queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = std::move(queue.back());
    queue.pop_back();
    for (Gen g : kAllGens) {
      auto w = m.op(g).apply(v);
      if (span.insert(to_sparse(w)).independent) queue.push_back(std::move(w));
    }
    found.push_back(std::move(v));
  }
  // The submodule is stable under the weight projections, so projecting its
  // spanning set onto each weight space yields a basis of weight vectors.
  std::vector<std::vector<CycScalar>> basis;
  std::vector<Weight> labels;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j)
      if (!done[j] && m.labels()[j] == m.labels()[i]) {
        cls.push_back(j);
        done[j] = true;
      }
    SparseSpan<CycScalar> part(n, f.zero());
    for (const auto& v : found) {
      std::vector<CycScalar> p(n, f.zero());
      for (auto j : cls) p[j] = v[j];
      if (part.insert(to_sparse(p)).independent) {
        basis.push_back(std::move(p));
        labels.push_back(m.labels()[i]);
      }
    }
  }
  const auto k = basis.size();
  ExactMatrix q(n, k, f.zero());
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) q(r, c) = basis[c][r];
  std::array<ExactMatrix, 6> ops;
  for (Gen g : kAllGens) {
    ExactMatrix x(k, k, f.zero());
    for (std::size_t c = 0; c < k; ++c) {
      auto coords = solve(q, m.op(g).apply(basis[c]));
      if (!coords) throw InvariantViolation("generated subspace is not stable under " + std::string(gen_name(g)));
      for (std::size_t r = 0; r < k; ++r) x(r, c) = (*coords)[r];
    }
    ops[idx(g)] = std::move(x);
  }
  return WeightModule(m.ell(), std::move(labels), std::move(ops), "submodule of " + m.name());
}

ExactMatrix rep_E_div(const WeightModule& m, std::int64_t a) {
  if (a < 0) throw std::invalid_argument("negative divided power");
  const int ell = m.ell();
  const auto a0 = a % ell;
  const auto a1 = a / ell;
  const CycScalar scale = (q_factorial_at(a0, ell) * Rat(factorial(a1))).inverse();
  return scaled(matrix_power(m.op(Gen::E), static_cast<std::size_t>(a0)) *
                    matrix_power(m.op(Gen::El), static_cast<std::size_t>(a1)),
                scale);
}

ExactMatrix rep_F_div(const WeightModule& m, std::int64_t b) {
  if (b < 0) throw std::invalid_argument("negative divided power");
  const int ell = m.ell();
  const auto b0 = b % ell;
  const auto b1 = b / ell;
  const CycScalar scale = (q_factorial_at(b0, ell) * Rat(factorial(b1))).inverse();
  return scaled(matrix_power(m.op(Gen::F), static_cast<std::size_t>(b0)) *
                    matrix_power(m.op(Gen::Fl), static_cast<std::size_t>(b1)),
                scale);
}

ExactMatrix rep_cartan(const WeightModule& m, const UZeroElem& h) {
  if (h.ell() != 0 && h.ell() != m.ell()) throw DomainMismatch("Cartan element and module over different l");
  std::vector<CycScalar> diag;
  for (const auto& w : m.labels()) diag.push_back(h.ell() ? h.eval(w) : m.field().zero());
  return diagonal_matrix(m.field(), diag);
}

ExactMatrix rep_of_pbw(const WeightModule& m, const PBWElem& x) {
  if (x.ell() != 0 && x.ell() != m.ell()) throw DomainMismatch("PBW element and module over different l");
  std::map<std::int64_t, ExactMatrix> e_cache;
  std::map<std::int64_t, ExactMatrix> f_cache;
  auto e_div = [&](std::int64_t a) -> const ExactMatrix& {
    auto it = e_cache.find(a);
    if (it == e_cache.end()) it = e_cache.emplace(a, rep_E_div(m, a)).first;
    return it->second;
  };
  auto f_div = [&](std::int64_t b) -> const ExactMatrix& {
    auto it = f_cache.find(b);
    if (it == f_cache.end()) it = f_cache.emplace(b, rep_F_div(m, b)).first;
    return it->second;
  };
  ExactMatrix out = zero_matrix(m.field(), m.dim(), m.dim());
  for (const auto& [key, h] : x.parts()) out += f_div(key.first) * rep_cartan(m, h) * e_div(key.second);
  return out;
}

std::vector<PrimitiveLine> primitive_vectors(const WeightModule& m) {
  const auto& f = m.field();
  const auto n = m.dim();
  const auto& E = m.op(Gen::E);
  const auto& El = m.op(Gen::El);
  std::vector<PrimitiveLine> out;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j)
      if (!done[j] && m.labels()[j] == m.labels()[i]) {
        cls.push_back(j);
        done[j] = true;
      }
    ExactMatrix stacked(2 * n, cls.size(), f.zero());
    for (std::size_t c = 0; c < cls.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) {
        stacked(r, c) = E(r, cls[c]);
        stacked(n + r, c) = El(r, cls[c]);
      }
    auto ker = kernel(stacked);
    if (ker.empty()) continue;
    PrimitiveLine line{m.labels()[i], {}};
    for (const auto& k : ker) {
      std::vector<CycScalar> v(n, f.zero());
      for (std::size_t c = 0; c < cls.size(); ++c) v[cls[c]] = k[c];
      line.basis.push_back(std::move(v));
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace hyperzeta
