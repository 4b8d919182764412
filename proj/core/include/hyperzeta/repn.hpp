#pragma once

#include "hyperzeta/matrix.hpp"
#include "hyperzeta/pbw.hpp"
#include "hyperzeta/sparse_span.hpp"
#include "hyperzeta/weight.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperzeta {

enum class Gen { E, F, K, El, Fl, B };
inline constexpr std::array<Gen, 6> kAllGens{Gen::E, Gen::F, Gen::K, Gen::El, Gen::Fl, Gen::B};
const char* gen_name(Gen g);

/// Finite-dimensional U_zeta(sl2)-module given by the matrices of E, F, K,
/// E^(l), F^(l) and B = binom(K, l) together with one weight label per basis
/// vector. K and B must be diagonal with eigenvalues read off the labels.
///
/// Construction runs the relation suite (see check_relations) and throws
/// InvariantViolation naming the first identity that fails.
class WeightModule {
 public:
  WeightModule(int ell, std::vector<Weight> labels, std::array<ExactMatrix, 6> ops, std::string name);

  int ell() const { return ell_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<Weight>& labels() const { return labels_; }
  const ExactMatrix& op(Gen g) const { return ops_[static_cast<std::size_t>(g)]; }
  const std::array<ExactMatrix, 6>& ops() const { return ops_; }
  const std::string& name() const { return name_; }
  const CyclotomicField& field() const { return CyclotomicField::get(ell_); }

  /// E^(l) and F^(l) vanish.
  bool is_restricted_type() const;
  /// E and F vanish and K is the identity.
  bool is_twisted_type() const;

  /// K^l = 1, K E K^-1 = zeta^2 E, K F K^-1 = zeta^-2 F,
  /// E F - F E = [K; 0 over 1], E^l = F^l = 0, and
  /// B F^(t) = F^(t) [K; -2t over l], B E^(t) = E^(t) [K; 2t over l]
  /// for 1 <= t <= l + 1.
  void check_relations() const;

 private:
  int ell_;
  std::vector<Weight> labels_;
  std::array<ExactMatrix, 6> ops_;
  std::string name_;
};

/// U(sl2)-module given by rational matrices for e, f, h.
struct ClassicalModule {
  RatMatrix e;
  RatMatrix f;
  RatMatrix h;
  std::size_t dim() const { return h.rows(); }
  /// [e,f] = h, [h,e] = 2e, [h,f] = -2f and h diagonal with integer
  /// eigenvalues; throws InvariantViolation otherwise.
  void check_relations() const;
};

/// L(m0): basis v_0..v_m0 with K v_j = zeta^(m0-2j) v_j, F v_j = [j+1] v_(j+1),
/// E v_j = [m0-j+1] v_(j-1), E^(l) = F^(l) = 0, labels embed(m0 - 2j).
WeightModule restricted_simple(std::int64_t m0, int ell);
/// V(p): h w_j = (p-2j) w_j, f w_j = (j+1) w_(j+1), e w_j = (p-j+1) w_(j-1).
ClassicalModule classical_simple(std::int64_t p);
/// Pullback along Frobenius: E = F = 0, K = 1, E^(l) = e, F^(l) = f, B = h.
WeightModule frobenius_twist(const ClassicalModule& v, int ell);
/// Tensor product of a restricted-type module and a twisted-type module in
/// either order. Generators act as X (x) 1 + 1 (x) X (K as K (x) K); the
/// cross terms of the coproducts vanish on such pairs.
WeightModule tensor_product(const WeightModule& a, const WeightModule& b);
/// L (x) V^Fr with L restricted type and V twisted type.
WeightModule tensor_module(const WeightModule& l, const WeightModule& v);
/// L(m0) (x) V(m1)^Fr for m = m0 + l*m1 >= 0.
WeightModule simple_module(std::int64_t m, int ell);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);
/// Submodule generated by the given vectors, on a basis of weight vectors.
WeightModule cyclic_submodule(const WeightModule& m, const std::vector<std::vector<CycScalar>>& generators);

/// Matrices of the divided powers: E^(a) = E^a0/[a0]! (E^(l))^a1/a1!.
ExactMatrix rep_E_div(const WeightModule& m, std::int64_t a);
ExactMatrix rep_F_div(const WeightModule& m, std::int64_t b);
/// Diagonal action of a Cartan element through the weight labels.
ExactMatrix rep_cartan(const WeightModule& m, const UZeroElem& h);
/// Operator of a normal form, extended linearly over its parts.
ExactMatrix rep_of_pbw(const WeightModule& m, const PBWElem& x);

struct PrimitiveLine {
  Weight weight;
  std::vector<std::vector<CycScalar>> basis;
};
/// Joint kernel of E and E^(l) within each weight space, nonzero spaces only.
std::vector<PrimitiveLine> primitive_vectors(const WeightModule& m);

struct SimplicityCertificate {
  bool simple = false;
  std::size_t span_dim = 0;  // dimension of the generated unital algebra
  std::size_t target = 0;    // dim^2
};
/// Span closure of the unital algebra generated by the six operators.
SimplicityCertificate is_simple(const WeightModule& m);

/// Kernel of u_zeta -> End(M) on the basis F^b K^c E^a (a, b, c < l),
/// indexed by (b*l + c)*l + a.
struct Annihilator {
  int ell = 0;
  std::vector<SparseVec<CycScalar>> kernel;
  std::size_t codimension = 0;
};
Annihilator uzeta_annihilator(const WeightModule& m);
bool same_annihilator(const Annihilator& a, const Annihilator& b);

enum class GenSubset { uzeta, all };
/// Dimension of {X : X g = g X for g in the subset}; uzeta is {E, F, K}.
std::size_t commutant(const WeightModule& m, GenSubset subset);

/// An invertible X with X A_g = B_g X for all six generators, if one exists.
std::optional<ExactMatrix> find_intertwiner(const WeightModule& a, const WeightModule& b);

struct TensorTheoremReport {
  std::int64_t m = 0;
  int ell = 0;
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  std::size_t dim = 0;
  std::size_t expected_dim = 0;
  SimplicityCertificate certificate;
  std::vector<Weight> primitive_weights;
  bool highest_weight_ok = false;
  bool intertwiner_found = false;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// Builds L(m0) (x) V(m1)^Fr, checks dimension, simplicity, the unique
/// primitive line of weight embed(m), and solves for an isomorphism with
/// the reversed product V(m1)^Fr (x) L(m0).
TensorTheoremReport tensor_theorem_check(std::int64_t m, int ell);

struct DufloReport {
  std::int64_t m = 0;
  int ell = 0;
  bool simple_highest_weight = false;
  std::size_t kernel_dim_tensor = 0;
  std::size_t kernel_dim_restricted = 0;
  std::size_t codimension = 0;
  bool equal = false;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// Checks that L(m0) (x) V(m1)^Fr is a simple highest weight module with
/// the same u_zeta-annihilator as L(m0).
DufloReport duflo_check(std::int64_t m, int ell);

struct WeightMappingReport {
  std::size_t checked = 0;           // nonzero images inspected
  std::size_t down_no_borrow = 0;    // F^(t) with lam0 >= c0
  std::size_t down_borrow = 0;       // F^(t) with lam0 < c0
  std::size_t up_no_carry = 0;       // E^(t) with lam0 + c0 < l
  std::size_t up_carry = 0;          // E^(t) with lam0 + c0 >= l
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// For 0 <= t <= tmax: F^(t) maps weight lam into lam - t*rho and E^(t)
/// into lam + t*rho, with the B eigenvalue predicted by the shifted
/// binomial branch formulas.
WeightMappingReport weight_mapping_check(const WeightModule& m, std::int64_t tmax);

}  // namespace hyperzeta
