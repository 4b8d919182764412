#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hyperzeta {

/// Finite-type Cartan datum together with the odd order l of the root of
/// unity. Constructed only through the factories, which validate
///   a_ii = 2, a_ij <= 0 (i != j), d_i a_ij = d_j a_ji, d_i in {1,2,3},
///   l odd, 3 does not divide l when a G2 component is present,
///   and a invertible over Q.
class CartanData {
 public:
  /// Cartan type letter 'A'..'G' with rank, in Bourbaki numbering.
  static std::shared_ptr<const CartanData> of_type(char type, int rank, int ell);
  /// Interned sl2 datum for l; the same pointer for every call with equal l.
  static std::shared_ptr<const CartanData> sl2(int ell);
  /// Arbitrary matrix; symmetrizers are derived and validated.
  static std::shared_ptr<const CartanData> from_matrix(std::vector<std::vector<int>> a, int ell,
                                                       std::string name = "custom");

  int rank() const { return static_cast<int>(a_.size()); }
  int ell() const { return ell_; }
  int entry(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  const std::string& name() const { return name_; }
  bool has_g2_component() const { return has_g2_; }

  friend bool operator==(const CartanData& x, const CartanData& y) {
    return x.ell_ == y.ell_ && x.a_ == y.a_;
  }

 private:
  CartanData() = default;

  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  int ell_ = 0;
  bool has_g2_ = false;
  std::string name_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

}  // namespace hyperzeta
