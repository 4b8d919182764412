#pragma once

#include "hyperzeta/matrix.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperzeta {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
template <class S>
using SparseVec = std::vector<std::pair<std::size_t, S>>;

template <class S>
SparseVec<S> to_sparse(const std::vector<S>& dense) {
  SparseVec<S> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) out.emplace_back(i, dense[i]);
  return out;
}

template <class S>
SparseVec<S> to_sparse(const Matrix<S>& m) {
  return to_sparse(m.data());
}

/// Incrementally maintained semi-echelon basis of a subspace of S^n.
///
/// Every stored row starts with a coefficient 1 at its pivot and the pivots
/// are distinct. With tracking enabled each row also remembers how it was
/// formed from the inserted vectors, so a vector that reduces to zero yields
/// an explicit linear relation among the inputs.
template <class S>
class SparseSpan {
 public:
  SparseSpan(std::size_t ambient, S zero, bool track_relations = false)
      : ambient_(ambient), zero_(std::move(zero)), track_(track_relations) {}

  struct Insertion {
    bool independent = false;
    /// Coefficients on inserted ids of a vanishing combination; the id of
    /// the vector just inserted always carries coefficient one. Empty for
    /// independent insertions or when tracking is off.
    SparseVec<S> relation;
  };

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ambient_; }

  bool contains(const SparseVec<S>& v) const {
    std::vector<S> work;
    std::size_t lead = reduce(v, work, nullptr);
    return lead == ambient_;
  }

  Insertion insert(const SparseVec<S>& v, std::size_t id = 0) {
    std::vector<S> work;
    std::vector<S> combo;
    if (track_) {
      if (id >= combo_width_) combo_width_ = id + 1;
      combo.assign(combo_width_, zero_);
      combo[id] = one_like(zero_);
    }
    const std::size_t lead = reduce(v, work, track_ ? &combo : nullptr);
    Insertion out;
    if (lead == ambient_) {
      if (track_) out.relation = to_sparse(combo);
      return out;
    }
    const S inv = inverse(work[lead]);
    Row row;
    for (std::size_t i = lead; i < ambient_; ++i)
      if (!is_zero(work[i])) row.entries.emplace_back(i, work[i] * inv);
    if (track_) {
      for (auto& c : combo)
        if (!is_zero(c)) c *= inv;
      row.combo = to_sparse(combo);
    }
    pivot_of_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    out.independent = true;
    return out;
  }

  std::vector<SparseVec<S>> basis() const {
    std::vector<SparseVec<S>> out;
    for (const auto& r : rows_) out.push_back(r.entries);
    return out;
  }

 private:
  struct Row {
    SparseVec<S> entries;
    SparseVec<S> combo;
  };

  // Eliminates pivots from v in increasing index order; returns the first
  // index holding a nonzero that is not a pivot, or ambient_ if none.
  std::size_t reduce(const SparseVec<S>& v, std::vector<S>& work, std::vector<S>* combo) const {
    work.assign(ambient_, zero_);
    for (const auto& [i, x] : v) {
      if (i >= ambient_) throw std::out_of_range("sparse vector index beyond ambient dimension");
      work[i] = x;
    }
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (is_zero(work[k])) continue;
      auto it = pivot_of_.find(k);
      if (it == pivot_of_.end()) return k;
      const Row& row = rows_[it->second];
      const S factor = work[k];
      for (const auto& [j, x] : row.entries) work[j] -= factor * x;
      if (combo) {
        if (combo->size() < combo_width_) combo->resize(combo_width_, zero_);
        for (const auto& [j, x] : row.combo) (*combo)[j] -= factor * x;
      }
    }
    return ambient_;
  }

  std::size_t ambient_;
  S zero_;
  bool track_;
  std::size_t combo_width_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_;
};

/// Basis of the kernel of the linear map sending id i to vectors[i], as
/// relations over the ids. Size is vectors.size() minus the rank.
template <class S>
std::vector<SparseVec<S>> relations(const std::vector<SparseVec<S>>& vectors, std::size_t ambient,
                                    const S& zero) {
  SparseSpan<S> span(ambient, zero, true);
  std::vector<SparseVec<S>> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto ins = span.insert(vectors[i], i);
    if (!ins.independent) out.push_back(std::move(ins.relation));
  }
  return out;
}

}  // namespace hyperzeta
