#pragma once

#include "hyperzeta/cyclotomic.hpp"
#include "hyperzeta/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperzeta {

inline Rat one_like(const Rat&) { return Rat(1); }
inline CycScalar one_like(const CycScalar& z) {
  if (!z.field()) throw std::logic_error("one_like needs a bound cyclotomic zero");
  return z.field()->one();
}

/// Dense row-major matrix over an exact field (Rat or CycScalar).
///
/// Matrices are built from a zero prototype so that every entry of a
/// CycScalar matrix is bound to the same cyclotomic field.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const S& zero, const S& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<S>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!hyperzeta::is_zero(v)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && !hyperzeta::is_zero((*this)(r, c))) return false;
    return true;
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& v : data_)
      if (!hyperzeta::is_zero(v)) ++n;
    return n;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!hyperzeta::is_zero(o.data_[i])) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!hyperzeta::is_zero(o.data_[i])) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& v : data_)
      if (!hyperzeta::is_zero(v)) v *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  /// Product; zero entries of the left factor are skipped, which keeps the
  /// cost proportional to its nonzeros for the sparse operators used here.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: " + a.shape() + " times " + b.shape());
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (hyperzeta::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!hyperzeta::is_zero(bkj)) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<S> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if (!hyperzeta::is_zero((*this)(i, k)) && !hyperzeta::is_zero(v[k]))
          out[i] += (*this)(i, k) * v[k];
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  S zero_{};
  std::vector<S> data_;
};

using ExactMatrix = Matrix<CycScalar>;
using RatMatrix = Matrix<Rat>;

ExactMatrix zero_matrix(const CyclotomicField& f, std::size_t rows, std::size_t cols);
ExactMatrix identity_matrix(const CyclotomicField& f, std::size_t n);
ExactMatrix diagonal_matrix(const CyclotomicField& f, const std::vector<CycScalar>& diag);
/// Lifts a rational matrix into Q(zeta_l).
ExactMatrix to_cyclotomic(const CyclotomicField& f, const RatMatrix& m);
/// Kronecker product a (x) b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matrix_power(const ExactMatrix& m, std::size_t k);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Outcome of reducing a matrix to reduced row-echelon form.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gaussian elimination to reduced row-echelon form.
template <class S>
Echelon<S> rref(Matrix<S> m) {
  Echelon<S> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const S inv = inverse(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> kernel(const Matrix<S>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(m.cols(), m.zero());
    v[free] = one_like(m.zero());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Error raised when inverting a singular matrix; reports the rank found.
class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix(std::size_t n, std::size_t rank)
      : std::domain_error("matrix is singular: rank " + std::to_string(rank) + " < " +
                          std::to_string(n)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n, m.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = one_like(m.zero());
  }
  auto e = rref(std::move(aug));
  std::size_t left_rank = 0;
  for (auto c : e.pivot_cols)
    if (c < n) ++left_rank;
  if (left_rank < n) throw SingularMatrix(n, left_rank);
  Matrix<S> inv(n, n, m.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// One solution of m x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& m, const std::vector<S>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Matrix<S> aug(m.rows(), m.cols() + 1, m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto e = rref(std::move(aug));
  std::vector<S> x(m.cols(), m.zero());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == m.cols()) return std::nullopt;
    x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  }
  return x;
}

}  // namespace hyperzeta
