#include "hyperzeta/matrix.hpp"

namespace hyperzeta {

ExactMatrix zero_matrix(const CyclotomicField& f, std::size_t rows, std::size_t cols) {
  return ExactMatrix(rows, cols, f.zero());
}

ExactMatrix identity_matrix(const CyclotomicField& f, std::size_t n) {
  return ExactMatrix::identity(n, f.zero(), f.one());
}

ExactMatrix diagonal_matrix(const CyclotomicField& f, const std::vector<CycScalar>& diag) {
  ExactMatrix m = zero_matrix(f, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix to_cyclotomic(const CyclotomicField& f, const RatMatrix& m) {
  ExactMatrix out = zero_matrix(f, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out(r, c) = CycScalar(f, m(r, c));
  return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

ExactMatrix matrix_power(const ExactMatrix& m, std::size_t k) {
  ExactMatrix acc = ExactMatrix::identity(m.rows(), m.zero(), one_like(m.zero()));
  for (std::size_t i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

}  // namespace hyperzeta
