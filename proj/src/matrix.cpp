#include "weyl/matrix.hpp"

#include <utility>

#include "weyl/errors.hpp"

namespace weyl {

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch");
  ScalarMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix shape mismatch");
  ScalarMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

std::optional<AffineSolution> solve_affine(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw PreconditionError("right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Augmented copy, reduced to row echelon form.
  ScalarMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = b[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c <= cols; ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c <= cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c <= cols; ++c) m(r, c) -= factor * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  for (std::size_t r = row; r < rows; ++r) {
    if (m(r, cols) != 0) return std::nullopt;
  }

  AffineSolution sol;
  sol.particular.assign(cols, Scalar(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    sol.particular[pivot_cols[k]] = m(k, cols);
    is_pivot[pivot_cols[k]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace weyl
