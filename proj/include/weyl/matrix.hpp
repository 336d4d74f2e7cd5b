#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weyl/scalar.hpp"

namespace weyl {

/// Dense row-major matrix of exact scalars.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);

/// Solution set of a linear system A u = b: one particular solution and a
/// basis of the kernel of A.
struct AffineSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

/// Exact Gauss-Jordan elimination. Returns nothing when the system is
/// inconsistent.
std::optional<AffineSolution> solve_affine(const ScalarMatrix& a, const std::vector<Scalar>& b);

}  // namespace weyl
