#pragma once

#include <cstddef>
#include <vector>

#include "trapezoids/scalar.hpp"

namespace trapezoids {

/// Dense row-major matrix of scalars, sized for the small systems used here
/// (at most a few dozen rows).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Mode of the entries (literals ignored).
  [[nodiscard]] NumericMode mode() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

using ScalarVector = std::vector<Scalar>;

/// Basis of {x : M x = 0}. Exact matrices use fraction-exact row reduction;
/// approximate ones use the right singular vectors whose singular values fall
/// below kTolerance * max(1, largest singular value).
std::vector<ScalarVector> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Unit right singular vector for the smallest singular value (approximate
/// mode fitting), with that singular value.
struct LeastSquaresDirection {
  ScalarVector vector;
  double singular_value;
};
LeastSquaresDirection smallest_singular_direction(const Matrix& m);

/// Eigenvalue sign counts of a symmetric matrix, computed from the signs of
/// its characteristic polynomial coefficients (sums of principal minors).
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  [[nodiscard]] int rank() const { return positive + negative; }
  [[nodiscard]] bool definite() const { return zero == 0 && (positive == 0 || negative == 0); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia symmetric_inertia(const Matrix& m);

}  // namespace trapezoids
