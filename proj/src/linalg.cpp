#include "trapezoids/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace trapezoids {

NumericMode Matrix::mode() const {
  ModeTracker tracker;
  for (const Scalar& s : data_) tracker.observe(s);
  return tracker.mode();
}

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
  return out;
}

struct Reduced {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form with exact pivots.
Reduced row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

double null_threshold(const Eigen::VectorXd& singular) {
  const double largest = singular.size() > 0 ? singular(0) : 0.0;
  return kTolerance * std::max(1.0, largest);
}

}  // namespace

std::vector<ScalarVector> nullspace(const Matrix& m) {
  std::vector<ScalarVector> basis;
  if (m.mode() == NumericMode::exact) {
    const Reduced red = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      ScalarVector v(m.cols(), Scalar(0));
      v[f] = Scalar(1);
      for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.rref(k, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Eigen::MatrixXd a = to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double threshold = null_threshold(sv);
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s > threshold) continue;
    ScalarVector out;
    for (Eigen::Index r = 0; r < v.rows(); ++r) out.push_back(Scalar::approx(v(r, k)));
    basis.push_back(std::move(out));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  if (m.mode() == NumericMode::exact) return row_reduce(m).pivots.size();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  const Eigen::VectorXd sv = svd.singularValues();
  const double threshold = null_threshold(sv);
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > threshold; }));
}

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (input.mode() == NumericMode::approximate) return Scalar::approx(to_eigen(input).determinant());
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return Scalar(0) * det;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

LeastSquaresDirection smallest_singular_direction(const Matrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const Eigen::MatrixXd& v = svd.matrixV();
  const Eigen::Index last = v.cols() - 1;
  LeastSquaresDirection out;
  out.singular_value = last < sv.size() ? sv(last) : 0.0;
  for (Eigen::Index r = 0; r < v.rows(); ++r) out.vector.push_back(Scalar::approx(v(r, last)));
  return out;
}

Inertia symmetric_inertia(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("inertia of a non-square matrix");
  // coefficients[k] = e_k, the sum of the k x k principal minors;
  // det(lambda I - M) = sum_k (-1)^k e_k lambda^(n-k).
  std::vector<Scalar> e(n + 1, Scalar(0));
  e[0] = Scalar(1);
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (subset & (1u << k)) idx.push_back(k);
    Matrix sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = m(idx[r], idx[c]);
    e[idx.size()] += determinant(sub);
  }
  Inertia inertia;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k <= n; ++k)
    if (!e[k].is_zero()) last_nonzero = k;
  inertia.zero = static_cast<int>(n - last_nonzero);
  // Descartes' rule is exact for real-rooted polynomials.
  int variations = 0;
  int previous = 0;
  for (std::size_t k = 0; k <= last_nonzero; ++k) {
    int s = e[k].sign();
    if (k % 2 == 1) s = -s;
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  inertia.positive = variations;
  inertia.negative = static_cast<int>(last_nonzero) - variations;
  return inertia;
}

}  // namespace trapezoids
