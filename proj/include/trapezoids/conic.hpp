#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "trapezoids/geometry.hpp"

namespace trapezoids {

enum class ConicClass {
  ellipse,
  parabola,
  hyperbola,
  line_pair,
  parallel_line_pair,
  double_line,
  line,  // no quadratic part: a single affine line
  point,
  empty,
};
std::string_view to_string(ConicClass c);

/// q1 x^2 + q2 xy + q3 y^2 + q4 x + q5 y + q6 = 0
class Conic {
 public:
  /// Throws PreconditionError when every coefficient is zero.
  explicit Conic(std::array<Scalar, 6> q);

  [[nodiscard]] const std::array<Scalar, 6>& coefficients() const { return q_; }
  [[nodiscard]] ConicClass classification() const { return class_; }

  [[nodiscard]] Scalar eval(const Vec2& p) const;
  [[nodiscard]] bool contains(const Vec2& p) const { return eval(p).is_zero(); }

  /// Coefficients scaled so that the first nonzero one is 1.
  [[nodiscard]] Conic normalized() const;

 private:
  std::array<Scalar, 6> q_;
  ConicClass class_;
};

/// Affine classification from the discriminant q2^2 - 4 q1 q3 and the
/// determinant/rank of the 3x3 symmetric coefficient matrix. Invariant under
/// nonzero scaling.
ConicClass classify_conic(const std::array<Scalar, 6>& q);

struct ConicFit {
  std::optional<Conic> conic;
  /// Dimension of the solution space of the incidence system.
  std::size_t nullspace_dimension = 0;
  /// Largest |conic(p)| over the fitted points (approximate mode).
  double residual = 0.0;
};

/// Conic through >= 5 points: the null space of the n x 6 incidence system.
/// `conic` is set when that space is one-dimensional; in approximate mode an
/// overdetermined system falls back to the smallest singular direction.
ConicFit fit_conic(std::span<const Vec2> points);

/// Line through >= 2 points when they are all collinear.
std::optional<Line2> fit_line(std::span<const Vec2> points);

}  // namespace trapezoids
