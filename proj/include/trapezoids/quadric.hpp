#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "trapezoids/geometry.hpp"
#include "trapezoids/linalg.hpp"

namespace trapezoids {

enum class QuadricClass {
  hyperboloid_one_sheet,
  hyperbolic_paraboloid,
  cone,
  plane_pair,
  other_nondoubly_ruled,
  degenerate,
};
std::string_view to_string(QuadricClass c);

/// Quadric surface with coefficients in the order
/// x^2, y^2, z^2, xy, xz, yz, x, y, z, 1.
class Quadric {
 public:
  static constexpr std::size_t kSize = 10;

  /// Throws PreconditionError when every coefficient is zero.
  explicit Quadric(std::array<Scalar, kSize> q);

  [[nodiscard]] const std::array<Scalar, kSize>& coefficients() const { return q_; }
  [[nodiscard]] QuadricClass classification() const { return class_; }
  [[nodiscard]] bool doubly_ruled() const {
    return class_ == QuadricClass::hyperboloid_one_sheet || class_ == QuadricClass::hyperbolic_paraboloid;
  }

  [[nodiscard]] Scalar eval(const Vec3& p) const;
  [[nodiscard]] bool contains(const Vec3& p) const { return eval(p).is_zero(); }

  /// Coefficients of q(base + t dir) = c2 t^2 + c1 t + c0, as {c0, c1, c2}.
  [[nodiscard]] std::array<Scalar, 3> restrict_to(const Line3& l) const;

  /// Twice the symmetric 4x4 matrix of the form in homogeneous coordinates.
  [[nodiscard]] Matrix doubled_matrix() const;

  [[nodiscard]] Quadric normalized() const;
  [[nodiscard]] std::string key() const;

 private:
  std::array<Scalar, kSize> q_;
  QuadricClass class_;
};

/// Signature-based affine classification: the inertia of the full 4x4 form
/// and of its 3x3 quadratic block. Invariant under nonzero scaling.
QuadricClass classify_quadric(const std::array<Scalar, Quadric::kSize>& q);

/// True when the restriction to the line vanishes identically.
bool line_on_quadric(const Quadric& q, const Line3& l);

/// The three linear conditions on the ten coefficients that make a quadric
/// contain `l`, as rows (t^0, t^1, t^2).
std::array<std::array<Scalar, Quadric::kSize>, 3> containment_conditions(const Line3& l);

struct QuadricFit {
  std::optional<Quadric> quadric;
  std::size_t nullspace_dimension = 0;
};

/// The unique quadric containing three lines, from the null space of the
/// 9 x 10 containment system; `quadric` is empty unless that space is
/// one-dimensional (pairwise skew lines in general position).
QuadricFit quadric_through_lines(const Line3& l1, const Line3& l2, const Line3& l3);

}  // namespace trapezoids
