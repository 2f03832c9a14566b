#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trapezoids/geometry.hpp"
#include "trapezoids/relations.hpp"

namespace trapezoids {

/// Rotation of the plane by (cos, sin). Exact rotations come from rational
/// points of the unit circle, ((1-t^2)/(1+t^2), 2t/(1+t^2)).
struct PlanarRotation {
  Scalar cos = Scalar(1);
  Scalar sin = Scalar(0);

  /// Throws PreconditionError unless cos^2 + sin^2 == 1.
  static PlanarRotation make(Scalar cos, Scalar sin);
  static PlanarRotation identity() { return {}; }
  static PlanarRotation from_tan_half(const Scalar& t);
  /// Floating rotation by an angle in radians.
  static PlanarRotation from_angle(double radians);

  [[nodiscard]] bool is_identity() const { return sin.is_zero() && cos == Scalar(1); }
  [[nodiscard]] PlanarRotation inverse() const { return {cos, -sin}; }
  [[nodiscard]] Vec2 apply(const Vec2& p) const { return {cos * p.x - sin * p.y, sin * p.x + cos * p.y}; }
  [[nodiscard]] Interval apply(const Interval& i) const;
  [[nodiscard]] Line2 apply(const Line2& l) const;
};

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

/// x -> rotation * x + translation, with rotation orthogonal of determinant 1.
struct RigidMotion3 {
  Matrix3 rotation{{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}};
  Vec3 translation;

  /// Throws PreconditionError unless the rotation is orthogonal with det 1.
  static RigidMotion3 make(Matrix3 rotation, Vec3 translation);
  static RigidMotion3 translate(Scalar p, Scalar q, Scalar r);
  /// Rotation about the x-axis: (x, y, z) -> (x, y cos - z sin, y sin + z cos).
  static RigidMotion3 rotate_x(const PlanarRotation& angle);
  static RigidMotion3 rotate_z(const PlanarRotation& angle);

  /// this after other
  [[nodiscard]] RigidMotion3 compose(const RigidMotion3& other) const;
  [[nodiscard]] Vec3 apply_vector(const Vec3& v) const;
  [[nodiscard]] Vec3 apply(const Vec3& p) const { return apply_vector(p) + translation; }
  [[nodiscard]] Line3 apply(const Line3& l) const { return Line3(apply(l.base()), apply_vector(l.dir())); }
  /// The x-axis angle when the rotation part is a rotation about the x-axis.
  [[nodiscard]] std::optional<PlanarRotation> x_axis_angle() const;
};

/// (a,b;c,d) -> (b,d,0) + t (a,c,1)
Line3 to_line(const Interval& i);
/// Inverse of to_line. Throws PreconditionError for lines parallel to the xy-plane.
Interval from_line(const Line3& l);

/// (a,b;c,d) -> (b,-a,0) + t (c,d,1); intersections encode perpendicular diagonals.
Line3 to_line_perp(const Interval& i);
Interval from_line_perp(const Line3& l);

/// (a,b;c,d) -> (b,d,0) + t (a, rho c, 1); intersections encode slope ratio rho.
Line3 to_line_ratio(const Interval& i, const Scalar& rho);
Interval from_line_ratio(const Line3& l, const Scalar& rho);

/// The interval-to-line map whose intersections encode `relation.left`.
Line3 line_for(const Relation& relation, const Interval& i);
Interval interval_for(const Relation& relation, const Line3& l);

/// Throws PreconditionError naming the first repeated four-tuple.
void require_distinct(std::span<const Interval> intervals);

/// Images of every interval, then of every reverse, in input order (2N lines).
std::vector<Line3> line_set(std::span<const Interval> intervals, const Relation& relation = Relation::trapezoid());

/// Two members of the intervals-and-reverses family with equal (a, c) and
/// different (b, d): their lines are parallel. Indices are into the 2N family
/// (k >= N means the reverse of interval k - N).
std::optional<std::pair<std::size_t, std::size_t>> find_exceptional_pair(std::span<const Interval> intervals);

struct I2LReport {
  std::size_t intervals = 0;         // N
  std::size_t trapezoids = 0;        // T, with multiplicity
  std::size_t intersecting_pairs = 0;  // P over the 2N lines (identical lines count)
  bool holds = false;                // 2T == P - N
};

/// Counts both sides of 2T = P - N. Throws PreconditionError when an
/// exceptional parallel pair is present; apply generic_rotation first.
I2LReport verify_i2l(std::span<const Interval> intervals);

struct RotatedSet {
  std::vector<Interval> intervals;
  PlanarRotation rotation;
};

/// Identity when no exceptional pair exists; otherwise the first seeded
/// rational rotation that clears every exceptional pair.
RotatedSet generic_rotation(std::span<const Interval> intervals, std::uint64_t seed);

/// Interval of the line translated by (p, q, r):
/// (a,b;c,d) -> (a, b + p - r a; c, d + q - r c).
Interval translate_action(const Interval& i, const Scalar& p, const Scalar& q, const Scalar& r);

/// Interval of the line rotated about the x-axis. Throws PreconditionError
/// when c sin + cos == 0 (the image is parallel to the xy-plane).
Interval rotate_x_action(const Interval& i, const PlanarRotation& angle);

/// Moves the line of `i` by `motion` and pulls it back. Throws
/// PreconditionError when the image is parallel to the xy-plane.
Interval transform_interval(const Interval& i, const RigidMotion3& motion);

}  // namespace trapezoids
