#pragma once

#include <optional>
#include <string>

#include "trapezoids/scalar.hpp"

namespace trapezoids {

struct Vec2 {
  Scalar x, y;

  friend Vec2 operator+(const Vec2& p, const Vec2& q) { return {p.x + q.x, p.y + q.y}; }
  friend Vec2 operator-(const Vec2& p, const Vec2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Vec2 operator*(const Scalar& s, const Vec2& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Vec2& p, const Vec2& q) { return p.x == q.x && p.y == q.y; }
};

inline Scalar dot(const Vec2& p, const Vec2& q) { return p.x * q.x + p.y * q.y; }
inline Scalar cross(const Vec2& p, const Vec2& q) { return p.x * q.y - p.y * q.x; }
/// Twice the signed area of the triangle (p, q, r); positive when counter-clockwise.
inline Scalar orientation(const Vec2& p, const Vec2& q, const Vec2& r) { return cross(q - p, r - p); }

struct Vec3 {
  Scalar x, y, z;

  friend Vec3 operator+(const Vec3& p, const Vec3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
  friend Vec3 operator-(const Vec3& p, const Vec3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
  friend Vec3 operator*(const Scalar& s, const Vec3& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(const Vec3& p, const Vec3& q) { return p.x == q.x && p.y == q.y && p.z == q.z; }

  [[nodiscard]] bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

inline Scalar dot(const Vec3& p, const Vec3& q) { return p.x * q.x + p.y * q.y + p.z * q.z; }
inline Vec3 cross(const Vec3& p, const Vec3& q) {
  return {p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x};
}

/// Grouping key: the reduced fraction for exact values, a rounded decimal otherwise.
std::string scalar_key(const Scalar& s);
std::string point_key(const Vec3& p);
std::string point_key(const Vec2& p);

/// Directed segment from (a,b) to (c,d).
struct Interval {
  Scalar a, b, c, d;

  /// Throws PreconditionError unless (a,b) != (c,d).
  static Interval make(Scalar a, Scalar b, Scalar c, Scalar d);

  [[nodiscard]] Vec2 initial() const { return {a, b}; }
  [[nodiscard]] Vec2 terminal() const { return {c, d}; }
  [[nodiscard]] std::string key() const;

  friend bool operator==(const Interval& i, const Interval& j) {
    return i.a == j.a && i.b == j.b && i.c == j.c && i.d == j.d;
  }
};

Interval reverse(const Interval& i);

/// Line alpha*x + beta*y + gamma = 0 in the plane.
struct Line2 {
  Scalar alpha, beta, gamma;

  /// y = slope*x + intercept
  static Line2 graph(const Scalar& slope, const Scalar& intercept) { return {slope, Scalar(-1), intercept}; }
  static Line2 through(const Vec2& p, const Vec2& q);

  [[nodiscard]] Scalar eval(const Vec2& p) const { return alpha * p.x + beta * p.y + gamma; }
  [[nodiscard]] bool contains(const Vec2& p) const { return eval(p).is_zero(); }
};

/// Line base + t*dir in R^3. Lines built by `to_line` are in graph form:
/// base.z == 0 and dir.z == 1.
class Line3 {
 public:
  /// Throws PreconditionError for a zero direction.
  Line3(Vec3 base, Vec3 dir);

  [[nodiscard]] const Vec3& base() const { return base_; }
  [[nodiscard]] const Vec3& dir() const { return dir_; }
  [[nodiscard]] Vec3 at(const Scalar& t) const { return base_ + t * dir_; }
  [[nodiscard]] bool is_graph_form() const;
  [[nodiscard]] bool contains(const Vec3& p) const;

  /// Same line with a normalized base and direction: dir.z == 1 and base.z == 0
  /// when the line crosses z = 0, otherwise the first nonzero direction
  /// component is 1 and the base has that coordinate equal to 0.
  [[nodiscard]] Line3 canonical() const;
  [[nodiscard]] std::string key() const;

 private:
  Vec3 base_, dir_;
};

enum class IntersectionKind { point, parallel, skew, identical };
std::string_view to_string(IntersectionKind kind);

struct LineIntersection {
  IntersectionKind kind;
  std::optional<Vec3> point;

  /// Intersect in affine space or at infinity (parallel); identical lines
  /// are not counted.
  [[nodiscard]] bool meets() const { return kind == IntersectionKind::point || kind == IntersectionKind::parallel; }
};

LineIntersection line_intersect(const Line3& l, const Line3& m);

/// Plane A x + B y + C z + D = 0.
struct Plane3 {
  Scalar A, B, C, D;

  /// Throws PreconditionError when (A,B,C) vanishes.
  static Plane3 make(Scalar A, Scalar B, Scalar C, Scalar D);

  [[nodiscard]] Scalar eval(const Vec3& p) const { return A * p.x + B * p.y + C * p.z + D; }
  [[nodiscard]] bool contains(const Vec3& p) const { return eval(p).is_zero(); }
  [[nodiscard]] bool contains(const Line3& l) const;
  /// Coefficients scaled so that the first nonzero one is 1.
  [[nodiscard]] Plane3 normalized() const;
  [[nodiscard]] std::string key() const;
};

/// Plane containing both lines, when they intersect or are parallel and distinct.
std::optional<Plane3> common_plane(const Line3& l, const Line3& m);

}  // namespace trapezoids
