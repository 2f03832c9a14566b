#include "trapezoids/geometry.hpp"

#include <cmath>
#include <cstdio>

namespace trapezoids {

std::string scalar_key(const Scalar& s) {
  if (s.is_exact()) return s.str();
  // Approximate keys are for display and coarse bucketing only; grouping in
  // approximate mode compares with the tolerance relation instead.
  char buf[40];
  const double v = s.is_zero() ? 0.0 : s.to_double();
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

std::string point_key(const Vec3& p) {
  return scalar_key(p.x) + "," + scalar_key(p.y) + "," + scalar_key(p.z);
}

std::string point_key(const Vec2& p) { return scalar_key(p.x) + "," + scalar_key(p.y); }

Interval Interval::make(Scalar a, Scalar b, Scalar c, Scalar d) {
  Interval i{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (i.a == i.c && i.b == i.d) throw PreconditionError("interval has zero length: (" + i.key() + ")");
  return i;
}

std::string Interval::key() const {
  return scalar_key(a) + "," + scalar_key(b) + ";" + scalar_key(c) + "," + scalar_key(d);
}

Interval reverse(const Interval& i) { return {i.c, i.d, i.a, i.b}; }

Line2 Line2::through(const Vec2& p, const Vec2& q) {
  if (p == q) throw PreconditionError("line through coincident points");
  return {p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
}

Line3::Line3(Vec3 base, Vec3 dir) : base_(std::move(base)), dir_(std::move(dir)) {
  if (dir_.is_zero()) throw PreconditionError("line direction is zero");
}

bool Line3::is_graph_form() const { return base_.z.is_zero() && dir_.z == Scalar(1); }

bool Line3::contains(const Vec3& p) const { return cross(p - base_, dir_).is_zero(); }

Line3 Line3::canonical() const {
  if (!dir_.z.is_zero()) {
    const Vec3 d = (Scalar(1) / dir_.z) * dir_;
    const Vec3 b = base_ - base_.z * d;
    return Line3({b.x, b.y, Scalar(0)}, {d.x, d.y, Scalar(1)});
  }
  if (!dir_.x.is_zero()) {
    const Vec3 d = (Scalar(1) / dir_.x) * dir_;
    const Vec3 b = base_ - base_.x * d;
    return Line3({Scalar(0), b.y, b.z}, {Scalar(1), d.y, Scalar(0)});
  }
  const Vec3 d = (Scalar(1) / dir_.y) * dir_;
  const Vec3 b = base_ - base_.y * d;
  return Line3({b.x, Scalar(0), b.z}, {Scalar(0), Scalar(1), Scalar(0)});
}

std::string Line3::key() const {
  const Line3 c = canonical();
  return point_key(c.base_) + "|" + point_key(c.dir_);
}

std::string_view to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::point: return "point";
    case IntersectionKind::parallel: return "parallel";
    case IntersectionKind::skew: return "skew";
    case IntersectionKind::identical: return "identical";
  }
  return "?";
}

LineIntersection line_intersect(const Line3& l, const Line3& m) {
  const Vec3 n = cross(l.dir(), m.dir());
  const Vec3 w = m.base() - l.base();
  if (n.is_zero()) {
    if (cross(w, l.dir()).is_zero()) return {IntersectionKind::identical, std::nullopt};
    return {IntersectionKind::parallel, std::nullopt};
  }
  if (!dot(w, n).is_zero()) return {IntersectionKind::skew, std::nullopt};
  const Scalar s = dot(cross(w, m.dir()), n) / dot(n, n);
  return {IntersectionKind::point, l.at(s)};
}

Plane3 Plane3::make(Scalar A, Scalar B, Scalar C, Scalar D) {
  if (A.is_zero() && B.is_zero() && C.is_zero()) throw PreconditionError("plane normal is zero");
  return {std::move(A), std::move(B), std::move(C), std::move(D)};
}

bool Plane3::contains(const Line3& l) const {
  return contains(l.base()) && (A * l.dir().x + B * l.dir().y + C * l.dir().z).is_zero();
}

Plane3 Plane3::normalized() const {
  const Scalar& lead = !A.is_zero() ? A : (!B.is_zero() ? B : C);
  const Scalar inv = Scalar(1) / lead;
  return {A * inv, B * inv, C * inv, D * inv};
}

std::string Plane3::key() const {
  const Plane3 p = normalized();
  return scalar_key(p.A) + "," + scalar_key(p.B) + "," + scalar_key(p.C) + "," + scalar_key(p.D);
}

std::optional<Plane3> common_plane(const Line3& l, const Line3& m) {
  const LineIntersection hit = line_intersect(l, m);
  Vec3 normal;
  if (hit.kind == IntersectionKind::point) {
    normal = cross(l.dir(), m.dir());
  } else if (hit.kind == IntersectionKind::parallel) {
    normal = cross(l.dir(), m.base() - l.base());
  } else {
    return std::nullopt;
  }
  return Plane3::make(normal.x, normal.y, normal.z, -dot(normal, l.base())).normalized();
}

}  // namespace trapezoids
