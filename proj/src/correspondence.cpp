#include "trapezoids/correspondence.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>

namespace trapezoids {

PlanarRotation PlanarRotation::make(Scalar cos, Scalar sin) {
  if (!(cos * cos + sin * sin == Scalar(1))) throw PreconditionError("rotation needs cos^2 + sin^2 = 1");
  return {std::move(cos), std::move(sin)};
}

PlanarRotation PlanarRotation::from_tan_half(const Scalar& t) {
  const Scalar denom = Scalar(1) + t * t;
  return {(Scalar(1) - t * t) / denom, Scalar(2) * t / denom};
}

PlanarRotation PlanarRotation::from_angle(double radians) {
  return {Scalar::approx(std::cos(radians)), Scalar::approx(std::sin(radians))};
}

Interval PlanarRotation::apply(const Interval& i) const {
  const Vec2 p = apply(i.initial());
  const Vec2 q = apply(i.terminal());
  return {p.x, p.y, q.x, q.y};
}

Line2 PlanarRotation::apply(const Line2& l) const {
  // n . x + gamma = 0 with the normal rotated alongside the points.
  const Vec2 n = apply(Vec2{l.alpha, l.beta});
  return {n.x, n.y, l.gamma};
}

RigidMotion3 RigidMotion3::make(Matrix3 rotation, Vec3 translation) {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Scalar acc(0);
      for (std::size_t k = 0; k < 3; ++k) acc += rotation[r][k] * rotation[c][k];
      if (!(acc == Scalar(r == c ? 1 : 0))) throw PreconditionError("rotation matrix is not orthogonal");
    }
  }
  const auto& m = rotation;
  const Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (!(det == Scalar(1))) throw PreconditionError("rotation matrix must have determinant 1");
  return {std::move(rotation), std::move(translation)};
}

RigidMotion3 RigidMotion3::translate(Scalar p, Scalar q, Scalar r) {
  RigidMotion3 m;
  m.translation = {std::move(p), std::move(q), std::move(r)};
  return m;
}

RigidMotion3 RigidMotion3::rotate_x(const PlanarRotation& a) {
  RigidMotion3 m;
  m.rotation = {{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), a.cos, -a.sin}, {Scalar(0), a.sin, a.cos}}};
  return m;
}

RigidMotion3 RigidMotion3::rotate_z(const PlanarRotation& a) {
  RigidMotion3 m;
  m.rotation = {{{a.cos, -a.sin, Scalar(0)}, {a.sin, a.cos, Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}};
  return m;
}

RigidMotion3 RigidMotion3::compose(const RigidMotion3& other) const {
  RigidMotion3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Scalar acc(0);
      for (std::size_t k = 0; k < 3; ++k) acc += rotation[r][k] * other.rotation[k][c];
      out.rotation[r][c] = acc;
    }
  }
  out.translation = apply(other.translation);
  return out;
}

Vec3 RigidMotion3::apply_vector(const Vec3& v) const {
  const auto row = [&](std::size_t r) { return rotation[r][0] * v.x + rotation[r][1] * v.y + rotation[r][2] * v.z; };
  return {row(0), row(1), row(2)};
}

std::optional<PlanarRotation> RigidMotion3::x_axis_angle() const {
  const auto& m = rotation;
  const bool fixes_x = m[0][0] == Scalar(1) && m[0][1].is_zero() && m[0][2].is_zero() && m[1][0].is_zero() &&
                       m[2][0].is_zero();
  if (!fixes_x || !(m[1][1] == m[2][2]) || !(m[1][2] == -m[2][1])) return std::nullopt;
  return PlanarRotation{m[1][1], m[2][1]};
}

Line3 to_line(const Interval& i) { return Line3({i.b, i.d, Scalar(0)}, {i.a, i.c, Scalar(1)}); }

namespace {

// Graph form (x0, y0, 0) + t (dx, dy, 1) of a line crossing z = 0.
std::array<Scalar, 4> graph_coordinates(const Line3& l) {
  if (l.dir().z.is_zero()) throw PreconditionError("line parallel to xy-plane has no interval");
  const Line3 c = l.canonical();
  return {c.base().x, c.base().y, c.dir().x, c.dir().y};
}

}  // namespace

Interval from_line(const Line3& l) {
  const auto [x0, y0, dx, dy] = graph_coordinates(l);
  return {dx, x0, dy, y0};
}

Line3 to_line_perp(const Interval& i) { return Line3({i.b, -i.a, Scalar(0)}, {i.c, i.d, Scalar(1)}); }

Interval from_line_perp(const Line3& l) {
  const auto [x0, y0, dx, dy] = graph_coordinates(l);
  return {-y0, x0, dx, dy};
}

Line3 to_line_ratio(const Interval& i, const Scalar& rho) {
  if (rho.is_zero()) throw PreconditionError("slope ratio rho must be nonzero");
  return Line3({i.b, i.d, Scalar(0)}, {i.a, rho * i.c, Scalar(1)});
}

Interval from_line_ratio(const Line3& l, const Scalar& rho) {
  if (rho.is_zero()) throw PreconditionError("slope ratio rho must be nonzero");
  const auto [x0, y0, dx, dy] = graph_coordinates(l);
  return {dx, x0, dy / rho, y0};
}

Line3 line_for(const Relation& relation, const Interval& i) {
  switch (relation.kind) {
    case RelationKind::trapezoid: return to_line(i);
    case RelationKind::orthodiagonal: return to_line_perp(i);
    case RelationKind::ratio: return to_line_ratio(i, relation.rho);
  }
  return to_line(i);
}

Interval interval_for(const Relation& relation, const Line3& l) {
  switch (relation.kind) {
    case RelationKind::trapezoid: return from_line(l);
    case RelationKind::orthodiagonal: return from_line_perp(l);
    case RelationKind::ratio: return from_line_ratio(l, relation.rho);
  }
  return from_line(l);
}

void require_distinct(std::span<const Interval> intervals) {
  const bool exact = intervals.empty() || intervals.front().a.is_exact();
  if (exact) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      auto [it, inserted] = seen.emplace(intervals[k].key(), k);
      if (!inserted)
        throw PreconditionError("duplicate interval (" + intervals[k].key() + ") at indices " +
                                std::to_string(it->second) + " and " + std::to_string(k));
    }
    return;
  }
  for (std::size_t k = 0; k < intervals.size(); ++k)
    for (std::size_t m = k + 1; m < intervals.size(); ++m)
      if (intervals[k] == intervals[m])
        throw PreconditionError("duplicate interval (" + intervals[k].key() + ") at indices " + std::to_string(k) +
                                " and " + std::to_string(m));
}

std::vector<Line3> line_set(std::span<const Interval> intervals, const Relation& relation) {
  require_distinct(intervals);
  std::vector<Line3> lines;
  lines.reserve(2 * intervals.size());
  for (const Interval& i : intervals) lines.push_back(line_for(relation, i));
  for (const Interval& i : intervals) lines.push_back(line_for(relation, reverse(i)));
  return lines;
}

std::optional<std::pair<std::size_t, std::size_t>> find_exceptional_pair(std::span<const Interval> intervals) {
  const std::size_t n = intervals.size();
  std::vector<Interval> family(intervals.begin(), intervals.end());
  for (const Interval& i : intervals) family.push_back(reverse(i));
  const bool exact = n == 0 || intervals.front().a.is_exact();
  if (exact) {
    std::map<std::string, std::size_t> by_direction;  // (a, c) -> first member
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Interval& f = family[k];
      auto [it, inserted] = by_direction.emplace(scalar_key(f.a) + "," + scalar_key(f.c), k);
      if (inserted) continue;
      // Members sharing (a, c) must share (b, d) as well, so comparing with
      // the first one is enough.
      const Interval& g = family[it->second];
      if (!(f.b == g.b && f.d == g.d)) return std::pair{it->second, k};
    }
    return std::nullopt;
  }
  for (std::size_t k = 0; k < family.size(); ++k)
    for (std::size_t m = k + 1; m < family.size(); ++m) {
      const Interval& f = family[k];
      const Interval& g = family[m];
      if (f.a == g.a && f.c == g.c && !(f.b == g.b && f.d == g.d)) return std::pair{k, m};
    }
  return std::nullopt;
}

I2LReport verify_i2l(std::span<const Interval> intervals) {
  require_distinct(intervals);
  if (const auto pair = find_exceptional_pair(intervals))
    throw PreconditionError("exceptional parallel pair (members " + std::to_string(pair->first) + ", " +
                            std::to_string(pair->second) + "); apply generic_rotation first");
  I2LReport report;
  report.intervals = intervals.size();
  for (std::size_t k = 0; k < intervals.size(); ++k)
    for (std::size_t m = k + 1; m < intervals.size(); ++m)
      report.trapezoids += static_cast<std::size_t>(trapezoid_relation(intervals[k], intervals[m]).multiplicity());
  const std::vector<Line3> lines = line_set(intervals);
  for (std::size_t k = 0; k < lines.size(); ++k)
    for (std::size_t m = k + 1; m < lines.size(); ++m) {
      const IntersectionKind kind = line_intersect(lines[k], lines[m]).kind;
      if (kind == IntersectionKind::point || kind == IntersectionKind::identical) ++report.intersecting_pairs;
    }
  report.holds = 2 * report.trapezoids + report.intervals == report.intersecting_pairs;
  return report;
}

RotatedSet generic_rotation(std::span<const Interval> intervals, std::uint64_t seed) {
  RotatedSet out{{intervals.begin(), intervals.end()}, PlanarRotation::identity()};
  if (!find_exceptional_pair(intervals)) return out;
  const bool exact = intervals.front().a.is_exact();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(1, 97);
  std::uniform_int_distribution<long> denominator(1, 89);
  // Only finitely many angles recreate an exceptional pair, so this loop ends
  // after very few draws in practice.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const long p = numerator(rng);
    const long q = denominator(rng);
    const Scalar t = exact ? Scalar::exact(p, q) : Scalar::approx(double(p) / double(q));
    const PlanarRotation rot = PlanarRotation::from_tan_half(t);
    std::vector<Interval> rotated;
    rotated.reserve(intervals.size());
    for (const Interval& i : intervals) rotated.push_back(rot.apply(i));
    if (!find_exceptional_pair(rotated)) return {std::move(rotated), rot};
  }
  throw PreconditionError("no generic rotation found");
}

Interval translate_action(const Interval& i, const Scalar& p, const Scalar& q, const Scalar& r) {
  return {i.a, i.b + p - r * i.a, i.c, i.d + q - r * i.c};
}

Interval rotate_x_action(const Interval& i, const PlanarRotation& angle) {
  const Scalar& s = angle.sin;
  const Scalar& c = angle.cos;
  const Scalar denom = i.c * s + c;
  if (denom.is_zero()) throw PreconditionError("image line parallel to xy-plane");
  return {i.a / denom, ((i.b * i.c - i.a * i.d) * s + i.b * c) / denom, (i.c * c - s) / denom, i.d / denom};
}

Interval transform_interval(const Interval& i, const RigidMotion3& motion) {
  return from_line(motion.apply(to_line(i)));
}

}  // namespace trapezoids
