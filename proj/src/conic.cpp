#include "trapezoids/conic.hpp"

#include <algorithm>
#include <cmath>

#include "trapezoids/linalg.hpp"

namespace trapezoids {

std::string_view to_string(ConicClass c) {
  switch (c) {
    case ConicClass::ellipse: return "ellipse";
    case ConicClass::parabola: return "parabola";
    case ConicClass::hyperbola: return "hyperbola";
    case ConicClass::line_pair: return "line-pair";
    case ConicClass::parallel_line_pair: return "parallel-line-pair";
    case ConicClass::double_line: return "double-line";
    case ConicClass::line: return "line";
    case ConicClass::point: return "point";
    case ConicClass::empty: return "empty";
  }
  return "?";
}

ConicClass classify_conic(const std::array<Scalar, 6>& q) {
  if (std::all_of(q.begin(), q.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw PreconditionError("conic coefficients are all zero");
  const auto& [a, b, c, d, e, f] = q;
  if (a.is_zero() && b.is_zero() && c.is_zero())
    return (d.is_zero() && e.is_zero()) ? ConicClass::empty : ConicClass::line;

  // 4x the symmetric matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]],
  // scaled to keep the arithmetic integral on integer input.
  const Scalar delta = Scalar(4) * a * c - b * b;  // -discriminant
  const Scalar det4 = Scalar(4) * a * c * f + b * e * d - a * e * e - c * d * d - f * b * b;  // 4 det
  if (!det4.is_zero()) {
    if (delta.sign() < 0) return ConicClass::hyperbola;
    if (delta.is_zero()) return ConicClass::parabola;
    return (a * det4).sign() < 0 ? ConicClass::ellipse : ConicClass::empty;
  }
  if (delta.sign() < 0) return ConicClass::line_pair;
  if (delta.sign() > 0) return ConicClass::point;
  // Parallel lines, a double line, or nothing: the sum of the 2x2 minors
  // that involve the constant term decides.
  const Scalar cofactors = (Scalar(4) * a * f - d * d) + (Scalar(4) * c * f - e * e);
  if (cofactors.sign() < 0) return ConicClass::parallel_line_pair;
  if (cofactors.is_zero()) return ConicClass::double_line;
  return ConicClass::empty;
}

Conic::Conic(std::array<Scalar, 6> q) : q_(std::move(q)), class_(classify_conic(q_)) {}

Scalar Conic::eval(const Vec2& p) const {
  return q_[0] * p.x * p.x + q_[1] * p.x * p.y + q_[2] * p.y * p.y + q_[3] * p.x + q_[4] * p.y + q_[5];
}

Conic Conic::normalized() const {
  const auto lead = std::find_if(q_.begin(), q_.end(), [](const Scalar& s) { return !s.is_zero(); });
  const Scalar inv = Scalar(1) / *lead;
  std::array<Scalar, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = q_[k] * inv;
  return Conic(out);
}

ConicFit fit_conic(std::span<const Vec2> points) {
  if (points.size() < 5) throw PreconditionError("conic fitting needs at least five points");
  Matrix m(points.size(), 6);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const Vec2& p = points[r];
    m(r, 0) = p.x * p.x;
    m(r, 1) = p.x * p.y;
    m(r, 2) = p.y * p.y;
    m(r, 3) = p.x;
    m(r, 4) = p.y;
    m(r, 5) = Scalar(1);
  }
  ConicFit fit;
  const auto basis = nullspace(m);
  fit.nullspace_dimension = basis.size();
  std::array<Scalar, 6> q;
  if (basis.size() == 1) {
    std::copy(basis[0].begin(), basis[0].end(), q.begin());
  } else if (basis.empty() && m.mode() == NumericMode::approximate) {
    const LeastSquaresDirection dir = smallest_singular_direction(m);
    std::copy(dir.vector.begin(), dir.vector.end(), q.begin());
  } else {
    return fit;
  }
  fit.conic = Conic(q).normalized();
  for (const Vec2& p : points) fit.residual = std::max(fit.residual, std::abs(fit.conic->eval(p).to_double()));
  return fit;
}

std::optional<Line2> fit_line(std::span<const Vec2> points) {
  if (points.size() < 2) return std::nullopt;
  const Vec2& p = points[0];
  const auto other = std::find_if(points.begin() + 1, points.end(), [&](const Vec2& q) { return !(q == p); });
  if (other == points.end()) return std::nullopt;
  const Line2 line = Line2::through(p, *other);
  for (const Vec2& q : points)
    if (!line.contains(q)) return std::nullopt;
  return line;
}

}  // namespace trapezoids
