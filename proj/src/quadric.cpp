#include "trapezoids/quadric.hpp"

#include <algorithm>

namespace trapezoids {

std::string_view to_string(QuadricClass c) {
  switch (c) {
    case QuadricClass::hyperboloid_one_sheet: return "hyperboloid-one-sheet";
    case QuadricClass::hyperbolic_paraboloid: return "hyperbolic-paraboloid";
    case QuadricClass::cone: return "cone";
    case QuadricClass::plane_pair: return "plane-pair";
    case QuadricClass::other_nondoubly_ruled: return "other-nondoubly-ruled";
    case QuadricClass::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

Matrix doubled(const std::array<Scalar, Quadric::kSize>& q) {
  const auto& [xx, yy, zz, xy, xz, yz, x, y, z, one] = q;
  Matrix m(4, 4);
  m(0, 0) = Scalar(2) * xx;
  m(1, 1) = Scalar(2) * yy;
  m(2, 2) = Scalar(2) * zz;
  m(3, 3) = Scalar(2) * one;
  m(0, 1) = m(1, 0) = xy;
  m(0, 2) = m(2, 0) = xz;
  m(1, 2) = m(2, 1) = yz;
  m(0, 3) = m(3, 0) = x;
  m(1, 3) = m(3, 1) = y;
  m(2, 3) = m(3, 2) = z;
  return m;
}

}  // namespace

QuadricClass classify_quadric(const std::array<Scalar, Quadric::kSize>& q) {
  if (std::all_of(q.begin(), q.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw PreconditionError("quadric coefficients are all zero");
  const Matrix full = doubled(q);
  Matrix block(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) block(r, c) = full(r, c);
  const Inertia form = symmetric_inertia(full);
  const Inertia quad = symmetric_inertia(block);
  if (quad.rank() == 0) return QuadricClass::degenerate;
  const bool quad_indefinite = quad.positive > 0 && quad.negative > 0;
  switch (form.rank()) {
    case 4:
      // Both doubly ruled quadrics have form signature (2,2); the quadratic
      // block separates the central from the parabolic one.
      if (form.positive == 2 && form.negative == 2 && quad_indefinite)
        return quad.rank() == 3 ? QuadricClass::hyperboloid_one_sheet : QuadricClass::hyperbolic_paraboloid;
      return QuadricClass::other_nondoubly_ruled;
    case 3:
      if (quad.rank() == 3) return quad_indefinite ? QuadricClass::cone : QuadricClass::degenerate;
      return QuadricClass::other_nondoubly_ruled;
    case 2:
      return (form.positive == 1 && form.negative == 1) ? QuadricClass::plane_pair : QuadricClass::degenerate;
    default:
      return QuadricClass::degenerate;
  }
}

Quadric::Quadric(std::array<Scalar, kSize> q) : q_(std::move(q)), class_(classify_quadric(q_)) {}

Scalar Quadric::eval(const Vec3& p) const {
  const auto& [xx, yy, zz, xy, xz, yz, x, y, z, one] = q_;
  return xx * p.x * p.x + yy * p.y * p.y + zz * p.z * p.z + xy * p.x * p.y + xz * p.x * p.z +
         yz * p.y * p.z + x * p.x + y * p.y + z * p.z + one;
}

std::array<std::array<Scalar, Quadric::kSize>, 3> containment_conditions(const Line3& l) {
  const Vec3& p = l.base();
  const Vec3& d = l.dir();
  return {{
      {p.x * p.x, p.y * p.y, p.z * p.z, p.x * p.y, p.x * p.z, p.y * p.z, p.x, p.y, p.z, Scalar(1)},
      {Scalar(2) * p.x * d.x, Scalar(2) * p.y * d.y, Scalar(2) * p.z * d.z, p.x * d.y + p.y * d.x,
       p.x * d.z + p.z * d.x, p.y * d.z + p.z * d.y, d.x, d.y, d.z, Scalar(0)},
      {d.x * d.x, d.y * d.y, d.z * d.z, d.x * d.y, d.x * d.z, d.y * d.z, Scalar(0), Scalar(0), Scalar(0),
       Scalar(0)},
  }};
}

std::array<Scalar, 3> Quadric::restrict_to(const Line3& l) const {
  const auto rows = containment_conditions(l);
  std::array<Scalar, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    Scalar acc(0);
    for (std::size_t c = 0; c < kSize; ++c) acc += rows[k][c] * q_[c];
    out[k] = acc;
  }
  return out;
}

Matrix Quadric::doubled_matrix() const { return doubled(q_); }

Quadric Quadric::normalized() const {
  const auto lead = std::find_if(q_.begin(), q_.end(), [](const Scalar& s) { return !s.is_zero(); });
  const Scalar inv = Scalar(1) / *lead;
  std::array<Scalar, kSize> out;
  for (std::size_t k = 0; k < kSize; ++k) out[k] = q_[k] * inv;
  return Quadric(out);
}

std::string Quadric::key() const {
  const Quadric n = normalized();
  std::string key;
  for (const Scalar& s : n.q_) {
    if (!key.empty()) key += ',';
    key += scalar_key(s);
  }
  return key;
}

bool line_on_quadric(const Quadric& q, const Line3& l) {
  const auto c = q.restrict_to(l);
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

QuadricFit quadric_through_lines(const Line3& l1, const Line3& l2, const Line3& l3) {
  Matrix m(9, Quadric::kSize);
  std::size_t row = 0;
  for (const Line3* l : {&l1, &l2, &l3}) {
    for (const auto& cond : containment_conditions(*l)) {
      for (std::size_t c = 0; c < Quadric::kSize; ++c) m(row, c) = cond[c];
      ++row;
    }
  }
  QuadricFit fit;
  const auto basis = nullspace(m);
  fit.nullspace_dimension = basis.size();
  if (basis.size() != 1) return fit;
  std::array<Scalar, Quadric::kSize> q;
  std::copy(basis[0].begin(), basis[0].end(), q.begin());
  fit.quadric = Quadric(q).normalized();
  return fit;
}

}  // namespace trapezoids
