#include "trapezoids/relations.hpp"

namespace trapezoids {

namespace {

void require_distinct(const Interval& i, const Interval& j) {
  if (i == j) throw PreconditionError("pair relation needs two distinct intervals, got (" + i.key() + ") twice");
}

Degeneracy degeneracy_of(const Interval& i, const Interval& j) {
  Degeneracy flags = Degeneracy::none;
  const Vec2 p1 = i.initial(), p2 = i.terminal(), q1 = j.initial(), q2 = j.terminal();
  if (orientation(p1, p2, q1).is_zero() && orientation(p1, p2, q2).is_zero()) flags = flags | Degeneracy::collinear;
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) flags = flags | Degeneracy::shared_endpoint;
  if (j == reverse(i)) flags = flags | Degeneracy::reverse_pair;
  return flags;
}

bool strictly_convex(const std::array<Vec2, 4>& v) {
  int sign = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const int s = orientation(v[k], v[(k + 1) % 4], v[(k + 2) % 4]).sign();
    if (s == 0) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

}  // namespace

PairRelation trapezoid_relation(const Interval& i, const Interval& j) {
  require_distinct(i, j);
  PairRelation r;
  r.left = (i.a - j.a) * (i.d - j.d) == (i.b - j.b) * (i.c - j.c);
  r.right = (i.a - j.c) * (i.d - j.b) == (i.c - j.a) * (i.b - j.d);
  r.degeneracy = degeneracy_of(i, j);
  return r;
}

PairRelation orthodiagonal_relation(const Interval& i, const Interval& j) {
  require_distinct(i, j);
  PairRelation r;
  r.left = (i.b - j.b) * (i.d - j.d) == -((i.a - j.a) * (i.c - j.c));
  r.right = (i.b - j.d) * (i.d - j.b) == -((i.a - j.c) * (i.c - j.a));
  r.degeneracy = degeneracy_of(i, j);
  return r;
}

PairRelation ratio_relation(const Interval& i, const Interval& j, const Scalar& rho) {
  if (rho.is_zero()) throw PreconditionError("slope ratio rho must be nonzero");
  require_distinct(i, j);
  PairRelation r;
  r.left = (i.a - j.a) * (i.d - j.d) == rho * (i.b - j.b) * (i.c - j.c);
  r.right = (i.a - j.c) * (i.d - j.b) == rho * (i.c - j.a) * (i.b - j.d);
  r.degeneracy = degeneracy_of(i, j);
  return r;
}

std::string_view to_string(OrthodiagonalClass c) {
  switch (c) {
    case OrthodiagonalClass::quadrilateral: return "orthodiagonal-quadrilateral";
    case OrthodiagonalClass::equation_only: return "equation-only";
    case OrthodiagonalClass::none: return "none";
  }
  return "?";
}

std::optional<std::array<Vec2, 4>> orthodiagonal_cycle(const Interval& i, const Interval& j) {
  const PairRelation r = orthodiagonal_relation(i, j);
  // left: diagonals (a,b)-(a',b') and (c,d)-(c',d'), so the cycle runs
  // i.initial, i.terminal, j.initial, j.terminal; right swaps j's endpoints.
  if (r.left) {
    std::array<Vec2, 4> cycle{i.initial(), i.terminal(), j.initial(), j.terminal()};
    if (strictly_convex(cycle)) return cycle;
  }
  if (r.right) {
    std::array<Vec2, 4> cycle{i.initial(), i.terminal(), j.terminal(), j.initial()};
    if (strictly_convex(cycle)) return cycle;
  }
  return std::nullopt;
}

OrthodiagonalClass classify_orthodiagonal(const Interval& i, const Interval& j) {
  const PairRelation r = orthodiagonal_relation(i, j);
  if (!r.any()) return OrthodiagonalClass::none;
  return orthodiagonal_cycle(i, j) ? OrthodiagonalClass::quadrilateral : OrthodiagonalClass::equation_only;
}

Relation Relation::ratio(Scalar rho) {
  if (rho.is_zero()) throw PreconditionError("slope ratio rho must be nonzero");
  return {RelationKind::ratio, std::move(rho)};
}

PairRelation Relation::operator()(const Interval& i, const Interval& j) const {
  switch (kind) {
    case RelationKind::trapezoid: return trapezoid_relation(i, j);
    case RelationKind::orthodiagonal: return orthodiagonal_relation(i, j);
    case RelationKind::ratio: return ratio_relation(i, j, rho);
  }
  return {};
}

std::string Relation::name() const {
  switch (kind) {
    case RelationKind::trapezoid: return "trapezoid";
    case RelationKind::orthodiagonal: return "orthodiagonal";
    case RelationKind::ratio: return "ratio";
  }
  return "?";
}

RelationKind parse_relation_kind(std::string_view text) {
  if (text == "trapezoid") return RelationKind::trapezoid;
  if (text == "orthodiagonal") return RelationKind::orthodiagonal;
  if (text == "ratio") return RelationKind::ratio;
  throw PreconditionError("unknown relation '" + std::string(text) + "'");
}

}  // namespace trapezoids
