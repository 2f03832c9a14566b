#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trapezoids/geometry.hpp"

namespace trapezoids {

enum class Degeneracy : std::uint8_t {
  none = 0,
  collinear = 1 << 0,        // all four endpoints on one line
  shared_endpoint = 1 << 1,  // an endpoint of one interval is an endpoint of the other
  reverse_pair = 1 << 2,     // the second interval is the reverse of the first
};

constexpr Degeneracy operator|(Degeneracy a, Degeneracy b) {
  return static_cast<Degeneracy>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr bool has(Degeneracy set, Degeneracy flag) {
  return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(flag)) != 0;
}

/// Which of the two equations of a pair condition hold for (i, j).
///
/// `left` pairs initial with initial and terminal with terminal endpoints;
/// `right` pairs each initial endpoint with the other interval's terminal one.
/// For every relation here, right(i, j) == left(i, reverse(j)).
struct PairRelation {
  bool left = false;
  bool right = false;
  Degeneracy degeneracy = Degeneracy::none;

  [[nodiscard]] int multiplicity() const { return int(left) + int(right); }
  [[nodiscard]] bool any() const { return left || right; }
  friend bool operator==(const PairRelation&, const PairRelation&) = default;
};

/// Parallel opposite sides: (a-a')(d-d') = (b-b')(c-c') or
/// (a-c')(d-b') = (c-a')(b-d'). Throws PreconditionError for i == j.
PairRelation trapezoid_relation(const Interval& i, const Interval& j);

/// Perpendicular diagonals: (b-b')(d-d') = -(a-a')(c-c') or
/// (b-d')(d-b') = -(a-c')(c-a').
PairRelation orthodiagonal_relation(const Interval& i, const Interval& j);

/// Slopes in ratio rho: (a-a')(d-d') = rho (b-b')(c-c') or
/// (a-c')(d-b') = rho (c-a')(b-d'). rho == 1 is the trapezoid relation.
PairRelation ratio_relation(const Interval& i, const Interval& j, const Scalar& rho);

enum class OrthodiagonalClass { quadrilateral, equation_only, none };
std::string_view to_string(OrthodiagonalClass c);

/// `quadrilateral` when an equation of the orthodiagonal relation holds and
/// the endpoints, in the cyclic order that equation implies, form a strictly
/// convex quadrilateral with i and j as opposite sides.
OrthodiagonalClass classify_orthodiagonal(const Interval& i, const Interval& j);

/// Vertex cycle of the convex quadrilateral when classify_orthodiagonal
/// returns `quadrilateral`: i.initial, i.terminal, then j's endpoints.
std::optional<std::array<Vec2, 4>> orthodiagonal_cycle(const Interval& i, const Interval& j);

enum class RelationKind { trapezoid, orthodiagonal, ratio };

struct Relation {
  RelationKind kind = RelationKind::trapezoid;
  Scalar rho = Scalar(1);

  static Relation trapezoid() { return {}; }
  static Relation orthodiagonal() { return {RelationKind::orthodiagonal, Scalar(1)}; }
  static Relation ratio(Scalar rho);

  [[nodiscard]] PairRelation operator()(const Interval& i, const Interval& j) const;
  [[nodiscard]] std::string name() const;
};

RelationKind parse_relation_kind(std::string_view text);

}  // namespace trapezoids
