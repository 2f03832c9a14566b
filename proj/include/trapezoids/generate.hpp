#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trapezoids/correspondence.hpp"
#include "trapezoids/quadric.hpp"

namespace trapezoids {

enum class Which { family1, family2, both };
Which parse_which(std::string_view text);

/// Generated intervals plus notes about dropped or merged members.
struct Family {
  std::vector<Interval> intervals;
  std::vector<std::string> warnings;
};

/// `count` distinct rational points of the unit circle from seeded
/// tan-half-angle parameters (exact), or seeded angles (approximate).
std::vector<PlanarRotation> circle_points(std::size_t count, std::uint64_t seed,
                                          NumericMode mode = NumericMode::exact);
/// `count` distinct nonzero seeded rationals (or doubles).
std::vector<Scalar> nonzero_samples(std::size_t count, std::uint64_t seed, NumericMode mode = NumericMode::exact);

/// First endpoint on y = m x + k1, second on y = m x + k2, one interval per
/// abscissa pair. The lines all pass through (k1, k2, -m).
Family gen_parallel_lines(const Scalar& m, const Scalar& k1, const Scalar& k2,
                          std::span<const std::pair<Scalar, Scalar>> abscissae);

/// Intervals with A a + B c + C = 0 and A b + B d + D = 0, i.e. lines in the
/// plane A x + B y + C z + D = 0. Samples are the free endpoints: initial
/// points when B != 0, terminal points otherwise.
Family gen_pencil(const Scalar& A, const Scalar& B, const Scalar& C, const Scalar& D, std::span<const Vec2> samples);

/// Rulings of x^2/A^2 + y^2/B^2 - z^2/C^2 = 1:
/// family 1 (A/C cos, A sin; B/C sin, -B cos), family 2 (A/C cos, A sin; -B/C sin, B cos).
Family gen_hyperboloid_rulings(const Scalar& A, const Scalar& B, const Scalar& C,
                               std::span<const PlanarRotation> angles, Which which);
Quadric hyperboloid_quadric(const Scalar& A, const Scalar& B, const Scalar& C);

/// Rulings of z = x^2/A^2 - y^2/B^2:
/// family 1 (A l/2, A/(2 l); B l/2, -B/(2 l)), family 2 (A l/2, A/(2 l); -B l/2, B/(2 l)).
Family gen_paraboloid_rulings(const Scalar& A, const Scalar& B, std::span<const Scalar> lambdas, Which which);
Quadric paraboloid_quadric(const Scalar& A, const Scalar& B);

struct SubcaseIIFamilies {
  Family family1;  // (t, t; 1/t, u/t + v)
  Family family2;  // (t, u t; 1/t, v + 1/t)
  bool cone = false;  // u == 1: the families coincide and the surface is a cone
};

/// Both families lie on x y = z^2 + z (u + 1) + u + v x.
SubcaseIIFamilies gen_subcase_ii(const Scalar& u, const Scalar& v, std::span<const Scalar> ts);
Quadric subcase_ii_quadric(const Scalar& u, const Scalar& v);

/// Moves every member's line by `motion`. Rotations about the x-axis combined
/// with translations use the closed-form induced maps; other rotations go
/// through the line. Members whose image is parallel to the xy-plane are
/// dropped with a warning.
Family gen_transformed(std::span<const Interval> family, const RigidMotion3& motion);

/// Pulls lines back through the inverse of L-perp (or L-rho); lines parallel to
/// the xy-plane are dropped with a warning.
Family gen_perp_pullback(std::span<const Line3> lines);
Family gen_ratio_pullback(std::span<const Line3> lines, const Scalar& rho);

/// Removes repeated intervals in place, appending a warning per removal.
void dedupe(Family& family);

}  // namespace trapezoids
