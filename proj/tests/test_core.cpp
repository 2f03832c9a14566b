#include <gtest/gtest.h>

#include "support.hpp"
#include "trapezoids/conic.hpp"
#include "trapezoids/linalg.hpp"
#include "trapezoids/quadric.hpp"
#include "trapezoids/relations.hpp"

using namespace trapezoids;
using namespace trapezoids::testing;

TEST(Scalar, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Q("3/6").str(), "1/2");
  EXPECT_EQ(Q("-4").str(), "-4");
  EXPECT_EQ(Q("0.125").str(), "1/8");
  EXPECT_EQ(Q("1.5e2").str(), "150");
  EXPECT_THROW(Q("1/0"), PreconditionError);
  EXPECT_THROW(Q("abc"), PreconditionError);
}

TEST(Scalar, LiteralsAdoptTheOtherOperandsMode) {
  EXPECT_TRUE((Q(1, 3) + Scalar(1)).is_exact());
  EXPECT_FALSE((F(0.5) * Scalar(2)).is_exact());
}

TEST(Scalar, MixingModesThrows) {
  EXPECT_THROW(Q(1, 2) + F(0.5), ModeMismatch);
  EXPECT_THROW((void)(Q(1, 2) == F(0.5)), ModeMismatch);
}

TEST(Scalar, ApproximateEqualityIsRelative) {
  EXPECT_TRUE(F(1e12) == F(1e12 + 100.0));
  EXPECT_FALSE(F(1.0) == F(1.0 + 1e-6));
  EXPECT_TRUE(F(1e-12).is_zero());
  EXPECT_EQ(Q(-2, 3).sign(), -1);
}

TEST(Interval, ReverseExamples) {
  EXPECT_EQ(reverse(I(0, 0, 1, 2)), I(1, 2, 0, 0));
  EXPECT_EQ(reverse(I("1/2", "-3", "1/2", "5")), I("1/2", "5", "1/2", "-3"));
  const Interval i = I(3, -1, 4, 7);
  EXPECT_EQ(reverse(reverse(i)), i);
}

TEST(Interval, ZeroLengthRejected) { EXPECT_THROW(Interval::make(Q(1), Q(2), Q(1), Q(2)), PreconditionError); }

TEST(TrapezoidRelation, SpecExamples) {
  PairRelation r = trapezoid_relation(I(0, 0, 1, 1), I(1, 1, 2, 2));
  EXPECT_TRUE(r.left && r.right);
  EXPECT_TRUE(has(r.degeneracy, Degeneracy::collinear));
  EXPECT_TRUE(has(r.degeneracy, Degeneracy::shared_endpoint));

  r = trapezoid_relation(I(0, 0, 1, 1), I(1, 0, 0, 1));
  EXPECT_TRUE(r.left && r.right);
  EXPECT_FALSE(has(r.degeneracy, Degeneracy::collinear));

  r = trapezoid_relation(I(0, 0, 1, 2), I(2, 1, 3, 3));
  EXPECT_TRUE(r.left);
  EXPECT_FALSE(r.right);
  EXPECT_EQ(r.multiplicity(), 1);

  r = trapezoid_relation(I(0, 0, 1, 0), I(0, 1, 2, 3));
  EXPECT_FALSE(r.any());
}

TEST(TrapezoidRelation, ReversePairAlwaysSatisfiesLeft) {
  const Interval i = I(2, -3, 5, 1);
  const PairRelation r = trapezoid_relation(i, reverse(i));
  EXPECT_TRUE(r.left);
  EXPECT_TRUE(has(r.degeneracy, Degeneracy::reverse_pair));
}

TEST(TrapezoidRelation, IdenticalIntervalsThrow) {
  EXPECT_THROW(trapezoid_relation(I(0, 0, 1, 1), I(0, 0, 1, 1)), PreconditionError);
}

TEST(OrthodiagonalRelation, SpecExamples) {
  PairRelation r = orthodiagonal_relation(I(0, 0, 1, 0), I(1, 1, 0, 1));
  EXPECT_TRUE(r.left);

  r = orthodiagonal_relation(I("0", "0", "3/2", "3"), I("3/2", "3", "3", "0"));
  EXPECT_TRUE(r.right);
  EXPECT_TRUE(has(r.degeneracy, Degeneracy::shared_endpoint));

  r = orthodiagonal_relation(I(0, 0, 1, 0), I(2, 1, 3, 1));
  EXPECT_FALSE(r.any());
  EXPECT_THROW(orthodiagonal_relation(I(0, 0, 1, 0), I(0, 0, 1, 0)), PreconditionError);
}

TEST(ClassifyOrthodiagonal, SpecExamples) {
  EXPECT_EQ(classify_orthodiagonal(I(0, 0, 1, 0), I(1, 1, 0, 1)), OrthodiagonalClass::quadrilateral);
  EXPECT_EQ(classify_orthodiagonal(I("0", "0", "3/2", "3"), I("3/2", "3", "3", "0")), OrthodiagonalClass::equation_only);
  EXPECT_EQ(classify_orthodiagonal(I(0, 0, 1, 0), I(2, 2, 3, 3)), OrthodiagonalClass::none);
}

TEST(ClassifyOrthodiagonal, RightPairingQuadrilateral) {
  // Same square with the second side traversed the other way.
  EXPECT_EQ(classify_orthodiagonal(I(0, 0, 1, 0), I(0, 1, 1, 1)), OrthodiagonalClass::quadrilateral);
  EXPECT_TRUE(orthodiagonal_relation(I(0, 0, 1, 0), I(0, 1, 1, 1)).right);
}

TEST(RatioRelation, SpecExamples) {
  PairRelation r = ratio_relation(I(0, 0, 1, 1), I(1, 2, 3, 4), Q(3, 4));
  EXPECT_TRUE(r.left);
  r = ratio_relation(I(0, 0, 1, 2), I(2, 1, 3, 3), Q(2));
  EXPECT_FALSE(r.any());
  EXPECT_THROW(ratio_relation(I(0, 0, 1, 2), I(2, 1, 3, 3), Q(0)), PreconditionError);
  EXPECT_EQ(ratio_relation(I(0, 0, 1, 2), I(2, 1, 3, 3), Q(1)), trapezoid_relation(I(0, 0, 1, 2), I(2, 1, 3, 3)));
}

TEST(RatioRelation, RightEquationIsLeftWithReversedPartner) {
  // (0,0;1,1) vs (4,3;2,1): right holds for rho = 3/4, the reversed pairing of
  // the left example above.
  const PairRelation r = ratio_relation(I(0, 0, 1, 1), I(3, 4, 1, 2), Q(3, 4));
  EXPECT_TRUE(r.right);
  EXPECT_FALSE(r.left);
}

TEST(LineIntersect, SpecExamples) {
  const Scalar o(0), one(1);
  LineIntersection hit = line_intersect(Line3({Q(0), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}),
                                        Line3({Q(1), Q(0), Q(0)}, {Q(1), Q(0), Q(1)}));
  ASSERT_EQ(hit.kind, IntersectionKind::point);
  EXPECT_EQ(*hit.point, P3(Q(0), Q(0), Q(-1)));

  hit = line_intersect(Line3({Q(0), Q(2), Q(0)}, {Q(0), Q(1), Q(1)}), Line3({Q(2), Q(0), Q(0)}, {Q(1), Q(0), Q(1)}));
  ASSERT_EQ(hit.kind, IntersectionKind::point);
  EXPECT_EQ(*hit.point, P3(Q(0), Q(0), Q(-2)));

  hit = line_intersect(Line3({Q(0), Q(0), Q(0)}, {Q(1), Q(1), Q(1)}), Line3({Q(1), Q(0), Q(0)}, {Q(1), Q(1), Q(1)}));
  EXPECT_EQ(hit.kind, IntersectionKind::parallel);

  hit = line_intersect(Line3({Q(0), Q(0), Q(0)}, {Q(1), Q(1), Q(1)}), Line3({Q(2), Q(2), Q(2)}, {Q(-3), Q(-3), Q(-3)}));
  EXPECT_EQ(hit.kind, IntersectionKind::identical);

  hit = line_intersect(Line3({Q(0), Q(0), Q(0)}, {Q(1), Q(0), Q(0)}), Line3({Q(0), Q(1), Q(1)}, {Q(0), Q(1), Q(0)}));
  EXPECT_EQ(hit.kind, IntersectionKind::skew);
}

TEST(Line3, CanonicalKeysMatchForEqualLines) {
  const Line3 l({Q(0), Q(0), Q(5)}, {Q(2), Q(4), Q(2)});
  const Line3 m({Q(-1), Q(-2), Q(4)}, {Q(-1), Q(-2), Q(-1)});
  EXPECT_EQ(l.key(), m.key());
  const Line3 h({Q(0), Q(0), Q(3)}, {Q(2), Q(1), Q(0)});
  const Line3 h2({Q(4), Q(2), Q(3)}, {Q(-4), Q(-2), Q(0)});
  EXPECT_EQ(h.key(), h2.key());
}

TEST(Conic, ClassifySpecExamples) {
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(1), Q(0), Q(0), Q(-1)}), ConicClass::ellipse);
  EXPECT_EQ(classify_conic({Q(0), Q(1), Q(0), Q(0), Q(0), Q(-1)}), ConicClass::hyperbola);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(-1), Q(0), Q(0), Q(0)}), ConicClass::line_pair);
}

TEST(Conic, ClassifyDegenerateAndParabolic) {
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(0), Q(0), Q(-1), Q(0)}), ConicClass::parabola);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(0), Q(0), Q(0), Q(-1)}), ConicClass::parallel_line_pair);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)}), ConicClass::double_line);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(0), Q(0), Q(0), Q(1)}), ConicClass::empty);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(1), Q(0), Q(0), Q(0)}), ConicClass::point);
  EXPECT_EQ(classify_conic({Q(1), Q(0), Q(1), Q(0), Q(0), Q(1)}), ConicClass::empty);
  EXPECT_EQ(classify_conic({Q(0), Q(0), Q(0), Q(1), Q(1), Q(-1)}), ConicClass::line);
  EXPECT_THROW(Conic({Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)}), PreconditionError);
}

TEST(Conic, EvalAndContains) {
  const Conic circle({Q(1), Q(0), Q(1), Q(0), Q(0), Q(-1)});
  EXPECT_TRUE(circle.contains({Q(3, 5), Q(4, 5)}));
  EXPECT_EQ(circle.eval({Q(1), Q(1)}), Q(1));
}

TEST(Quadric, ClassifySpecExamples) {
  const Scalar z(0);
  EXPECT_EQ(classify_quadric({Q(1), Q(1), Q(-1), z, z, z, z, z, z, Q(-1)}), QuadricClass::hyperboloid_one_sheet);
  EXPECT_EQ(classify_quadric({Q(1), Q(-1), z, z, z, z, z, z, Q(-1), z}), QuadricClass::hyperbolic_paraboloid);
}

TEST(Quadric, ClassifyOtherTypes) {
  const Scalar z(0);
  EXPECT_EQ(classify_quadric({Q(1), Q(1), Q(-1), z, z, z, z, z, z, z}), QuadricClass::cone);
  EXPECT_EQ(classify_quadric({Q(1), Q(1), Q(1), z, z, z, z, z, z, Q(-1)}), QuadricClass::other_nondoubly_ruled);
  EXPECT_EQ(classify_quadric({Q(1), Q(1), Q(-1), z, z, z, z, z, z, Q(1)}), QuadricClass::other_nondoubly_ruled);
  EXPECT_EQ(classify_quadric({Q(1), Q(1), z, z, z, z, z, z, Q(-1), z}), QuadricClass::other_nondoubly_ruled);
  EXPECT_EQ(classify_quadric({z, z, z, Q(1), z, z, z, z, z, z}), QuadricClass::plane_pair);
  EXPECT_EQ(classify_quadric({Q(1), z, z, z, z, z, z, z, z, Q(-1)}), QuadricClass::plane_pair);
  EXPECT_EQ(classify_quadric({Q(1), z, z, z, z, z, z, z, z, z}), QuadricClass::degenerate);
  // x y - z^2 - x + 1: the Subcase (ii) surface with u = -1, v = 1.
  EXPECT_EQ(classify_quadric({z, z, Q(-1), Q(1), z, z, Q(-1), z, z, Q(1)}), QuadricClass::hyperboloid_one_sheet);
}

TEST(Quadric, LineOnParaboloid) {
  const Scalar z(0);
  const Quadric q({Q(1), Q(-1, 4), z, z, z, z, z, z, Q(-1), z});  // z = x^2 - y^2/4
  EXPECT_TRUE(line_on_quadric(q, Line3({Q(1, 2), Q(-1), Q(0)}, {Q(1, 2), Q(1), Q(1)})));
  EXPECT_FALSE(line_on_quadric(q, Line3({Q(1, 2), Q(-1), Q(0)}, {Q(1, 2), Q(1), Q(2)})));
  EXPECT_EQ(q.eval({Q(2), Q(2), Q(3)}), Q(0));
}

TEST(Linalg, NullspaceAndRank) {
  Matrix m(2, 3);
  m(0, 0) = Q(1); m(0, 1) = Q(2); m(0, 2) = Q(3);
  m(1, 0) = Q(2); m(1, 1) = Q(4); m(1, 2) = Q(6);
  EXPECT_EQ(rank(m), 1u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE((v[0] + Q(2) * v[1] + Q(3) * v[2]).is_zero());
}

TEST(Linalg, InertiaFromPrincipalMinors) {
  Matrix m(3, 3);
  m(0, 0) = Q(2); m(1, 1) = Q(-3); m(2, 2) = Q(0);
  m(0, 1) = m(1, 0) = Q(0);
  const Inertia in = symmetric_inertia(m);
  EXPECT_EQ(in, (Inertia{1, 1, 1}));
}

TEST(Linalg, ApproximateNullspace) {
  Matrix m(2, 3);
  m(0, 0) = F(1); m(0, 1) = F(2); m(0, 2) = F(3);
  m(1, 0) = F(0); m(1, 1) = F(1); m(1, 2) = F(1);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE((ns[0][0] + F(2) * ns[0][1] + F(3) * ns[0][2]).is_zero());
}
