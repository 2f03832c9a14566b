#include <gtest/gtest.h>

#include "support.hpp"
#include "trapezoids/correspondence.hpp"

using namespace trapezoids;
using namespace trapezoids::testing;

namespace {

void expect_line(const Line3& l, const Vec3& base, const Vec3& dir) {
  EXPECT_EQ(l.base(), base);
  EXPECT_EQ(l.dir(), dir);
}

}  // namespace

TEST(ToLine, SpecExamples) {
  expect_line(to_line(I(1, 2, 3, 4)), P3(Q(2), Q(4), Q(0)), P3(Q(1), Q(3), Q(1)));
  expect_line(to_line(I(0, 0, 1, 2)), P3(Q(0), Q(2), Q(0)), P3(Q(0), Q(1), Q(1)));
  expect_line(to_line(I(1, 0, 0, -1)), P3(Q(0), Q(-1), Q(0)), P3(Q(1), Q(0), Q(1)));
}

TEST(FromLine, SpecExamples) {
  EXPECT_EQ(from_line(Line3({Q(2), Q(4), Q(0)}, {Q(1), Q(3), Q(1)})), I(1, 2, 3, 4));
  EXPECT_EQ(from_line(Line3({Q(0), Q(0), Q(5)}, {Q(2), Q(4), Q(2)})), I(1, -5, 2, -10));
  EXPECT_THROW(from_line(Line3({Q(0), Q(0), Q(0)}, {Q(1), Q(1), Q(0)})), PreconditionError);
}

TEST(PerpAndRatioMaps, SpecExamples) {
  expect_line(to_line_perp(I(1, 2, 3, 4)), P3(Q(2), Q(-1), Q(0)), P3(Q(3), Q(4), Q(1)));
  expect_line(to_line_ratio(I(1, 2, 3, 4), Q(2)), P3(Q(2), Q(4), Q(0)), P3(Q(1), Q(6), Q(1)));
  EXPECT_EQ(to_line_ratio(I(5, -1, 2, 7), Q(1)).key(), to_line(I(5, -1, 2, 7)).key());
  EXPECT_EQ(from_line_perp(to_line_perp(I(1, 2, 3, 4))), I(1, 2, 3, 4));
  EXPECT_EQ(from_line_ratio(to_line_ratio(I(1, 2, 3, 4), Q(2)), Q(2)), I(1, 2, 3, 4));
  EXPECT_THROW(to_line_ratio(I(1, 2, 3, 4), Q(0)), PreconditionError);
}

TEST(LineSet, SpecExamples) {
  const std::vector<Interval> one{I(0, 0, 1, 2)};
  const auto lines = line_set(one);
  ASSERT_EQ(lines.size(), 2u);
  expect_line(lines[0], P3(Q(0), Q(2), Q(0)), P3(Q(0), Q(1), Q(1)));
  expect_line(lines[1], P3(Q(2), Q(0), Q(0)), P3(Q(1), Q(0), Q(1)));

  const std::vector<Interval> two{I(0, 0, 1, 2), I(2, 1, 3, 3)};
  const auto four = line_set(two);
  ASSERT_EQ(four.size(), 4u);
  int meeting = 0;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t m = k + 1; m < 4; ++m) meeting += line_intersect(four[k], four[m]).kind == IntersectionKind::point;
  EXPECT_EQ(meeting, 4);
}

TEST(LineSet, DuplicatesRejected) {
  const std::vector<Interval> dup{I(0, 0, 1, 2), I(0, 0, 1, 2)};
  EXPECT_THROW(line_set(dup), PreconditionError);
}

TEST(VerifyI2L, SpecExamples) {
  I2LReport r = verify_i2l(std::vector{I(0, 0, 1, 2)});
  EXPECT_EQ(r.intervals, 1u);
  EXPECT_EQ(r.trapezoids, 0u);
  EXPECT_EQ(r.intersecting_pairs, 1u);
  EXPECT_TRUE(r.holds);

  r = verify_i2l(std::vector{I(0, 0, 1, 2), I(2, 1, 3, 3)});
  EXPECT_EQ(r.trapezoids, 1u);
  EXPECT_EQ(r.intersecting_pairs, 4u);
  EXPECT_TRUE(r.holds);

  r = verify_i2l(std::vector{I(0, 0, 1, 1), I(1, 1, 2, 2)});
  EXPECT_EQ(r.trapezoids, 2u);
  EXPECT_EQ(r.intersecting_pairs, 6u);
  EXPECT_TRUE(r.holds);
}

TEST(VerifyI2L, IntervalWithItsReverseCountsIdenticalLines) {
  const auto r = verify_i2l(std::vector{I(0, 0, 1, 2), I(1, 2, 0, 0)});
  EXPECT_EQ(r.trapezoids, 2u);
  EXPECT_EQ(r.intersecting_pairs, 6u);
  EXPECT_TRUE(r.holds);
}

TEST(VerifyI2L, ExceptionalPairsRejected) {
  EXPECT_THROW(verify_i2l(std::vector{I(0, 0, 0, 1), I(1, 0, 1, 1)}), PreconditionError);
  // A single vertical interval: its line is parallel to that of its reverse.
  EXPECT_THROW(verify_i2l(std::vector{I(3, 0, 3, 1)}), PreconditionError);
}

TEST(GenericRotation, ClearsVerticalTranslates) {
  const std::vector<Interval> v{I(0, 0, 0, 1), I(1, 0, 1, 1)};
  ASSERT_TRUE(find_exceptional_pair(v).has_value());
  const RotatedSet r = generic_rotation(v, 42);
  EXPECT_FALSE(r.rotation.is_identity());
  EXPECT_FALSE(find_exceptional_pair(r.intervals).has_value());
  EXPECT_EQ(r.rotation.cos * r.rotation.cos + r.rotation.sin * r.rotation.sin, Q(1));
  EXPECT_TRUE(verify_i2l(r.intervals).holds);
}

TEST(GenericRotation, IdentityWhenGeneric) {
  const std::vector<Interval> v{I(0, 0, 1, 2), I(2, 1, 3, 3)};
  const RotatedSet r = generic_rotation(v, 42);
  EXPECT_TRUE(r.rotation.is_identity());
  EXPECT_EQ(r.intervals, v);
}

TEST(GenericRotation, DeterministicPerSeed) {
  const std::vector<Interval> v{I(0, 0, 0, 1), I(1, 0, 1, 1), I(2, 5, 2, -1)};
  const RotatedSet a = generic_rotation(v, 9);
  const RotatedSet b = generic_rotation(v, 9);
  EXPECT_EQ(a.intervals, b.intervals);
  EXPECT_EQ(a.rotation.sin, b.rotation.sin);
}

TEST(TranslateAction, SpecExamples) {
  EXPECT_EQ(translate_action(I(1, 1, 2, 3), Q(1), Q(0), Q(2)), I(1, 0, 2, -1));
  EXPECT_EQ(translate_action(I(4, -2, 7, 1), Q(0), Q(0), Q(0)), I(4, -2, 7, 1));
}

TEST(TranslateAction, MatchesLineTranslation) {
  const Interval i = I("1/3", "2", "-5/2", "7");
  const Interval moved = transform_interval(i, RigidMotion3::translate(Q(3), Q(-1, 2), Q(4)));
  EXPECT_EQ(translate_action(i, Q(3), Q(-1, 2), Q(4)), moved);
}

TEST(RotateXAction, SpecExamples) {
  const PlanarRotation quarter{Q(0), Q(1)};
  EXPECT_EQ(rotate_x_action(I(1, 2, 2, 1), quarter), I("1/2", "3/2", "-1/2", "1/2"));
  EXPECT_EQ(rotate_x_action(I(1, 2, 2, 1), PlanarRotation::identity()), I(1, 2, 2, 1));
  EXPECT_THROW(rotate_x_action(I(0, 0, 0, 1), quarter), PreconditionError);
}

TEST(RotateXAction, MatchesMatrixPath) {
  const PlanarRotation r = PlanarRotation::from_tan_half(Q(1, 3));  // (4/5, 3/5)
  const Interval i = I(1, 2, 2, 1);
  EXPECT_EQ(rotate_x_action(i, r), transform_interval(i, RigidMotion3::rotate_x(r)));
  EXPECT_EQ(rotate_x_action(i, r), oracle::moved_interval(i, RigidMotion3::rotate_x(r)));
}

TEST(PlanarRotation, RejectsOffCirclePoints) {
  EXPECT_THROW(PlanarRotation::make(Q(1), Q(1)), PreconditionError);
  EXPECT_NO_THROW(PlanarRotation::make(Q(3, 5), Q(4, 5)));
}

TEST(RigidMotion3, ValidatesRotation) {
  Matrix3 bad{{{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(-1)}}};
  EXPECT_THROW(RigidMotion3::make(bad, {Q(0), Q(0), Q(0)}), PreconditionError);
  const auto rx = RigidMotion3::rotate_x(PlanarRotation::from_tan_half(Q(2)));
  EXPECT_NO_THROW(RigidMotion3::make(rx.rotation, {Q(0), Q(0), Q(0)}));
  ASSERT_TRUE(rx.x_axis_angle().has_value());
  EXPECT_FALSE(RigidMotion3::rotate_z(PlanarRotation::from_tan_half(Q(2))).x_axis_angle().has_value());
}
