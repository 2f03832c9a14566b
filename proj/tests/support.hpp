#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trapezoids/correspondence.hpp"
#include "trapezoids/quadric.hpp"

namespace trapezoids::testing {

inline Scalar Q(const char* text) { return Scalar::parse(text, NumericMode::exact); }
template <std::integral T>
inline Scalar Q(T num, long den = 1) { return Scalar::exact(long(num), den); }
inline Scalar F(double v) { return Scalar::approx(v); }

inline Interval I(long a, long b, long c, long d) { return {Q(a), Q(b), Q(c), Q(d)}; }
inline Interval I(const char* a, const char* b, const char* c, const char* d) { return {Q(a), Q(b), Q(c), Q(d)}; }
inline Vec3 P3(Scalar x, Scalar y, Scalar z) { return {std::move(x), std::move(y), std::move(z)}; }

/// Seeded source of small rationals and intervals.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Scalar rational(long bound = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, max_den);
    return Q(num(rng_), den(rng_));
  }
  Scalar nonzero(long bound = 9, long max_den = 4) {
    for (;;) {
      Scalar s = rational(bound, max_den);
      if (!s.is_zero()) return s;
    }
  }
  Interval interval(long bound = 9, long max_den = 4) {
    for (;;) {
      Interval i{rational(bound, max_den), rational(bound, max_den), rational(bound, max_den), rational(bound, max_den)};
      if (!(i.initial() == i.terminal())) return i;
    }
  }
  std::vector<Interval> distinct_intervals(std::size_t n, long bound = 9, long max_den = 4) {
    std::vector<Interval> out;
    while (out.size() < n) {
      Interval i = interval(bound, max_den);
      bool dup = false;
      for (const Interval& o : out) dup = dup || o == i;
      if (!dup) out.push_back(std::move(i));
    }
    return out;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

namespace oracle {

/// Lines (b,d,0)+t(a,c,1) and (b',d',0)+s(a',c',1) share a point only at equal
/// heights t = s, so they meet iff b + t a = b' + t a' and d + t c = d' + t c'
/// has a solution t, or they coincide.
inline bool graph_lines_meet(const Interval& i, const Interval& j) {
  const Scalar p = i.a - j.a, q = j.b - i.b;  // p t = q
  const Scalar r = i.c - j.c, s = j.d - i.d;  // r t = s
  if (p.is_zero() && r.is_zero()) return q.is_zero() && s.is_zero();
  if (p.is_zero()) return q.is_zero();
  if (r.is_zero()) return s.is_zero();
  return q * r == s * p;
}

/// Quadric through three skew lines from det[(X - P_s) x D_s] = 0, with
/// coefficients recovered by evaluating the polynomial at ten points.
inline std::array<Scalar, Quadric::kSize> quadric_by_determinant(const Line3& l1, const Line3& l2, const Line3& l3) {
  const auto f = [&](const Vec3& x) {
    const Vec3 r1 = cross(x - l1.base(), l1.dir());
    const Vec3 r2 = cross(x - l2.base(), l2.dir());
    const Vec3 r3 = cross(x - l3.base(), l3.dir());
    return dot(r1, cross(r2, r3));
  };
  const Scalar o(0), one(1);
  const Vec3 ex{one, o, o}, ey{o, one, o}, ez{o, o, one}, zero{o, o, o};
  const Scalar f0 = f(zero);
  const auto quad_lin = [&](const Vec3& e) {
    const Scalar fp = f(e), fm = f(Scalar(-1) * e);
    return std::pair{(fp + fm) / Scalar(2) - f0, (fp - fm) / Scalar(2)};
  };
  const auto [xx, x] = quad_lin(ex);
  const auto [yy, y] = quad_lin(ey);
  const auto [zz, z] = quad_lin(ez);
  const Scalar xy = f(ex + ey) - xx - yy - x - y - f0;
  const Scalar xz = f(ex + ez) - xx - zz - x - z - f0;
  const Scalar yz = f(ey + ez) - yy - zz - y - z - f0;
  return {xx, yy, zz, xy, xz, yz, x, y, z, f0};
}

/// True when the coefficient vectors are proportional.
inline bool proportional(const std::array<Scalar, Quadric::kSize>& p, const std::array<Scalar, Quadric::kSize>& q) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!(p[a] * q[b] == p[b] * q[a])) return false;
  return true;
}

/// Interval of the line (b,d,0)+t(a,c,1) after x -> R x + t, computed by
/// pushing two points of the line through the motion and reading off the new
/// heights-0 and 1 crossings.
inline Interval moved_interval(const Interval& i, const RigidMotion3& motion) {
  const Vec3 p0{i.b, i.d, Scalar(0)};
  const Vec3 p1{i.b + i.a, i.d + i.c, Scalar(1)};
  const Vec3 q0 = motion.apply(p0), q1 = motion.apply(p1);
  const Vec3 dir = q1 - q0;
  const Scalar s0 = -q0.z / dir.z;  // parameter of the z = 0 crossing
  const Vec3 base = q0 + s0 * dir;
  const Vec3 unit = (Scalar(1) / dir.z) * dir;
  return {unit.x, base.x, unit.y, base.y};
}

}  // namespace oracle
}  // namespace trapezoids::testing
