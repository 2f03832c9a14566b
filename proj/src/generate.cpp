#include "trapezoids/generate.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <random>

namespace trapezoids {

Which parse_which(std::string_view text) {
  if (text == "family1" || text == "1") return Which::family1;
  if (text == "family2" || text == "2") return Which::family2;
  if (text == "both") return Which::both;
  throw PreconditionError("unknown family selector '" + std::string(text) + "'");
}

std::vector<PlanarRotation> circle_points(std::size_t count, std::uint64_t seed, NumericMode mode) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarRotation> out;
  if (mode == NumericMode::approximate) {
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    while (out.size() < count) {
      const PlanarRotation r = PlanarRotation::from_angle(angle(rng));
      if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.cos == r.cos && o.sin == r.sin; }))
        out.push_back(r);
    }
    return out;
  }
  // Small numerators and denominators keep the coordinates readable.
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  std::size_t misses = 0;
  while (out.size() < count) {
    const PlanarRotation r = PlanarRotation::from_tan_half(Scalar::exact(num(rng), den(rng)));
    if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.cos == r.cos && o.sin == r.sin; })) {
      out.push_back(r);
    } else if (++misses > 64 * (count + 1)) {
      den = std::uniform_int_distribution<long>(1, den.b() * 2);
      num = std::uniform_int_distribution<long>(-2 * num.b(), 2 * num.b());
      misses = 0;
    }
  }
  return out;
}

std::vector<Scalar> nonzero_samples(std::size_t count, std::uint64_t seed, NumericMode mode) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> out;
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_real_distribution<double> real(-4.0, 4.0);
  std::size_t misses = 0;
  while (out.size() < count) {
    const Scalar s = mode == NumericMode::exact ? Scalar::exact(num(rng), den(rng)) : Scalar::approx(real(rng));
    if (!s.is_zero() && std::none_of(out.begin(), out.end(), [&](const Scalar& o) { return o == s; })) {
      out.push_back(s);
    } else if (++misses > 64 * (count + 1)) {
      num = std::uniform_int_distribution<long>(-2 * num.b(), 2 * num.b());
      misses = 0;
    }
  }
  return out;
}

namespace {

// Appends (a,b;c,d) unless it has zero length.
void push(Family& fam, Scalar a, Scalar b, Scalar c, Scalar d) {
  Interval i{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (i.initial() == i.terminal()) {
    fam.warnings.push_back("dropped zero-length interval at (" + point_key(i.initial()) + ")");
    return;
  }
  fam.intervals.push_back(std::move(i));
}

void require_nonzero(const Scalar& s, const char* name) {
  if (s.is_zero()) throw PreconditionError(std::string(name) + " must be nonzero");
}

Quadric make_quadric(std::array<Scalar, Quadric::kSize> q) { return Quadric(std::move(q)); }

}  // namespace

void dedupe(Family& family) {
  std::vector<Interval> kept;
  for (Interval& i : family.intervals) {
    if (std::any_of(kept.begin(), kept.end(), [&](const Interval& k) { return k == i; })) {
      family.warnings.push_back("dropped repeated interval (" + i.key() + ")");
      continue;
    }
    kept.push_back(std::move(i));
  }
  family.intervals = std::move(kept);
}

Family gen_parallel_lines(const Scalar& m, const Scalar& k1, const Scalar& k2,
                          std::span<const std::pair<Scalar, Scalar>> abscissae) {
  if (k1 == k2) throw PreconditionError("parallel lines need k1 != k2");
  Family fam;
  for (const auto& [x1, x2] : abscissae) push(fam, x1, m * x1 + k1, x2, m * x2 + k2);
  dedupe(fam);
  return fam;
}

Family gen_pencil(const Scalar& A, const Scalar& B, const Scalar& C, const Scalar& D, std::span<const Vec2> samples) {
  if (A.is_zero() && B.is_zero()) throw PreconditionError("pencil needs (A, B) != (0, 0)");
  Family fam;
  for (const Vec2& p : samples) {
    if (!B.is_zero()) {
      push(fam, p.x, p.y, -(A * p.x + C) / B, -(A * p.y + D) / B);
    } else {
      push(fam, -C / A, -D / A, p.x, p.y);
    }
  }
  dedupe(fam);
  return fam;
}

Family gen_hyperboloid_rulings(const Scalar& A, const Scalar& B, const Scalar& C,
                               std::span<const PlanarRotation> angles, Which which) {
  require_nonzero(A, "A");
  require_nonzero(B, "B");
  require_nonzero(C, "C");
  Family fam;
  if (which != Which::family2)
    for (const PlanarRotation& r : angles) push(fam, A / C * r.cos, A * r.sin, B / C * r.sin, -B * r.cos);
  if (which != Which::family1)
    for (const PlanarRotation& r : angles) push(fam, A / C * r.cos, A * r.sin, -B / C * r.sin, B * r.cos);
  dedupe(fam);
  return fam;
}

Quadric hyperboloid_quadric(const Scalar& A, const Scalar& B, const Scalar& C) {
  require_nonzero(A, "A");
  require_nonzero(B, "B");
  require_nonzero(C, "C");
  const Scalar z(0);
  return make_quadric({Scalar(1) / (A * A), Scalar(1) / (B * B), -Scalar(1) / (C * C), z, z, z, z, z, z, Scalar(-1)});
}

Family gen_paraboloid_rulings(const Scalar& A, const Scalar& B, std::span<const Scalar> lambdas, Which which) {
  require_nonzero(A, "A");
  require_nonzero(B, "B");
  for (const Scalar& l : lambdas) require_nonzero(l, "lambda");
  Family fam;
  const Scalar two(2);
  if (which != Which::family2)
    for (const Scalar& l : lambdas) push(fam, A * l / two, A / (two * l), B * l / two, -B / (two * l));
  if (which != Which::family1)
    for (const Scalar& l : lambdas) push(fam, A * l / two, A / (two * l), -B * l / two, B / (two * l));
  dedupe(fam);
  return fam;
}

Quadric paraboloid_quadric(const Scalar& A, const Scalar& B) {
  require_nonzero(A, "A");
  require_nonzero(B, "B");
  const Scalar z(0);
  return make_quadric({Scalar(1) / (A * A), -Scalar(1) / (B * B), z, z, z, z, z, z, Scalar(-1), z});
}

SubcaseIIFamilies gen_subcase_ii(const Scalar& u, const Scalar& v, std::span<const Scalar> ts) {
  for (const Scalar& t : ts) require_nonzero(t, "t");
  SubcaseIIFamilies out;
  out.cone = u == Scalar(1);
  for (const Scalar& t : ts) {
    const Scalar inv = Scalar(1) / t;
    push(out.family1, t, t, inv, u * inv + v);
    push(out.family2, t, u * t, inv, v + inv);
  }
  dedupe(out.family1);
  dedupe(out.family2);
  if (out.cone) out.family2.warnings.push_back("u = 1: both families coincide and the surface is a cone");
  return out;
}

Quadric subcase_ii_quadric(const Scalar& u, const Scalar& v) {
  // x y - z^2 - (u + 1) z - v x - u = 0
  const Scalar z(0);
  return make_quadric({z, z, Scalar(-1), Scalar(1), z, z, -v, z, -(u + Scalar(1)), -u});
}

Family gen_transformed(std::span<const Interval> family, const RigidMotion3& motion) {
  Family fam;
  const std::optional<PlanarRotation> angle = motion.x_axis_angle();
  const Vec3& t = motion.translation;
  for (const Interval& i : family) {
    try {
      if (angle) {
        fam.intervals.push_back(translate_action(rotate_x_action(i, *angle), t.x, t.y, t.z));
      } else {
        fam.intervals.push_back(transform_interval(i, motion));
      }
    } catch (const PreconditionError&) {
      fam.warnings.push_back("dropped (" + i.key() + "): image line parallel to xy-plane");
    }
  }
  dedupe(fam);
  return fam;
}

namespace {

template <class Pull>
Family pullback(std::span<const Line3> lines, Pull pull) {
  Family fam;
  for (const Line3& l : lines) {
    if (l.dir().z.is_zero()) {
      fam.warnings.push_back("dropped line " + l.key() + ": parallel to xy-plane");
      continue;
    }
    const Interval i = pull(l);
    if (i.initial() == i.terminal()) {
      fam.warnings.push_back("dropped zero-length pullback of line " + l.key());
      continue;
    }
    fam.intervals.push_back(i);
  }
  dedupe(fam);
  return fam;
}

}  // namespace

Family gen_perp_pullback(std::span<const Line3> lines) {
  return pullback(lines, [](const Line3& l) { return from_line_perp(l); });
}

Family gen_ratio_pullback(std::span<const Line3> lines, const Scalar& rho) {
  require_nonzero(rho, "rho");
  return pullback(lines, [&](const Line3& l) { return from_line_ratio(l, rho); });
}

}  // namespace trapezoids
