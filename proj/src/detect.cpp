#include "trapezoids/detect.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace trapezoids {

PairCounts count_pairs(std::span<const Interval> intervals, const Relation& relation) {
  require_distinct(intervals);
  PairCounts out;
  out.intervals = intervals.size();
  for (std::size_t k = 0; k < intervals.size(); ++k)
    for (std::size_t m = k + 1; m < intervals.size(); ++m) {
      const PairRelation rel = relation(intervals[k], intervals[m]);
      if (rel.left && rel.right) ++out.both;
      else if (rel.left) ++out.left_only;
      else if (rel.right) ++out.right_only;
    }
  out.total_with_multiplicity = out.left_only + out.right_only + 2 * out.both;
  const double n = double(out.intervals);
  out.threshold = n > 1 ? std::pow(n, 1.5) * std::log(n) : 0.0;
  return out;
}

Interval oriented_interval(std::span<const Interval> intervals, std::size_t line_index) {
  const LineRef ref = line_ref(line_index, intervals.size());
  return ref.reversed ? reverse(intervals[ref.interval]) : intervals[ref.interval];
}

namespace {

bool exact_lines(std::span<const Line3> lines) {
  ModeTracker tracker;
  for (const Line3& l : lines) {
    for (const Scalar* s : {&l.base().x, &l.base().y, &l.base().z, &l.dir().x, &l.dir().y, &l.dir().z})
      tracker.observe(*s);
    if (tracker.decided()) break;
  }
  return tracker.mode() == NumericMode::exact;
}

// Buckets objects that compare equal: by canonical key in exact mode, by the
// tolerance relation against each bucket's first object otherwise.
template <class T, class Eq>
class Buckets {
 public:
  Buckets(bool exact, Eq eq) : exact_(exact), eq_(std::move(eq)) {}

  void add(const T& obj, const std::string& key) {
    std::size_t slot = reps_.size();
    if (exact_) {
      auto [it, inserted] = index_.emplace(key, slot);
      slot = it->second;
    } else {
      for (std::size_t k = 0; k < reps_.size(); ++k)
        if (eq_(reps_[k], obj)) {
          slot = k;
          break;
        }
    }
    if (slot == reps_.size()) {
      reps_.push_back(obj);
      hits_.push_back(0);
    }
    ++hits_[slot];
  }

  [[nodiscard]] std::size_t size() const { return reps_.size(); }
  [[nodiscard]] const T& rep(std::size_t k) const { return reps_[k]; }
  [[nodiscard]] std::size_t hits(std::size_t k) const { return hits_[k]; }

 private:
  bool exact_;
  Eq eq_;
  std::map<std::string, std::size_t> index_;
  std::vector<T> reps_;
  std::vector<std::size_t> hits_;
};

std::size_t distinct_lines(std::span<const Line3> lines, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> seen;
  for (std::size_t k : members) {
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](std::size_t s) {
      return line_intersect(lines[s], lines[k]).kind == IntersectionKind::identical;
    });
    if (!dup) seen.push_back(k);
  }
  return seen.size();
}

}  // namespace

std::vector<ConcurrencyWitness> detect_concurrent(std::span<const Line3> lines) {
  const bool exact = exact_lines(lines);
  Buckets<Vec3, bool (*)(const Vec3&, const Vec3&)> points(
      exact, [](const Vec3& p, const Vec3& q) { return p == q; });
  for (std::size_t k = 0; k < lines.size(); ++k)
    for (std::size_t m = k + 1; m < lines.size(); ++m) {
      const LineIntersection hit = line_intersect(lines[k], lines[m]);
      if (hit.kind == IntersectionKind::point) points.add(*hit.point, point_key(*hit.point));
    }

  std::vector<std::pair<std::string, ConcurrencyWitness>> found;
  for (std::size_t g = 0; g < points.size(); ++g) {
    if (points.hits(g) < 3) continue;  // three concurrent lines give three pairs
    const Vec3& p = points.rep(g);
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < lines.size(); ++k)
      if (lines[k].contains(p)) members.push_back(k);
    if (distinct_lines(lines, members) < 3) continue;
    ConcurrencyWitness w{p, std::move(members), Line2::graph(-p.z, p.x), Line2::graph(-p.z, p.y)};
    found.emplace_back(point_key(p), std::move(w));
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<ConcurrencyWitness> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

Pencil plane_to_pencil(const Plane3& plane) {
  const Scalar& A = plane.A;
  const Scalar& B = plane.B;
  if (A.is_zero() && B.is_zero()) throw PreconditionError("plane with A = B = 0 does not describe a pencil");
  Pencil out;
  out.ratio_a = A;
  out.ratio_b = B;
  const Scalar sum = A + B;
  if (sum.is_zero()) {
    out.kind = Pencil::Kind::translation;
    out.translation = {plane.C / A, plane.D / A};
    return out;
  }
  out.kind = Pencil::Kind::homothety;
  out.center = {-plane.C / sum, -plane.D / sum};
  const int ab = (A * B).sign();
  out.interior = ab > 0;
  out.endpoint = ab == 0;
  return out;
}

std::vector<CoplanarWitness> detect_coplanar(std::span<const Line3> lines) {
  const bool exact = exact_lines(lines);
  const auto same_plane = [](const Plane3& p, const Plane3& q) {
    return p.A == q.A && p.B == q.B && p.C == q.C && p.D == q.D;
  };
  Buckets<Plane3, decltype(same_plane)> planes(exact, same_plane);
  for (std::size_t k = 0; k < lines.size(); ++k)
    for (std::size_t m = k + 1; m < lines.size(); ++m)
      if (const auto plane = common_plane(lines[k], lines[m])) planes.add(*plane, plane->key());

  std::vector<std::pair<std::string, CoplanarWitness>> found;
  for (std::size_t g = 0; g < planes.size(); ++g) {
    if (planes.hits(g) < 3) continue;
    const Plane3& plane = planes.rep(g);
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < lines.size(); ++k)
      if (plane.contains(lines[k])) members.push_back(k);
    if (distinct_lines(lines, members) < 3) continue;
    std::optional<Pencil> pencil;
    if (!(plane.A.is_zero() && plane.B.is_zero())) pencil = plane_to_pencil(plane);
    found.emplace_back(plane.key(), CoplanarWitness{plane, std::move(members), std::move(pencil)});
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<CoplanarWitness> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

namespace {

class RegulusSearch {
 public:
  explicit RegulusSearch(std::span<const Line3> lines) : lines_(lines), n_(lines.size()), kinds_(n_ * n_) {
    for (const Line3& l : lines_)
      approx_.push_back({to_d(l.base()), to_d(l.dir())});
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t m = k + 1; m < n_; ++m) {
        const IntersectionKind kind = line_intersect(lines_[k], lines_[m]).kind;
        kinds_[k * n_ + m] = kinds_[m * n_ + k] = kind;
      }
  }

  [[nodiscard]] IntersectionKind kind(std::size_t k, std::size_t m) const { return kinds_[k * n_ + m]; }
  [[nodiscard]] bool skew(std::size_t k, std::size_t m) const { return kind(k, m) == IntersectionKind::skew; }
  [[nodiscard]] std::size_t size() const { return n_; }

  // Witness seeded by a pairwise skew triple, or nothing.
  [[nodiscard]] std::optional<RegulusWitness> seed(std::size_t i, std::size_t j, std::size_t k) const {
    if (!worth_solving(i, j, k)) return std::nullopt;
    const QuadricFit fit = quadric_through_lines(lines_[i], lines_[j], lines_[k]);
    if (!fit.quadric || !fit.quadric->doubly_ruled()) return std::nullopt;
    const Quadric& q = *fit.quadric;
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < n_; ++m)
      if (m == i || m == j || m == k || line_on_quadric(q, lines_[m])) members.push_back(m);
    if (members.size() < 4) return std::nullopt;

    // Lines of the seed's ruling are skew to it (or equal to it); lines of
    // the other ruling meet it, possibly at infinity.
    std::vector<std::size_t> same, other;
    for (std::size_t m : members) {
      const IntersectionKind kd = m == i ? IntersectionKind::identical : kind(i, m);
      (kd == IntersectionKind::point || kd == IntersectionKind::parallel ? other : same).push_back(m);
    }
    if (!bipartite(same, other)) return std::nullopt;
    const std::size_t ds = distinct_lines(lines_, same);
    const std::size_t dother = distinct_lines(lines_, other);
    // Three skew lines plus one transversal always share a quadric, so 3+1
    // carries no information; ask for two lines on each side or four on one.
    if (!((ds >= 2 && dother >= 2) || ds >= 4 || dother >= 4)) return std::nullopt;
    if (!other.empty() && other.front() < same.front()) std::swap(same, other);
    return RegulusWitness{q.normalized(), std::move(same), std::move(other)};
  }

 private:
  using D3 = std::array<double, 3>;
  struct ApproxLine {
    D3 base, dir;
  };

  static D3 to_d(const Vec3& v) { return {v.x.to_double(), v.y.to_double(), v.z.to_double()}; }
  static D3 sub(const D3& p, const D3& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2]}; }
  static D3 cross3(const D3& p, const D3& q) {
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  }
  static double norm(const D3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

  // Floating prefilter. X lies on the quadric through three skew lines
  // exactly when the planes spanned by X and each line share a line, i.e.
  // det[(X - P_s) x D_s] = 0. A line is a candidate when that determinant is
  // small relative to its Hadamard bound at four points along it. The
  // tolerance is loose: a false candidate only costs an exact solve.
  [[nodiscard]] bool nearly_on(const std::array<const ApproxLine*, 3>& seeds, const ApproxLine& m) const {
    for (double t : {-1.0, 0.0, 1.0, 2.0}) {
      const D3 x{m.base[0] + t * m.dir[0], m.base[1] + t * m.dir[1], m.base[2] + t * m.dir[2]};
      std::array<D3, 3> rows;
      double bound = 1.0;
      for (std::size_t s = 0; s < 3; ++s) {
        rows[s] = cross3(sub(x, seeds[s]->base), seeds[s]->dir);
        bound *= norm(rows[s]);
      }
      if (bound == 0.0) continue;
      const double det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                         rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                         rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
      if (std::abs(det) > 1e-7 * bound) return false;
    }
    return true;
  }

  // Whether the candidates could reach the witness minimum: another line of
  // the seed ruling, or two lines of the other ruling.
  [[nodiscard]] bool worth_solving(std::size_t i, std::size_t j, std::size_t k) const {
    const std::array<const ApproxLine*, 3> seeds{&approx_[i], &approx_[j], &approx_[k]};
    std::size_t cross = 0;
    for (std::size_t m = 0; m < n_; ++m) {
      if (m == i || m == j || m == k || !nearly_on(seeds, approx_[m])) continue;
      const IntersectionKind kd = kind(i, m);
      if (kd != IntersectionKind::point && kd != IntersectionKind::parallel) return true;
      if (++cross >= 2) return true;
    }
    return false;
  }

  [[nodiscard]] bool bipartite(const std::vector<std::size_t>& r1, const std::vector<std::size_t>& r2) const {
    const auto apart = [&](const std::vector<std::size_t>& r) {
      for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = x + 1; y < r.size(); ++y) {
          const IntersectionKind kd = kind(r[x], r[y]);
          if (kd != IntersectionKind::skew && kd != IntersectionKind::identical) return false;
        }
      return true;
    };
    if (!apart(r1) || !apart(r2)) return false;
    for (std::size_t x : r1)
      for (std::size_t y : r2) {
        const IntersectionKind kd = kind(x, y);
        if (kd != IntersectionKind::point && kd != IntersectionKind::parallel) return false;
      }
    return true;
  }

  std::span<const Line3> lines_;
  std::size_t n_;
  std::vector<IntersectionKind> kinds_;
  std::vector<ApproxLine> approx_;
};

std::vector<std::size_t> all_members(const RegulusWitness& w) {
  std::vector<std::size_t> m = w.ruling1;
  m.insert(m.end(), w.ruling2.begin(), w.ruling2.end());
  std::sort(m.begin(), m.end());
  return m;
}

// Runs body(task) for task in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(count)));
  if (threads <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) body(t);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<RegulusWitness> detect_regulus(std::span<const Line3> lines, const RegulusOptions& options) {
  const RegulusSearch search(lines);
  const std::size_t n = search.size();
  RegulusStrategy strategy = options.strategy;
  if (strategy == RegulusStrategy::automatic)
    strategy = n <= kExhaustiveLineLimit ? RegulusStrategy::exhaustive : RegulusStrategy::sampled;

  std::mutex mutex;
  std::map<std::vector<std::size_t>, RegulusWitness> found;  // keyed by member set
  const auto record = [&](RegulusWitness w) {
    std::vector<std::size_t> key = all_members(w);
    const std::lock_guard lock(mutex);
    found.emplace(std::move(key), std::move(w));
  };

  if (strategy == RegulusStrategy::exhaustive) {
    parallel_for(n, options.threads, [&](std::size_t i) {
      // Member sets this worker has already found; a skew triple inside one of
      // them determines the same quadric again.
      std::vector<std::vector<bool>> covered;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!search.skew(i, j)) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (!search.skew(i, k) || !search.skew(j, k)) continue;
          if (std::any_of(covered.begin(), covered.end(), [&](const auto& c) { return c[i] && c[j] && c[k]; }))
            continue;
          if (auto w = search.seed(i, j, k)) {
            std::vector<bool> mask(n, false);
            for (std::size_t m : all_members(*w)) mask[m] = true;
            covered.push_back(std::move(mask));
            record(std::move(*w));
          }
        }
      }
    });
  } else if (n >= 3) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::array<std::size_t, 3> t{pick(rng), pick(rng), pick(rng)};
      std::sort(t.begin(), t.end());
      if (search.skew(t[0], t[1]) && search.skew(t[0], t[2]) && search.skew(t[1], t[2])) triples.push_back(t);
    }
    parallel_for(triples.size(), options.threads, [&](std::size_t s) {
      const auto& t = triples[s];
      if (auto w = search.seed(t[0], t[1], t[2])) record(std::move(*w));
    });
  }

  std::vector<RegulusWitness> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

std::string_view to_string(Subcase s) {
  switch (s) {
    case Subcase::I: return "I";
    case Subcase::II: return "II";
    case Subcase::III: return "III";
  }
  return "?";
}

SubcaseWitness classify_subcase(const Line3& l1, const Line3& l2, const Line3& l3) {
  const std::array<const Line3*, 3> ls{&l1, &l2, &l3};
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = x + 1; y < 3; ++y)
      if (line_intersect(*ls[x], *ls[y]).kind == IntersectionKind::identical)
        throw PreconditionError("subcase classification needs three distinct lines");
  const std::array<Interval, 3> iv{from_line(l1), from_line(l2), from_line(l3)};

  SubcaseWitness out;
  const auto row = [&](const Interval& p, const Interval& q) {
    return std::array<Scalar, 5>{p.d - q.d, q.c - p.c, q.b - p.b, p.a - q.a,
                                 (p.a * p.d - p.b * p.c) - (q.a * q.d - q.b * q.c)};
  };
  out.system = {row(iv[0], iv[1]), row(iv[1], iv[2])};
  const auto& s = out.system;
  const auto minor = [&](std::size_t x, std::size_t y) { return s[0][x] * s[1][y] - s[0][y] * s[1][x]; };
  if (!minor(0, 1).is_zero() || !minor(2, 3).is_zero()) {
    out.subcase = Subcase::I;
    return out;
  }
  const bool rank2 = !minor(0, 2).is_zero() || !minor(0, 3).is_zero() || !minor(1, 2).is_zero() ||
                     !minor(1, 3).is_zero();
  if (rank2) {
    out.subcase = Subcase::II;
    return out;
  }

  // Rank <= 1: b, c, d are affine in a along the three intervals.
  std::size_t p = 0, q = 1;
  if (iv[p].a == iv[q].a) q = 2;
  if (iv[p].a == iv[q].a) {
    p = 1;
    q = 2;
  }
  if (iv[p].a == iv[q].a) throw PreconditionError("rank-deficient system with equal a-components");
  const Scalar da = iv[q].a - iv[p].a;
  const std::array<Scalar, 3> dp{iv[p].b, iv[p].c, iv[p].d};
  const std::array<Scalar, 3> dq{iv[q].b, iv[q].c, iv[q].d};
  for (std::size_t k = 0; k < 3; ++k) {
    out.m[k] = (dq[k] - dp[k]) / da;
    out.r[k] = dp[k] - out.m[k] * iv[p].a;
  }
  for (const Interval& i : iv) {
    const std::array<Scalar, 3> v{i.b, i.c, i.d};
    for (std::size_t k = 0; k < 3; ++k)
      if (!(v[k] == out.m[k] * i.a + out.r[k])) throw PreconditionError("rank-deficient system without affine fit");
  }
  if (!(out.m[2] == out.m[0] * out.m[1])) throw PreconditionError("rank-deficient system with m3 != m1 m2");
  const Vec3 point{out.r[0], -out.r[1] * out.m[0] + out.r[2], -out.m[0]};
  for (const Line3* l : ls)
    if (!l->contains(point)) throw PreconditionError("rank-deficient system without a common point");
  out.subcase = Subcase::III;
  out.point = point;
  return out;
}

namespace {

std::vector<Vec2> unique_points(std::vector<Vec2> pts) {
  std::vector<Vec2> out;
  for (Vec2& p : pts)
    if (std::none_of(out.begin(), out.end(), [&](const Vec2& q) { return q == p; })) out.push_back(std::move(p));
  return out;
}

EndpointLocus fit_locus(std::string name, std::vector<Vec2> pts) {
  EndpointLocus out;
  out.name = std::move(name);
  pts = unique_points(std::move(pts));
  out.points = pts.size();
  if (pts.size() >= 2) {
    if (auto line = fit_line(pts)) {
      out.line = line;
      return out;
    }
  }
  if (pts.size() >= 5) {
    const ConicFit fit = fit_conic(pts);
    out.conic = fit.conic;
    out.nullspace_dimension = fit.nullspace_dimension;
  }
  return out;
}

RulingLoci ruling_loci(std::span<const Interval> intervals, const std::vector<std::size_t>& members,
                       const std::vector<std::size_t>& other, bool trapezoid) {
  RulingLoci out;
  out.members = members;
  std::vector<Interval> fam;
  for (std::size_t k : members) fam.push_back(oriented_interval(intervals, k));
  if (trapezoid) {
    // Three distinct lines of the other ruling drive the linear system.
    std::vector<Line3> drivers;
    for (std::size_t k : other) {
      const Line3 l = to_line(oriented_interval(intervals, k));
      const bool dup = std::any_of(drivers.begin(), drivers.end(), [&](const Line3& d) {
        return line_intersect(d, l).kind == IntersectionKind::identical;
      });
      if (!dup) drivers.push_back(l);
      if (drivers.size() == 3) break;
    }
    if (drivers.size() == 3) {
      try {
        out.subcase = classify_subcase(drivers[0], drivers[1], drivers[2]);
      } catch (const PreconditionError&) {
        // Rank-deficient without a common point: not a ruling, leave unset.
      }
    }
  }
  std::vector<Vec2> initial, terminal, mixed;
  for (const Interval& i : fam) {
    initial.push_back(i.initial());
    terminal.push_back(i.terminal());
    mixed.push_back({i.a, i.d});
  }
  out.loci.push_back(fit_locus("initial", std::move(initial)));
  out.loci.push_back(fit_locus("terminal", std::move(terminal)));
  if (out.subcase && out.subcase->subcase == Subcase::II)
    out.loci.push_back(fit_locus("initial-x-terminal-y", std::move(mixed)));
  return out;
}

std::vector<std::size_t> mirrored(const std::vector<std::size_t>& members, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k : members) out.push_back(k < n ? k + n : k - n);
  std::sort(out.begin(), out.end());
  return out;
}

// Drops witnesses whose member set is the orientation flip of another
// witness's (keeping the lexicographically smaller one) and witnesses that
// touch fewer than three intervals, which say no more than one pair relation.
template <class W, class Members>
std::vector<W> drop_mirrors(std::vector<W> ws, std::size_t n, Members members_of) {
  std::set<std::vector<std::size_t>> all;
  for (const W& w : ws) all.insert(members_of(w));
  std::vector<W> out;
  for (W& w : ws) {
    const auto own = members_of(w);
    const auto flip = mirrored(own, n);
    if (flip != own && flip < own && all.count(flip)) continue;
    std::set<std::size_t> touched;
    for (std::size_t k : own) touched.insert(line_ref(k, n).interval);
    if (touched.size() < 3) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

StructureReport analyze(std::span<const Interval> intervals, const AnalyzeOptions& options) {
  require_distinct(intervals);
  StructureReport report;
  report.relation = options.relation;
  report.intervals = intervals.size();
  report.counts = count_pairs(intervals, options.relation);
  const bool trapezoid = options.relation.kind == RelationKind::trapezoid;
  const std::size_t n = intervals.size();

  std::vector<Interval> frame(intervals.begin(), intervals.end());
  if (trapezoid && n > 0) {
    RotatedSet rotated = generic_rotation(intervals, options.seed);
    frame = std::move(rotated.intervals);
    report.rotation = rotated.rotation;
  }
  const std::vector<Line3> lines = line_set(frame, options.relation);
  const PlanarRotation back = report.rotation.inverse();

  report.concurrencies = drop_mirrors(detect_concurrent(lines), n, [](const auto& w) { return w.members; });
  for (ConcurrencyWitness& w : report.concurrencies) {
    if (trapezoid) {
      w.initial_locus = back.apply(*w.initial_locus);
      w.terminal_locus = back.apply(*w.terminal_locus);
    } else {
      w.initial_locus.reset();
      w.terminal_locus.reset();
    }
  }

  report.coplanarities = drop_mirrors(detect_coplanar(lines), n, [](const auto& w) { return w.members; });
  for (CoplanarWitness& w : report.coplanarities) {
    if (!trapezoid) {
      w.pencil.reset();
    } else if (w.pencil) {
      w.pencil->center = back.apply(w.pencil->center);
      w.pencil->translation = back.apply(w.pencil->translation);
    }
  }

  report.reguli = drop_mirrors(detect_regulus(lines, options.regulus), n, all_members);
  for (const RegulusWitness& w : report.reguli)
    report.endpoint_loci.push_back({ruling_loci(intervals, w.ruling1, w.ruling2, trapezoid),
                                    ruling_loci(intervals, w.ruling2, w.ruling1, trapezoid)});
  return report;
}

}  // namespace trapezoids
