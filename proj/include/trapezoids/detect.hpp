#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trapezoids/conic.hpp"
#include "trapezoids/correspondence.hpp"
#include "trapezoids/quadric.hpp"

namespace trapezoids {

struct PairCounts {
  std::size_t intervals = 0;
  std::size_t left_only = 0;
  std::size_t right_only = 0;
  std::size_t both = 0;
  std::size_t total_with_multiplicity = 0;
  /// N^{3/2} ln N; informational only.
  double threshold = 0.0;

  [[nodiscard]] bool exceeds_threshold() const { return double(total_with_multiplicity) > threshold; }
};

/// Brute force over all unordered pairs. Throws PreconditionError on duplicates.
PairCounts count_pairs(std::span<const Interval> intervals, const Relation& relation = Relation::trapezoid());

/// Position k of the 2N line set: k < N is interval k, k >= N is the reverse
/// of interval k - N.
struct LineRef {
  std::size_t interval;
  bool reversed;
};
inline LineRef line_ref(std::size_t line_index, std::size_t n) {
  return line_index < n ? LineRef{line_index, false} : LineRef{line_index - n, true};
}

struct ConcurrencyWitness {
  Vec3 point;                        // (u, v, w)
  std::vector<std::size_t> members;  // line indices, ascending
  // Endpoint lines y = u - w x and y = v - w x of the pulled-back family.
  std::optional<Line2> initial_locus;
  std::optional<Line2> terminal_locus;
};

/// Groups pairwise intersection points; emits points on >= 3 distinct lines,
/// sorted by point.
std::vector<ConcurrencyWitness> detect_concurrent(std::span<const Line3> lines);

/// Case 2 pencil: the terminal endpoints are the image of the initial ones
/// under a homothety (A + B != 0) or a translation (A + B == 0).
struct Pencil {
  enum class Kind { homothety, translation };
  Kind kind = Kind::homothety;
  Vec2 center;       // homothety only
  Scalar ratio_a;    // ratio B:A, stored as (A, B)
  Scalar ratio_b;
  bool interior = false;  // AB > 0: the center lies inside every interval
  bool endpoint = false;  // AB == 0: the center is an endpoint of every interval
  Vec2 translation;  // translation only: (c, d) = (a, b) + translation
};

/// Throws PreconditionError when A = B = 0.
Pencil plane_to_pencil(const Plane3& plane);

struct CoplanarWitness {
  Plane3 plane;
  std::vector<std::size_t> members;
  std::optional<Pencil> pencil;  // absent when A = B = 0
};

/// Groups the planes spanned by meeting or parallel pairs; emits planes
/// containing >= 3 distinct lines, sorted by plane.
std::vector<CoplanarWitness> detect_coplanar(std::span<const Line3> lines);

/// Three pairwise skew lines determine one quadric.
inline QuadricFit quadric_through_skew_lines(const Line3& l1, const Line3& l2, const Line3& l3) {
  return quadric_through_lines(l1, l2, l3);
}

struct RegulusWitness {
  Quadric quadric;
  std::vector<std::size_t> ruling1;  // the ruling holding the smallest member index
  std::vector<std::size_t> ruling2;
};

enum class RegulusStrategy { automatic, exhaustive, sampled };

struct RegulusOptions {
  RegulusStrategy strategy = RegulusStrategy::automatic;
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Lines above which `automatic` samples triples instead of enumerating them
/// (N = 60 intervals).
inline constexpr std::size_t kExhaustiveLineLimit = 120;

/// Seeds quadrics from pairwise skew triples, collects every line on each
/// doubly ruled quadric, and splits the members into rulings by whether they
/// meet the seed line. Witnesses satisfy the bipartite law and have >= 2
/// distinct lines in each ruling or >= 4 in total. Output is sorted and
/// independent of the thread count.
std::vector<RegulusWitness> detect_regulus(std::span<const Line3> lines, const RegulusOptions& options = {});

enum class Subcase { I, II, III };
std::string_view to_string(Subcase s);

struct SubcaseWitness {
  Subcase subcase = Subcase::I;
  /// Coefficients of (a, b, c, d) in the two linear equations obtained by
  /// subtracting the incidence conditions, with their right-hand sides.
  std::array<std::array<Scalar, 5>, 2> system;
  // Subcase III: b = m1 a + r1, c = m2 a + r2, d = m3 a + r3.
  std::array<Scalar, 3> m;
  std::array<Scalar, 3> r;
  std::optional<Vec3> point;  // (r1, -r2 m1 + r3, -m1)
};

/// Classifies the linear system satisfied by every line meeting l1, l2, l3.
/// Throws PreconditionError for coincident lines, and when a rank <= 1 system
/// does not come with a verified common point.
SubcaseWitness classify_subcase(const Line3& l1, const Line3& l2, const Line3& l3);

struct EndpointLocus {
  std::string name;  // "initial", "terminal", or "initial-x-terminal-y"
  std::size_t points = 0;
  std::optional<Line2> line;
  std::optional<Conic> conic;
  std::size_t nullspace_dimension = 0;
};

struct RulingLoci {
  std::vector<std::size_t> members;
  std::optional<SubcaseWitness> subcase;  // from three lines of the other ruling
  std::vector<EndpointLocus> loci;
};

struct AnalyzeOptions {
  Relation relation = Relation::trapezoid();
  RegulusOptions regulus;
  std::uint64_t seed = 0;  // generic rotation
};

struct StructureReport {
  Relation relation;
  std::size_t intervals = 0;
  PairCounts counts;
  /// Rotation applied before building lines; witness points and planes are in
  /// the rotated frame, 2D loci are in input coordinates.
  PlanarRotation rotation;
  std::vector<ConcurrencyWitness> concurrencies;
  std::vector<CoplanarWitness> coplanarities;
  std::vector<RegulusWitness> reguli;
  std::vector<std::array<RulingLoci, 2>> endpoint_loci;  // one per regulus
};

/// Counts pairs and runs all three detectors on the 2N line set. Structures
/// that are the orientation-flipped copy of an earlier one are dropped.
StructureReport analyze(std::span<const Interval> intervals, const AnalyzeOptions& options = {});

/// Interval behind position k of the 2N line set.
Interval oriented_interval(std::span<const Interval> intervals, std::size_t line_index);

}  // namespace trapezoids
