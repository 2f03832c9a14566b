#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "trapezoids/io.hpp"

namespace trapezoids::svg {

/// A curve q1 x^2 + q2 xy + q3 y^2 + q4 x + q5 y + q6 = 0 (lines have a zero
/// quadratic part) or a marked point, drawn dashed in the colour of `group`.
struct Overlay {
  enum class Kind { curve, point };
  Kind kind = Kind::curve;
  std::array<double, 6> q{};
  double x = 0, y = 0;
  std::size_t group = 0;
  std::string label;
};

/// Endpoint loci, pencil centres and fitted conics listed in a report.
std::vector<Overlay> overlays_from_report(const io::Json& report);

/// SVG 1.1 document: one <path class="interval"> per interval with endpoint
/// dots (initial filled, terminal hollow), overlays dashed, in the endpoints'
/// bounding box plus a 5% margin.
std::string render(std::span<const Interval> intervals, std::span<const Overlay> overlays, double width = 800);

}  // namespace trapezoids::svg
