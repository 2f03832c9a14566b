#include "trapezoids/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trapezoids::svg {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

// Fixed two-decimal coordinate.
std::string f2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double num(const io::Json& j, NumericMode mode) { return io::scalar_from_json(j, mode).to_double(); }

std::array<double, 6> line_q(const io::Json& l, NumericMode mode) {
  return {0, 0, 0, num(l[0], mode), num(l[1], mode), num(l[2], mode)};
}

struct Box {
  double x0, x1, y0, y1;
  [[nodiscard]] bool inside(double x, double y) const {
    const double mx = (x1 - x0) * 0.5, my = (y1 - y0) * 0.5;
    return x >= x0 - mx && x <= x1 + mx && y >= y0 - my && y <= y1 + my;
  }
};

// Roots of a t^2 + b t + c = 0, NaN where absent.
std::array<double, 2> roots(double a, double b, double c) {
  const double nan = std::nan("");
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
  if (std::abs(a) <= 1e-12 * scale) {
    if (std::abs(b) <= 1e-12 * scale) return {nan, nan};
    return {-c / b, nan};
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return {nan, nan};
  const double s = std::sqrt(disc);
  return {(-b - s) / (2 * a), (-b + s) / (2 * a)};
}

using Polyline = std::vector<std::pair<double, double>>;

// Samples the curve along both axes; every branch becomes a polyline.
std::vector<Polyline> trace(const std::array<double, 6>& q, const Box& box) {
  constexpr int kSteps = 400;
  std::vector<Polyline> out;
  for (int axis = 0; axis < 2; ++axis) {
    std::array<Polyline, 2> open;
    const double lo = axis == 0 ? box.x0 : box.y0, hi = axis == 0 ? box.x1 : box.y1;
    const double pad = (hi - lo) * 0.5;
    for (int s = 0; s <= kSteps; ++s) {
      const double u = lo - pad + (hi - lo + 2 * pad) * s / kSteps;
      // axis 0: fix x = u, solve for y; axis 1: fix y = u, solve for x.
      const auto r = axis == 0 ? roots(q[2], q[1] * u + q[4], q[0] * u * u + q[3] * u + q[5])
                               : roots(q[0], q[1] * u + q[3], q[2] * u * u + q[4] * u + q[5]);
      for (int b = 0; b < 2; ++b) {
        const double x = axis == 0 ? u : r[b], y = axis == 0 ? r[b] : u;
        if (std::isfinite(r[b]) && box.inside(x, y)) {
          open[b].emplace_back(x, y);
        } else if (!open[b].empty()) {
          if (open[b].size() > 1) out.push_back(std::move(open[b]));
          open[b].clear();
        }
      }
    }
    for (Polyline& p : open)
      if (p.size() > 1) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Overlay> overlays_from_report(const io::Json& report) {
  std::vector<Overlay> out;
  const NumericMode mode = io::parse_mode(report.at("provenance").at("mode").get<std::string>());
  const io::Json& st = report.at("structures");
  std::size_t group = 0;
  for (const io::Json& w : st.at("concurrencies")) {
    for (const char* name : {"initial_locus", "terminal_locus"})
      if (!w.at(name).is_null()) out.push_back({Overlay::Kind::curve, line_q(w.at(name), mode), 0, 0, group, name});
    ++group;
  }
  for (const io::Json& w : st.at("coplanarities")) {
    const io::Json& p = w.at("pencil");
    if (!p.is_null() && p.at("kind") == "homothety") {
      Overlay o{Overlay::Kind::point, {}, num(p.at("center")[0], mode), num(p.at("center")[1], mode), group, "center"};
      out.push_back(o);
    }
    ++group;
  }
  for (const io::Json& w : st.at("reguli")) {
    for (const io::Json& ruling : w.at("endpoint_loci")) {
      for (const io::Json& l : ruling.at("loci")) {
        // The mixed (a, d) locus lives in parameter space, not the figure.
        if (l.at("name") == "initial-x-terminal-y") continue;
        if (!l.at("line").is_null()) {
          out.push_back({Overlay::Kind::curve, line_q(l.at("line"), mode), 0, 0, group, l.at("name")});
        } else if (!l.at("conic").is_null()) {
          std::array<double, 6> q;
          const io::Json& c = l.at("conic").at("coefficients");
          for (std::size_t k = 0; k < 6; ++k) q[k] = num(c[k], mode);
          out.push_back({Overlay::Kind::curve, q, 0, 0, group, l.at("name")});
        }
      }
    }
    ++group;
  }
  return out;
}

std::string render(std::span<const Interval> intervals, std::span<const Overlay> overlays, double width) {
  Box box{0, 1, 0, 1};
  if (!intervals.empty()) {
    box = {1e300, -1e300, 1e300, -1e300};
    for (const Interval& i : intervals) {
      for (const Vec2& p : {i.initial(), i.terminal()}) {
        const double x = p.x.to_double(), y = p.y.to_double();
        box = {std::min(box.x0, x), std::max(box.x1, x), std::min(box.y0, y), std::max(box.y1, y)};
      }
    }
  }
  // Degenerate extents get a unit span; then a 5% margin on each side.
  if (box.x1 - box.x0 <= 0) box.x0 -= 0.5, box.x1 += 0.5;
  if (box.y1 - box.y0 <= 0) box.y0 -= 0.5, box.y1 += 0.5;
  const double mx = (box.x1 - box.x0) * 0.05, my = (box.y1 - box.y0) * 0.05;
  const Box view{box.x0 - mx, box.x1 + mx, box.y0 - my, box.y1 + my};
  const double scale = width / (view.x1 - view.x0);
  const double height = (view.y1 - view.y0) * scale;
  const auto sx = [&](double x) { return (x - view.x0) * scale; };
  const auto sy = [&](double y) { return (view.y1 - y) * scale; };
  const double dot = std::max(2.0, width / 200);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f2(width) << "\" height=\""
      << f2(height) << "\" viewBox=\"0 0 " << f2(width) << ' ' << f2(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g class=\"overlays\" fill=\"none\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\">\n";
  for (const Overlay& o : overlays) {
    const char* colour = kPalette[o.group % std::size(kPalette)];
    if (o.kind == Overlay::Kind::point) {
      if (!view.inside(o.x, o.y)) continue;
      out << "<circle class=\"locus-point\" cx=\"" << f2(sx(o.x)) << "\" cy=\"" << f2(sy(o.y)) << "\" r=\""
          << f2(dot * 2) << "\" stroke=\"" << colour << "\"/>\n";
      continue;
    }
    for (const Polyline& pl : trace(o.q, view)) {
      out << "<polyline class=\"locus\" stroke=\"" << colour << "\" points=\"";
      for (std::size_t k = 0; k < pl.size(); ++k)
        out << (k ? " " : "") << f2(sx(pl[k].first)) << ',' << f2(sy(pl[k].second));
      out << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"intervals\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Interval& i : intervals) {
    const double x0 = sx(i.a.to_double()), y0 = sy(i.b.to_double());
    const double x1 = sx(i.c.to_double()), y1 = sy(i.d.to_double());
    out << "<path class=\"interval\" d=\"M " << f2(x0) << ' ' << f2(y0) << " L " << f2(x1) << ' ' << f2(y1) << "\"/>\n";
    out << "<circle class=\"initial\" cx=\"" << f2(x0) << "\" cy=\"" << f2(y0) << "\" r=\"" << f2(dot)
        << "\" fill=\"black\"/>\n";
    out << "<circle class=\"terminal\" cx=\"" << f2(x1) << "\" cy=\"" << f2(y1) << "\" r=\"" << f2(dot)
        << "\" fill=\"white\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace trapezoids::svg
