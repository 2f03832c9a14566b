// trapz: generate interval families, analyze them, verify the line-count
// identity, render SVG figures, and convert datasets.
//
// Exit codes: 0 success, 1 verification failed, 2 bad input, 3 I/O error.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "trapezoids/detect.hpp"
#include "trapezoids/generate.hpp"
#include "trapezoids/io.hpp"
#include "trapezoids/svg.hpp"

using namespace trapezoids;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kIo = 3 };

struct VerificationFailed {};

struct GenerateArgs {
  std::string family;
  std::string m = "1", k1 = "0", k2 = "1";
  std::string A = "1", B = "1", C = "1", D = "0";
  std::string u = "-1", v = "1";
  std::string which = "both";
  std::size_t count = 12;
  std::uint64_t seed = 1;
  std::string mode = "exact";
  std::string translate, rotate_x;
  std::string pullback = "none";
  std::string rho = "2";
  std::string out;
};

struct AnalyzeArgs {
  std::string in, report, svg;
  std::string relation = "trapezoid";
  std::string rho = "1";
  std::string strategy = "automatic";
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct VerifyArgs {
  std::string in;
  std::uint64_t seed = 0;
};

struct RenderArgs {
  std::string in, report, out;
  double width = 800;
};

struct ConvertArgs {
  std::string in, out;
  std::string to = "float";
};

std::string command_line(int argc, char** argv) {
  std::string out;
  for (int k = 1; k < argc; ++k) out += (k > 1 ? " " : "") + std::string(argv[k]);
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_text(path, text);
  }
}

std::vector<Scalar> split_scalars(const std::string& text, NumericMode mode, std::size_t expected, const char* flag) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(Scalar::parse(part, mode));
  if (out.size() != expected)
    throw PreconditionError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated values");
  return out;
}

// Seeded small rationals (or doubles) for free sample coordinates.
class Sampler {
 public:
  Sampler(std::uint64_t seed, NumericMode mode) : rng_(seed), mode_(mode) {}
  Scalar next() {
    if (mode_ == NumericMode::approximate) return Scalar::approx(std::uniform_real_distribution<double>(-6, 6)(rng_));
    return Scalar::exact(std::uniform_int_distribution<long>(-24, 24)(rng_), std::uniform_int_distribution<long>(1, 4)(rng_));
  }

 private:
  std::mt19937_64 rng_;
  NumericMode mode_;
};

std::size_t per_family(std::size_t count, Which which) {
  if (which != Which::both) return count;
  if (count % 2 != 0) throw PreconditionError("--count must be even when --which is both");
  return count / 2;
}

Family generate(const GenerateArgs& a) {
  const NumericMode mode = io::parse_mode(a.mode);
  const auto P = [&](const std::string& text) { return Scalar::parse(text, mode); };
  const Which which = parse_which(a.which);
  Sampler sampler(a.seed, mode);
  Family fam;
  if (a.family == "parallel") {
    std::vector<std::pair<Scalar, Scalar>> xs;
    for (std::size_t k = 0; k < a.count; ++k) {
      Scalar x1 = sampler.next();
      xs.emplace_back(std::move(x1), sampler.next());
    }
    fam = gen_parallel_lines(P(a.m), P(a.k1), P(a.k2), xs);
  } else if (a.family == "pencil") {
    std::vector<Vec2> pts;
    for (std::size_t k = 0; k < a.count; ++k) {
      Scalar x = sampler.next();
      pts.push_back({std::move(x), sampler.next()});
    }
    fam = gen_pencil(P(a.A), P(a.B), P(a.C), P(a.D), pts);
  } else if (a.family == "hyperboloid") {
    fam = gen_hyperboloid_rulings(P(a.A), P(a.B), P(a.C), circle_points(per_family(a.count, which), a.seed, mode), which);
  } else if (a.family == "paraboloid") {
    fam = gen_paraboloid_rulings(P(a.A), P(a.B), nonzero_samples(per_family(a.count, which), a.seed, mode), which);
  } else if (a.family == "subcase2") {
    const auto ts = nonzero_samples(per_family(a.count, which), a.seed, mode);
    SubcaseIIFamilies f = gen_subcase_ii(P(a.u), P(a.v), ts);
    if (which != Which::family2) {
      fam.intervals = f.family1.intervals;
      fam.warnings = f.family1.warnings;
    }
    if (which != Which::family1) {
      fam.intervals.insert(fam.intervals.end(), f.family2.intervals.begin(), f.family2.intervals.end());
      fam.warnings.insert(fam.warnings.end(), f.family2.warnings.begin(), f.family2.warnings.end());
    }
    dedupe(fam);
  } else {
    throw PreconditionError("unknown family '" + a.family + "'");
  }

  if (!a.rotate_x.empty() || !a.translate.empty()) {
    RigidMotion3 motion;
    if (!a.rotate_x.empty()) motion = RigidMotion3::rotate_x(PlanarRotation::from_tan_half(P(a.rotate_x)));
    if (!a.translate.empty()) {
      const auto t = split_scalars(a.translate, mode, 3, "--translate");
      motion = RigidMotion3::translate(t[0], t[1], t[2]).compose(motion);
    }
    Family moved = gen_transformed(fam.intervals, motion);
    moved.warnings.insert(moved.warnings.begin(), fam.warnings.begin(), fam.warnings.end());
    fam = std::move(moved);
  }

  if (a.pullback != "none") {
    std::vector<Line3> lines;
    for (const Interval& i : fam.intervals) lines.push_back(to_line(i));
    Family pulled;
    if (a.pullback == "perp") {
      pulled = gen_perp_pullback(lines);
    } else if (a.pullback == "ratio") {
      pulled = gen_ratio_pullback(lines, P(a.rho));
    } else {
      throw PreconditionError("unknown pullback '" + a.pullback + "'");
    }
    pulled.warnings.insert(pulled.warnings.begin(), fam.warnings.begin(), fam.warnings.end());
    fam = std::move(pulled);
  }
  return fam;
}

RegulusStrategy parse_strategy(const std::string& s) {
  if (s == "automatic") return RegulusStrategy::automatic;
  if (s == "exhaustive") return RegulusStrategy::exhaustive;
  if (s == "sampled") return RegulusStrategy::sampled;
  throw PreconditionError("unknown strategy '" + s + "'");
}

Relation parse_relation(const std::string& kind, const std::string& rho, NumericMode mode) {
  switch (parse_relation_kind(kind)) {
    case RelationKind::trapezoid: return Relation::trapezoid();
    case RelationKind::orthodiagonal: return Relation::orthodiagonal();
    case RelationKind::ratio: return Relation::ratio(Scalar::parse(rho, mode));
  }
  return Relation::trapezoid();
}

std::string summary(const StructureReport& r) {
  std::ostringstream out;
  const PairCounts& c = r.counts;
  out << "N=" << c.intervals << " pairs=" << c.total_with_multiplicity << " (left " << c.left_only << ", right "
      << c.right_only << ", both " << c.both << ")";
  out << " threshold=" << c.threshold << (c.exceeds_threshold() ? " exceeded" : "") << "\n";
  out << "concurrencies=" << r.concurrencies.size() << " coplanarities=" << r.coplanarities.size()
      << " reguli=" << r.reguli.size() << "\n";
  return out.str();
}

int run_analyze(const AnalyzeArgs& a, const std::string& cmd) {
  const io::Dataset data = io::read_dataset(a.in);
  AnalyzeOptions opt;
  opt.relation = parse_relation(a.relation, a.rho, data.mode);
  opt.regulus.strategy = parse_strategy(a.strategy);
  opt.regulus.samples = a.samples;
  opt.regulus.seed = a.seed;
  opt.regulus.threads = a.threads;
  opt.seed = a.seed;
  const StructureReport r = analyze(data.intervals, opt);
  const io::Json report = io::report_to_json(r, {cmd, a.seed, data.mode, a.strategy});
  if (a.report.empty()) {
    std::cout << io::dump(report);
  } else {
    io::write_text(a.report, io::dump(report));
    std::cout << summary(r);
  }
  if (!a.svg.empty()) {
    const auto overlays = svg::overlays_from_report(report);
    io::write_text(a.svg, svg::render(data.intervals, overlays));
  }
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  const io::Dataset data = io::read_dataset(a.in);
  const RotatedSet rotated = generic_rotation(data.intervals, a.seed);
  const I2LReport r = verify_i2l(rotated.intervals);
  std::cout << "N=" << r.intervals << " T=" << r.trapezoids << " P=" << r.intersecting_pairs
            << " holds=" << (r.holds ? "true" : "false") << "\n";
  if (!r.holds) throw VerificationFailed{};
  return kOk;
}

int run_render(const RenderArgs& a) {
  const io::Dataset data = io::read_dataset(a.in);
  std::vector<svg::Overlay> overlays;
  if (!a.report.empty()) {
    const io::Json report = io::read_json(a.report);
    const io::ReportSummary s = io::validate_report(report);
    if (s.intervals != data.intervals.size())
      throw PreconditionError("report describes " + std::to_string(s.intervals) + " intervals, dataset has " +
                              std::to_string(data.intervals.size()));
    overlays = svg::overlays_from_report(report);
  }
  emit(a.out, svg::render(data.intervals, overlays, a.width));
  return kOk;
}

int run_convert(const ConvertArgs& a) {
  const io::Dataset data = io::read_dataset(a.in);
  if (a.to != "float") throw PreconditionError("only exact -> float conversion is supported");
  emit(a.out, io::dump(io::to_json(io::to_float(data))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trapezoids among directed intervals: generate, analyze, verify, render, convert."};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a dataset for one configuration family");
  g->add_option("family", gen.family, "parallel | pencil | hyperboloid | paraboloid | subcase2")
      ->required()
      ->check(CLI::IsMember({"parallel", "pencil", "hyperboloid", "paraboloid", "subcase2"}));
  g->add_option("--m", gen.m, "slope of the two parallel lines");
  g->add_option("--k1", gen.k1, "intercept of the line holding initial points");
  g->add_option("--k2", gen.k2, "intercept of the line holding terminal points");
  g->add_option("--A", gen.A, "semi-axis, or plane coefficient for pencils");
  g->add_option("--B", gen.B, "semi-axis, or plane coefficient for pencils");
  g->add_option("--C", gen.C, "semi-axis, or plane coefficient for pencils");
  g->add_option("--D", gen.D, "plane coefficient for pencils");
  g->add_option("--u", gen.u, "subcase2 parameter u");
  g->add_option("--v", gen.v, "subcase2 parameter v");
  g->add_option("--which", gen.which, "family1 | family2 | both");
  g->add_option("--count", gen.count, "number of intervals");
  g->add_option("--seed", gen.seed, "sampling seed");
  g->add_option("--mode", gen.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  g->add_option("--translate", gen.translate, "translate the lines by p,q,r");
  g->add_option("--rotate-x", gen.rotate_x, "rotate the lines about the x-axis; tan of the half angle");
  g->add_option("--pullback", gen.pullback, "none | perp | ratio: pull the lines back through that map")
      ->check(CLI::IsMember({"none", "perp", "ratio"}));
  g->add_option("--rho", gen.rho, "slope ratio for --pullback ratio");
  g->add_option("--out", gen.out, "output file (default stdout)");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Count pairs and detect concurrencies, pencils and reguli");
  a->add_option("--in", an.in, "dataset")->required();
  a->add_option("--relation", an.relation, "trapezoid | orthodiagonal | ratio")
      ->check(CLI::IsMember({"trapezoid", "orthodiagonal", "ratio"}));
  a->add_option("--rho", an.rho, "slope ratio for --relation ratio");
  a->add_option("--report", an.report, "report file (default: report JSON on stdout)");
  a->add_option("--svg", an.svg, "also render the dataset with detected loci");
  a->add_option("--strategy", an.strategy, "regulus search: automatic | exhaustive | sampled")
      ->check(CLI::IsMember({"automatic", "exhaustive", "sampled"}));
  a->add_option("--samples", an.samples, "triples drawn by the sampled strategy");
  a->add_option("--seed", an.seed, "seed for rotation and sampling");
  a->add_option("--threads", an.threads, "worker threads for the regulus search");

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Check 2T = P - N on the dataset's line set");
  v->add_option("--in", ve.in, "dataset")->required();
  v->add_option("--seed", ve.seed, "seed for the generic rotation");

  RenderArgs re;
  auto* r = app.add_subcommand("render", "Draw a dataset, optionally with loci from a report");
  r->add_option("--in", re.in, "dataset")->required();
  r->add_option("--report", re.report, "report from analyze");
  r->add_option("--out", re.out, "SVG file (default stdout)");
  r->add_option("--width", re.width, "image width in pixels");

  ConvertArgs co;
  auto* c = app.add_subcommand("convert", "Convert an exact dataset to floating point");
  c->add_option("--in", co.in, "dataset")->required();
  c->add_option("--out", co.out, "output file (default stdout)");
  c->add_option("--to", co.to, "target mode")->check(CLI::IsMember({"float"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const std::string cmd = command_line(argc, argv);
  try {
    if (g->parsed()) {
      const Family fam = generate(gen);
      for (const std::string& w : fam.warnings) std::cerr << "warning: " << w << "\n";
      emit(gen.out, io::dump(io::to_json(io::Dataset{io::parse_mode(gen.mode), fam.intervals})));
      return kOk;
    }
    if (a->parsed()) return run_analyze(an, cmd);
    if (v->parsed()) return run_verify(ve);
    if (r->parsed()) return run_render(re);
    if (c->parsed()) return run_convert(co);
  } catch (const VerificationFailed&) {
    return kVerifyFailed;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
