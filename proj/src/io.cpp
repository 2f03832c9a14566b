#include "trapezoids/io.hpp"

#include <fstream>
#include <sstream>

namespace trapezoids::io {

std::string_view mode_name(NumericMode mode) { return mode == NumericMode::exact ? "exact" : "float"; }

NumericMode parse_mode(std::string_view text) {
  if (text == "exact") return NumericMode::exact;
  if (text == "float") return NumericMode::approximate;
  throw PreconditionError("unknown mode '" + std::string(text) + "' (expected exact or float)");
}

Json scalar_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.to_double();
}

Scalar scalar_from_json(const Json& j, NumericMode mode) {
  if (mode == NumericMode::exact) {
    if (!j.is_string()) throw PreconditionError("exact values must be strings like \"p/q\", got " + j.dump());
    return Scalar::parse(j.get<std::string>(), NumericMode::exact);
  }
  if (!j.is_number()) throw PreconditionError("float values must be JSON numbers, got " + j.dump());
  return Scalar::approx(j.get<double>());
}

Json to_json(const Dataset& data) {
  Json out;
  out["mode"] = mode_name(data.mode);
  Json list = Json::array();
  for (const Interval& i : data.intervals) {
    // Integer literals are mode-neutral; write them in the dataset's mode.
    const auto v = [&](const Scalar& s) { return scalar_json(s.in_mode(data.mode)); };
    list.push_back({{"a", v(i.a)}, {"b", v(i.b)}, {"c", v(i.c)}, {"d", v(i.d)}});
  }
  out["intervals"] = std::move(list);
  return out;
}

Dataset dataset_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("dataset must be a JSON object");
  if (!j.contains("mode") || !j["mode"].is_string()) throw PreconditionError("dataset needs a string field 'mode'");
  if (!j.contains("intervals") || !j["intervals"].is_array())
    throw PreconditionError("dataset needs an array field 'intervals'");
  Dataset data;
  data.mode = parse_mode(j["mode"].get<std::string>());
  std::size_t k = 0;
  for (const Json& rec : j["intervals"]) {
    if (!rec.is_object()) throw PreconditionError("interval " + std::to_string(k) + " is not an object");
    std::array<Scalar, 4> v;
    const char* names[] = {"a", "b", "c", "d"};
    for (std::size_t n = 0; n < 4; ++n) {
      if (!rec.contains(names[n])) throw PreconditionError("interval " + std::to_string(k) + " lacks '" + names[n] + "'");
      v[n] = scalar_from_json(rec[names[n]], data.mode);
    }
    try {
      data.intervals.push_back(Interval::make(v[0], v[1], v[2], v[3]));
    } catch (const PreconditionError& e) {
      throw PreconditionError("interval " + std::to_string(k) + ": " + e.what());
    }
    ++k;
  }
  require_distinct(data.intervals);
  return data;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw PreconditionError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

Dataset read_dataset(const std::filesystem::path& path) {
  const Json j = read_json(path);
  try {
    return dataset_from_json(j);
  } catch (const Json::exception& e) {
    throw PreconditionError(path.string() + ": " + e.what());
  }
}

void write_dataset(const std::filesystem::path& path, const Dataset& data) { write_text(path, dump(to_json(data))); }

Dataset to_float(const Dataset& data) {
  Dataset out{NumericMode::approximate, {}};
  for (const Interval& i : data.intervals)
    out.intervals.push_back({i.a.in_mode(NumericMode::approximate), i.b.in_mode(NumericMode::approximate),
                             i.c.in_mode(NumericMode::approximate), i.d.in_mode(NumericMode::approximate)});
  return out;
}

namespace {

Json vec(std::initializer_list<const Scalar*> xs) {
  Json out = Json::array();
  for (const Scalar* x : xs) out.push_back(scalar_json(*x));
  return out;
}

template <std::size_t K>
Json vec(const std::array<Scalar, K>& xs) {
  Json out = Json::array();
  for (const Scalar& x : xs) out.push_back(scalar_json(x));
  return out;
}

Json members(const std::vector<std::size_t>& idx, std::size_t n) {
  Json out = Json::array();
  for (std::size_t k : idx) {
    const LineRef r = line_ref(k, n);
    out.push_back({{"interval", r.interval}, {"reversed", r.reversed}});
  }
  return out;
}

Json line2(const std::optional<Line2>& l) {
  if (!l) return nullptr;
  return vec({&l->alpha, &l->beta, &l->gamma});
}

Json conic(const std::optional<Conic>& c) {
  if (!c) return nullptr;
  return {{"coefficients", vec(c->coefficients())}, {"classification", to_string(c->classification())}};
}

Json subcase(const std::optional<SubcaseWitness>& s) {
  if (!s) return nullptr;
  Json out{{"case", to_string(s->subcase)},
           {"system", Json::array({vec(s->system[0]), vec(s->system[1])})}};
  if (s->subcase == Subcase::III) {
    out["m"] = vec(s->m);
    out["r"] = vec(s->r);
    out["point"] = s->point ? vec({&s->point->x, &s->point->y, &s->point->z}) : Json(nullptr);
  }
  return out;
}

Json pencil(const std::optional<Pencil>& p) {
  if (!p) return nullptr;
  if (p->kind == Pencil::Kind::translation)
    return {{"kind", "translation"}, {"translation", vec({&p->translation.x, &p->translation.y})}};
  return {{"kind", "homothety"},
          {"center", vec({&p->center.x, &p->center.y})},
          {"ratio", vec({&p->ratio_b, &p->ratio_a})},
          {"interior", p->interior},
          {"endpoint", p->endpoint}};
}

}  // namespace

Json report_to_json(const StructureReport& r, const Provenance& prov) {
  Json out;
  out["provenance"] = {{"command", prov.command},
                       {"seed", prov.seed},
                       {"mode", mode_name(prov.mode)},
                       {"tolerance", prov.mode == NumericMode::exact ? Json(nullptr) : Json(kTolerance)},
                       {"relation", r.relation.name()},
                       {"rho", scalar_json(r.relation.rho)},
                       {"strategy", prov.strategy}};
  const PairCounts& c = r.counts;
  out["counts"] = {{"intervals", c.intervals},
                   {"left_only", c.left_only},
                   {"right_only", c.right_only},
                   {"both", c.both},
                   {"total_with_multiplicity", c.total_with_multiplicity},
                   {"threshold", c.threshold},
                   {"exceeds_threshold", c.exceeds_threshold()}};
  out["rotation"] = {{"cos", scalar_json(r.rotation.cos)}, {"sin", scalar_json(r.rotation.sin)}};

  const std::size_t n = r.intervals;
  Json conc = Json::array();
  for (const ConcurrencyWitness& w : r.concurrencies)
    conc.push_back({{"point", vec({&w.point.x, &w.point.y, &w.point.z})},
                    {"members", members(w.members, n)},
                    {"initial_locus", line2(w.initial_locus)},
                    {"terminal_locus", line2(w.terminal_locus)}});
  Json cop = Json::array();
  for (const CoplanarWitness& w : r.coplanarities)
    cop.push_back({{"plane", vec({&w.plane.A, &w.plane.B, &w.plane.C, &w.plane.D})},
                   {"members", members(w.members, n)},
                   {"pencil", pencil(w.pencil)}});
  Json reg = Json::array();
  for (std::size_t k = 0; k < r.reguli.size(); ++k) {
    const RegulusWitness& w = r.reguli[k];
    Json rulings = Json::array();
    if (k < r.endpoint_loci.size()) {
      for (const RulingLoci& rl : r.endpoint_loci[k]) {
        Json loci = Json::array();
        for (const EndpointLocus& l : rl.loci)
          loci.push_back({{"name", l.name},
                          {"points", l.points},
                          {"line", line2(l.line)},
                          {"conic", conic(l.conic)},
                          {"nullspace_dimension", l.nullspace_dimension}});
        rulings.push_back({{"subcase", subcase(rl.subcase)}, {"loci", std::move(loci)}});
      }
    }
    reg.push_back({{"quadric",
                    {{"coefficients", vec(w.quadric.coefficients())},
                     {"classification", to_string(w.quadric.classification())}}},
                   {"ruling1", members(w.ruling1, n)},
                   {"ruling2", members(w.ruling2, n)},
                   {"endpoint_loci", std::move(rulings)}});
  }
  out["structures"] = {{"concurrencies", std::move(conc)}, {"coplanarities", std::move(cop)}, {"reguli", std::move(reg)}};
  return out;
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw PreconditionError(std::string("report lacks field '") + name + "'");
  return j[name];
}

void check_members(const Json& list, std::size_t n, const char* where, bool allow_empty = false) {
  if (!list.is_array() || (list.empty() && !allow_empty))
    throw PreconditionError(std::string(where) + ": members must be a nonempty array");
  for (const Json& m : list) {
    const Json& idx = field(m, "interval");
    if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= n)
      throw PreconditionError(std::string(where) + ": member index " + idx.dump() + " out of range");
    if (!field(m, "reversed").is_boolean()) throw PreconditionError(std::string(where) + ": 'reversed' must be boolean");
  }
}

}  // namespace

ReportSummary validate_report(const Json& report) {
  field(report, "provenance");
  const Json& counts = field(report, "counts");
  const Json& n_json = field(counts, "intervals");
  if (!n_json.is_number_unsigned()) throw PreconditionError("counts.intervals must be a count");
  ReportSummary s;
  s.intervals = n_json.get<std::size_t>();
  const Json& st = field(report, "structures");
  for (const Json& w : field(st, "concurrencies")) {
    check_members(field(w, "members"), s.intervals, "concurrency");
    if (field(w, "point").size() != 3) throw PreconditionError("concurrency point needs three coordinates");
    ++s.concurrencies;
  }
  for (const Json& w : field(st, "coplanarities")) {
    check_members(field(w, "members"), s.intervals, "coplanarity");
    if (field(w, "plane").size() != 4) throw PreconditionError("plane needs four coefficients");
    ++s.coplanarities;
  }
  for (const Json& w : field(st, "reguli")) {
    check_members(field(w, "ruling1"), s.intervals, "regulus");
    check_members(field(w, "ruling2"), s.intervals, "regulus", true);
    if (field(field(w, "quadric"), "coefficients").size() != Quadric::kSize)
      throw PreconditionError("quadric needs ten coefficients");
    ++s.reguli;
  }
  return s;
}

}  // namespace trapezoids::io
