#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "trapezoids/detect.hpp"

namespace trapezoids::io {

using Json = nlohmann::ordered_json;

/// A list of intervals in one numeric mode. On disk:
/// {"mode": "exact"|"float", "intervals": [{"a":..,"b":..,"c":..,"d":..}, ...]}
/// with exact values as "p/q" strings and float values as JSON numbers.
struct Dataset {
  NumericMode mode = NumericMode::exact;
  std::vector<Interval> intervals;
};

std::string_view mode_name(NumericMode mode);
NumericMode parse_mode(std::string_view text);

Json to_json(const Dataset& data);
/// Throws PreconditionError on schema errors, mixed modes, zero-length or
/// repeated intervals.
Dataset dataset_from_json(const Json& j);

std::string dump(const Json& j);
/// Throws IoError when the file cannot be read, PreconditionError when it is
/// not JSON.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

Dataset read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path, const Dataset& data);

/// Every value converted to floating point.
Dataset to_float(const Dataset& data);

struct Provenance {
  std::string command;
  std::uint64_t seed = 0;
  NumericMode mode = NumericMode::exact;
  std::string strategy = "automatic";
};

Json scalar_json(const Scalar& s);
/// Reads a value written by scalar_json in the given mode.
Scalar scalar_from_json(const Json& j, NumericMode mode);

/// Report layout: provenance, counts, rotation, structures. Member lines are
/// {"interval": k, "reversed": bool}.
Json report_to_json(const StructureReport& report, const Provenance& provenance);

struct ReportSummary {
  std::size_t intervals = 0;
  std::size_t concurrencies = 0;
  std::size_t coplanarities = 0;
  std::size_t reguli = 0;
};

/// Checks the report layout and that every member index is below the
/// interval count. Throws PreconditionError otherwise.
ReportSummary validate_report(const Json& report);

}  // namespace trapezoids::io
