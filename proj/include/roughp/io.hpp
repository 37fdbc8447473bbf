#pragma once

// Report serialization and the instance file format. CSV columns are a
// stable contract: the documented prefix never changes, extra columns only
// append.

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "roughp/generator.hpp"
#include "roughp/heuristic.hpp"
#include "roughp/iso.hpp"
#include "roughp/language.hpp"

namespace roughp {

// n, sphere_size, failures, rate, bound, mode, samples, ci_lo, ci_hi, checked
std::string failure_stats_csv_header();
std::string failure_stats_csv_row(const FailureStats& stats);

nlohmann::json to_json(const FailureStats& stats);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const UniformityReport& report);
nlohmann::json to_json(const LengthBoundsReport& report);
nlohmann::json to_json(const GenReport& report, bool include_instances = true);
nlohmann::json to_json(const ChainTrace& trace);

std::string format_trace(const ChainTrace& trace);

// Header line "k=<int>", one instance per line in textual symbol form.
void write_instance_file(std::ostream& out, unsigned k, std::span<const SymString> instances);
std::pair<unsigned, std::vector<SymString>> read_instance_file(std::istream& in);

}  // namespace roughp
