#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupwalk/harmonic.hpp"
#include "groupwalk/measure.hpp"

namespace groupwalk {

// Measure files look like
//   {"group": {...}, "mode": "rational", "entries": [[[1,0], "3/8"], ...]}
// with rational coefficients as "p/q" strings and real ones as JSON numbers.
nlohmann::json measure_to_json(const RationalMeasure& mu);
nlohmann::json measure_to_json(const RealMeasure& mu);

using AnyMeasure = std::variant<RationalMeasure, RealMeasure>;
AnyMeasure measure_from_json(const nlohmann::json& j);

// Convenience accessors that insist on one mode.
RationalMeasure rational_measure_from_json(const nlohmann::json& j);
RealMeasure real_measure_from_json(const nlohmann::json& j);

// {"group": {...}, "dimension": d, "points": [...], "vectors": [["1","0",...], ...]}
nlohmann::json basis_to_json(const HarmonicBasis& basis);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Shortest round-trip decimal rendering.
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace groupwalk
