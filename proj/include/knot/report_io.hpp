#pragma once

#include "knot/pipeline.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace knot {

using Json = nlohmann::ordered_json;

Json to_json(SliceReport const& r);
SliceReport report_from_json(Json const& j);

/// Two-space indented JSON of one report or of an array of reports.
std::string render_json(SliceReport const& r);
std::string render_json(std::span<SliceReport const> rows);

std::string render_csv(std::span<SliceReport const> rows);

/// Multi-line description of a single report.
std::string render_human(SliceReport const& r);
/// Aligned plain-text table, one row per report.
std::string render_table(std::span<SliceReport const> rows);

/// "1" for a settled value, "1-2" for a range.
std::string genus_range(int lower, int upper);

} // namespace knot
