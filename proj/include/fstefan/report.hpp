#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fstefan/verify.hpp"

namespace fstefan {

enum class OutputFormat { Csv, Json };

const char* to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view name);

// Shortest-safe round trip: 17 significant digits.
std::string format_double(double v);

// Header row then one line per row; flags are not part of the CSV body.
std::string to_csv(const SweepReport& report);

// {"schema", "name", "grid", "config", "columns", "rows", "flags", "worst_violation", "all_pass"}
std::string report_to_json(const SweepReport& report, const nlohmann::ordered_json& config);

inline constexpr std::string_view kReportSchema = "fstefan.sweep-report/1";

}  // namespace fstefan
