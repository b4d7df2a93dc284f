#include "fstefan/report.hpp"

#include <cmath>
#include <cstdio>

namespace fstefan {

const char* to_string(OutputFormat f) noexcept { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  fail(ErrorCode::InvalidParameter, "output format must be csv or json, got " + std::string(name));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const SweepReport& report) {
  std::string out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) out += ',';
    out += report.columns[c];
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string report_to_json(const SweepReport& report, const nlohmann::ordered_json& config) {
  using nlohmann::ordered_json;
  // JSON has no inf/nan; non-finite cells are written as strings
  auto cell = [](double v) -> ordered_json {
    if (std::isfinite(v)) return v;
    return format_double(v);
  };
  ordered_json j;
  j["schema"] = kReportSchema;
  j["name"] = report.name;
  j["grid"] = report.grid;
  j["config"] = config;
  j["columns"] = report.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < report.columns.size(); ++c) obj[report.columns[c]] = cell(row[c]);
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  ordered_json flags = ordered_json::array();
  for (const SweepFlag& f : report.flags) {
    flags.push_back({{"name", f.name}, {"pass", f.pass}, {"calibrated", f.calibrated}, {"detail", f.detail}});
  }
  j["flags"] = std::move(flags);
  j["worst_violation"] = cell(report.worst_violation);
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace fstefan
