#include "fstefan/run_config.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace fstefan {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  // from_chars is locale independent
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(),
          ErrorCode::InvalidParameter, "config key " + std::string(key) + ": not a number: " + std::string(text));
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(),
          ErrorCode::InvalidParameter, "config key " + std::string(key) + ": not an integer: " + std::string(text));
  return v;
}

void check_ladder(const std::vector<double>& v, const char* what) {
  require(!v.empty(), ErrorCode::InvalidParameter, std::string(what) + " is empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i] > 0.0 && v[i] < 1.0, ErrorCode::InvalidParameter, std::string(what) + " entries must lie in (0, 1)");
    require(i == 0 || v[i] > v[i - 1], ErrorCode::InvalidParameter, std::string(what) + " must be increasing");
  }
}

}  // namespace

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_double("list", text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::string> RunConfig::keys() {
  return {"series_tol", "series_max_terms", "series_rounding_limit", "solver_tol", "bracket_lo", "bracket_hi",
          "grid_n", "rl_grid_n", "rl_offsets", "alphas", "x_max", "x_points", "ordering_alphas",
          "ordering_x_max", "ordering_points", "t_min", "t_max", "t_points", "box_x_points", "limit_threshold", "convergence_threshold", "format", "out"};
}

void RunConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "series_tol") series.tol = parse_double(key, value);
  else if (key == "series_max_terms") series.max_terms = parse_int(key, value);
  else if (key == "series_rounding_limit") series.rounding_limit = parse_double(key, value);
  else if (key == "solver_tol") solver_tol = parse_double(key, value);
  else if (key == "bracket_lo") bracket_lo = parse_double(key, value);
  else if (key == "bracket_hi") bracket_hi = parse_double(key, value);
  else if (key == "grid_n") grid_n = parse_int(key, value);
  else if (key == "rl_grid_n") rl_grid_n = parse_int(key, value);
  else if (key == "rl_offsets") rl_offsets = parse_number_list(value);
  else if (key == "alphas") alphas = parse_number_list(value);
  else if (key == "x_max") x_max = parse_double(key, value);
  else if (key == "x_points") x_points = parse_int(key, value);
  else if (key == "ordering_alphas") ordering_alphas = parse_number_list(value);
  else if (key == "ordering_x_max") ordering_x_max = parse_double(key, value);
  else if (key == "ordering_points") ordering_points = parse_int(key, value);
  else if (key == "t_min") t_min = parse_double(key, value);
  else if (key == "t_max") t_max = parse_double(key, value);
  else if (key == "t_points") t_points = parse_int(key, value);
  else if (key == "box_x_points") box_x_points = parse_int(key, value);
  else if (key == "limit_threshold") limit_threshold = parse_double(key, value);
  else if (key == "convergence_threshold") convergence_threshold = parse_double(key, value);
  else if (key == "format") format = parse_output_format(value);
  else if (key == "out") out = std::string(value);
  else fail(ErrorCode::InvalidParameter, "unknown config key: " + std::string(key));
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::InvalidParameter, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    require(eq != std::string_view::npos, ErrorCode::InvalidParameter,
            path + ":" + std::to_string(lineno) + ": expected key = value");
    set(trim(s.substr(0, eq)), s.substr(eq + 1));
  }
}

void RunConfig::validate() const {
  series.validate();
  require(solver_tol > 0.0, ErrorCode::InvalidParameter, "solver_tol must be positive");
  require(bracket_lo >= 0.0 && bracket_lo < bracket_hi, ErrorCode::InvalidParameter,
          "bracket needs 0 <= bracket_lo < bracket_hi");
  require(grid_n >= 2 && rl_grid_n >= 2, ErrorCode::InvalidParameter, "grid sizes must be >= 2");
  require(rl_offsets.size() >= 2, ErrorCode::InvalidParameter, "rl_offsets needs >= 2 entries");
  check_ladder(alphas, "alphas");
  check_ladder(ordering_alphas, "ordering_alphas");
  require(x_max > 0.0 && x_points >= 2, ErrorCode::InvalidParameter, "x grid needs x_max > 0, x_points >= 2");
  require(ordering_x_max > 0.0 && ordering_points >= 1, ErrorCode::InvalidParameter,
          "ordering grid needs ordering_x_max > 0, ordering_points >= 1");
  require(t_min > 0.0 && t_min < t_max && t_points >= 2, ErrorCode::InvalidParameter,
          "t grid needs 0 < t_min < t_max and t_points >= 2");
  require(box_x_points >= 2, ErrorCode::InvalidParameter, "box_x_points must be >= 2");
  require(limit_threshold > 0.0 && convergence_threshold > 0.0, ErrorCode::InvalidParameter,
          "thresholds must be positive");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["series_tol"] = series.tol;
  j["series_max_terms"] = series.max_terms;
  j["series_rounding_limit"] = series.rounding_limit;
  j["solver_tol"] = solver_tol;
  j["bracket_lo"] = bracket_lo;
  j["bracket_hi"] = bracket_hi;
  j["grid_n"] = grid_n;
  j["rl_grid_n"] = rl_grid_n;
  j["rl_offsets"] = rl_offsets;
  j["alphas"] = alphas;
  j["x_max"] = x_max;
  j["x_points"] = x_points;
  j["ordering_alphas"] = ordering_alphas;
  j["ordering_x_max"] = ordering_x_max;
  j["ordering_points"] = ordering_points;
  j["t_min"] = t_min;
  j["t_max"] = t_max;
  j["t_points"] = t_points;
  j["box_x_points"] = box_x_points;
  j["limit_threshold"] = limit_threshold;
  j["convergence_threshold"] = convergence_threshold;
  j["format"] = to_string(format);
  return j;
}

}  // namespace fstefan
