#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fstefan/report.hpp"
#include "fstefan/specfun.hpp"

namespace fstefan {

// Environment variable naming a default config file.
inline constexpr const char* kConfigEnvVar = "FSTEFAN_CONFIG";

// Reproducible run settings. Read from a flat `key = value` file ('#'
// starts a comment), then overridden by command-line flags.
struct RunConfig {
  SeriesAccuracy series{};
  double solver_tol = 1e-12;
  double bracket_lo = 1e-4;
  double bracket_hi = 5.0;
  int grid_n = 4096;     // Caputo / PDE quadrature
  int rl_grid_n = 8192;  // RL Stefan-condition quadrature
  std::vector<double> rl_offsets{0.2, 0.1, 0.05};
  std::vector<double> alphas{0.5, 0.75, 0.9, 0.99, 0.999};
  double x_max = 3.0;
  int x_points = 301;
  std::vector<double> ordering_alphas{0.25, 0.5, 0.75, 0.9};
  double ordering_x_max = 4.0;
  int ordering_points = 400;
  double t_min = 0.5;
  double t_max = 2.0;
  int t_points = 16;
  int box_x_points = 41;
  double limit_threshold = 1e-2;        // calibrated, limit sweep at the last alpha
  double convergence_threshold = 5e-3;  // calibrated, root gaps at the last alpha
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: standard output

  void set(std::string_view key, std::string_view value);
  void load_file(const std::string& path);
  void validate() const;
  nlohmann::ordered_json to_json() const;

  static std::vector<std::string> keys();
};

std::vector<double> parse_number_list(std::string_view text);

}  // namespace fstefan
