#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fstefan/report.hpp"
#include "fstefan/run_config.hpp"

using namespace fstefan;

namespace {

std::string temp_path(const char* name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

SweepReport small_report() {
  SweepReport r;
  r.name = "demo";
  r.grid = "two rows";
  r.columns = {"a", "b"};
  r.rows = {{0.1, 1.0 / 3.0}, {2.0, -1e-300}};
  r.flags = {{"ok", true, false, "fine"}, {"tuned", true, true, "calibrated"}};
  r.worst_violation = -0.5;
  return r;
}

}  // namespace

TEST_CASE("number lists") {
  CHECK(parse_number_list("0.5, 0.75,0.9") == std::vector<double>{0.5, 0.75, 0.9});
  CHECK(parse_number_list("1e-3") == std::vector<double>{1e-3});
  CHECK_THROWS_AS(parse_number_list("0.5,,0.9"), Error);
  CHECK_THROWS_AS(parse_number_list("0.5;0.9"), Error);
}

TEST_CASE("config keys set and validate") {
  RunConfig c;
  c.validate();
  c.set("grid_n", " 2048 ");
  c.set("alphas", "0.3, 0.6");
  c.set("format", "json");
  c.set("series_tol", "1e-10");
  c.set("limit_threshold", "2e-2");
  CHECK(c.grid_n == 2048);
  CHECK(c.alphas == std::vector<double>{0.3, 0.6});
  CHECK(c.format == OutputFormat::Json);
  CHECK(c.series.tol == 1e-10);
  CHECK(c.limit_threshold == 2e-2);
  c.validate();

  CHECK_THROWS_AS(c.set("gridn", "5"), Error);
  CHECK_THROWS_AS(c.set("grid_n", "5.5"), Error);
  CHECK_THROWS_AS(c.set("format", "xml"), Error);

  RunConfig bad;
  bad.alphas = {0.9, 0.5};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = RunConfig{};
  bad.bracket_lo = 6.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = RunConfig{};
  bad.convergence_threshold = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = RunConfig{};
  bad.rl_offsets = {0.1};
  CHECK_THROWS_AS(bad.validate(), Error);

  // every key is accepted by set and appears in the JSON dump
  const nlohmann::ordered_json j = RunConfig{}.to_json();
  for (const std::string& k : RunConfig::keys()) {
    if (k != "out") CHECK(j.contains(k));
  }
}

TEST_CASE("config file loading") {
  const std::string path = temp_path("fstefan_test.conf");
  {
    std::ofstream f(path);
    f << "# comment\n\n  grid_n = 1024  # trailing\nordering_alphas = 0.5\nformat=json\n";
  }
  RunConfig c;
  c.load_file(path);
  CHECK(c.grid_n == 1024);
  CHECK(c.ordering_alphas == std::vector<double>{0.5});
  CHECK(c.format == OutputFormat::Json);
  {
    std::ofstream f(path);
    f << "grid_n 1024\n";
  }
  CHECK_THROWS_AS(RunConfig{}.load_file(path), Error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(RunConfig{}.load_file(path), Error);
}

TEST_CASE("shipped default config equals the built-in defaults") {
  RunConfig loaded;
  loaded.load_file(FSTEFAN_DEFAULT_CONFIG);
  loaded.validate();
  CHECK(loaded.to_json() == RunConfig{}.to_json());
}

TEST_CASE("CSV round-trips every value") {
  const SweepReport r = small_report();
  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,b");
  std::size_t row = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::strtod(line.substr(0, comma).c_str(), nullptr) == r.rows[row][0]);
    CHECK(std::strtod(line.substr(comma + 1).c_str(), nullptr) == r.rows[row][1]);
    ++row;
  }
  CHECK(row == r.rows.size());
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0 / 0.0) == "inf");
}

TEST_CASE("JSON report layout") {
  const SweepReport r = small_report();
  nlohmann::ordered_json cfg;
  cfg["grid_n"] = 4096;
  const nlohmann::json j = nlohmann::json::parse(report_to_json(r, cfg));
  CHECK(j["schema"] == std::string(kReportSchema));
  CHECK(j["name"] == "demo");
  CHECK(j["config"]["grid_n"] == 4096);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["b"].get<double>() == 1.0 / 3.0);
  CHECK(j["flags"][1]["calibrated"] == true);
  CHECK(j["all_pass"] == true);
  CHECK(j["worst_violation"].get<double>() == -0.5);
  CHECK(report_to_json(r, cfg) == report_to_json(r, cfg));
}

TEST_CASE("output format names") {
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format(to_string(OutputFormat::Json)) == OutputFormat::Json);
  CHECK_THROWS_AS(parse_output_format("CSV"), Error);
}
