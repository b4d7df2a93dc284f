#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fstefan/verify.hpp"

using namespace fstefan;

namespace {

const SweepFlag* find_flag(const SweepReport& r, const std::string& name) {
  for (const SweepFlag& f : r.flags) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidParameter;
}

}  // namespace

TEST_CASE("grids") {
  const std::vector<double> g = uniform_grid(0.0, 3.0, 301);
  REQUIRE(g.size() == 301);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 3.0);
  CHECK(g[100] == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> o = open_left_grid(0.0, 4.0, 400);
  REQUIRE(o.size() == 400);
  CHECK(o.front() == doctest::Approx(0.01));
  CHECK(o.back() == 4.0);
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), Error);
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), Error);
}

TEST_CASE("limit sweep passes with exact closed forms at alpha = 1") {
  const SweepReport r = limit_sweep();
  CHECK(r.all_pass());
  CHECK(r.worst_violation <= 0.0);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.rows.back()[0] == 1.0);
  for (std::size_t c = 1; c < 5; ++c) {
    CHECK(r.rows.back()[c] <= 1e-10);
    CHECK(r.rows[4][c] <= 1e-2);
    // the tail of the ladder still shrinks
    CHECK(r.rows[4][c] <= r.rows[3][c]);
    CHECK(r.rows[3][c] <= r.rows[2][c]);
  }
  const SweepFlag* f = find_flag(r, "gap_erfc_final_alpha");
  REQUIRE(f != nullptr);
  CHECK(f->calibrated);
  const SweepFlag* g = find_flag(r, "gap_erfc_alpha_one");
  REQUIRE(g != nullptr);
  CHECK_FALSE(g->calibrated);
}

TEST_CASE("limit sweep flags a threshold that is too tight") {
  LimitSweepConfig cfg;
  cfg.final_threshold = 1e-6;
  const SweepReport r = limit_sweep(cfg);
  CHECK_FALSE(r.all_pass());
  CHECK(r.worst_violation > 0.0);
  CHECK_FALSE(find_flag(r, "gap_mainardi_final_alpha")->pass);
  CHECK(code_of([] {
          LimitSweepConfig bad;
          bad.alphas = {0.9, 0.5};
          limit_sweep(bad);
        }) == ErrorCode::InvalidParameter);
}

TEST_CASE("ordering sweep: strict inequality on (0, 4]") {
  const SweepReport r = ordering_sweep(default_ordering_config());
  CHECK(r.all_pass());
  CHECK(r.worst_violation < 0.0);
  CHECK(r.rows.size() == 5 * 400);
  for (const auto& row : r.rows) CHECK(row[6] < 0.0);
  // the (0.2, 0.5, 0.9) tuple at x = 1
  bool seen = false;
  for (const auto& row : r.rows) {
    if (row[0] == 0.2 && row[3] == 1.0) {
      seen = true;
      CHECK(row[4] < row[5]);
    }
  }
  CHECK(seen);

  OrderingSweepConfig bad = default_ordering_config({0.5});
  bad.tuples = {{0.3, 0.9, 0.5, 1.0}};
  CHECK(code_of([&] { ordering_sweep(bad); }) == ErrorCode::InvalidParameter);
  bad = default_ordering_config({0.5});
  bad.x_grid = {0.0, 1.0};
  CHECK(code_of([&] { ordering_sweep(bad); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("convergence sweep: roots and temperatures approach the classical ones") {
  const SweepReport r = convergence_sweep();
  CHECK(r.all_pass());
  CHECK(r.worst_violation <= 0.0);
  REQUIRE(r.rows.size() == 5);
  const auto& last = r.rows.back();
  CHECK(std::fabs(last[1] - 0.6201) <= 5e-3);
  CHECK(std::fabs(last[2] - 0.6201) <= 5e-3);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i][1] < r.rows[i][2]);
    CHECK(r.rows[i][5] == doctest::Approx(r.rows[i][2] - r.rows[i][1]));
    if (i > 0) {
      CHECK(r.rows[i][3] <= r.rows[i - 1][3]);
      CHECK(r.rows[i][4] <= r.rows[i - 1][4]);
      CHECK(r.rows[i][6] <= r.rows[i - 1][6]);
      CHECK(r.rows[i][7] <= r.rows[i - 1][7]);
    }
  }
}

TEST_CASE("figure data") {
  const SweepReport r = figure_data();
  CHECK(r.all_pass());
  REQUIRE(r.rows.size() == 301);
  CHECK(r.columns.size() == 4);
  CHECK(r.rows.front()[0] == 0.0);
  for (std::size_t c = 1; c < 4; ++c) CHECK(r.rows.front()[c] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].size() == 4);
    CHECK(r.rows[i][1] < r.rows[i][2]);
    CHECK(r.rows[i][3] == std::exp(-r.rows[i][0] * r.rows[i][0]));
  }

  FigureConfig near_one;
  near_one.alpha = 0.99;
  const SweepReport n = figure_data(near_one);
  double worst = 0.0;
  for (const auto& row : n.rows) {
    worst = std::max({worst, std::fabs(row[1] - row[3]), std::fabs(row[2] - row[3])});
  }
  CHECK(worst <= 0.05);

  FigureConfig classical;
  classical.alpha = 1.0;
  CHECK(code_of([&] { figure_data(classical); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("property: sweeps are deterministic") {
  const SweepReport a = figure_data();
  const SweepReport b = figure_data();
  CHECK(a.rows == b.rows);
  CHECK(a.grid == b.grid);
  LimitSweepConfig cfg;
  cfg.alphas = {0.5, 0.9};
  CHECK(limit_sweep(cfg).rows == limit_sweep(cfg).rows);
}
