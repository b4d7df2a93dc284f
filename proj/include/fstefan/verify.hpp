#pragma once

#include <string>
#include <vector>

#include "fstefan/equations.hpp"
#include "fstefan/specfun.hpp"

namespace fstefan {

struct SweepFlag {
  std::string name;
  bool pass = false;
  bool calibrated = false;  // threshold chosen empirically, not a proven bound
  std::string detail;
};

// Tabular result of one verification sweep. Rows are stored in grid order
// so that reruns serialize identically.
struct SweepReport {
  std::string name;
  std::string grid;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<SweepFlag> flags;
  double worst_violation = 0.0;  // <= 0 when every threshold holds

  bool all_pass() const;
};

std::vector<double> uniform_grid(double lo, double hi, int points);
// points spread over (lo, hi], excluding lo itself
std::vector<double> open_left_grid(double lo, double hi, int points);

struct LimitSweepConfig {
  std::vector<double> alphas{0.5, 0.75, 0.9, 0.99, 0.999};
  std::vector<double> x_grid = uniform_grid(0.0, 3.0, 301);
  double final_threshold = 1e-2;       // calibrated
  double classical_threshold = 1e-10;  // exact identities at alpha = 1
  double monotone_slack = 1e-12;
  SeriesAccuracy accuracy{};
};

// Sup-norm gaps between the Wright/Mainardi branches and their classical
// limits, one row per alpha plus a closing alpha = 1 row.
SweepReport limit_sweep(const LimitSweepConfig& cfg = {});

struct OrderingTuple {
  double rho;
  double mu;
  double delta;
  double scale = 1.0;  // W is evaluated at -scale * x
};

struct OrderingSweepConfig {
  std::vector<OrderingTuple> tuples;
  std::vector<double> x_grid;
  SeriesAccuracy accuracy{};
};

// Default configuration: the Mainardi / W(a/2) pairs for the given alphas on
// 400 points of (0, 4] at argument 2x, plus the (0.2, 0.5, 0.9) tuple.
OrderingSweepConfig default_ordering_config(const std::vector<double>& alphas = {0.25, 0.5, 0.75, 0.9});

// Checks Gamma(delta) W(-x,-rho,delta) < Gamma(mu) W(-x,-rho,mu) on the grid.
SweepReport ordering_sweep(const OrderingSweepConfig& cfg);

struct ConvergenceSweepConfig {
  std::vector<double> alphas{0.5, 0.75, 0.9, 0.99, 0.999};
  double final_threshold = 5e-3;
  double min_gap = 1e-8;
  int x_points = 41;
  std::vector<double> t_grid = uniform_grid(0.5, 2.0, 16);
  RootProblem solver{};
};

// Front coefficients against the classical eta_1 and the sup-norm gap of
// both temperature fields to the classical one on a fixed (x, t) box.
SweepReport convergence_sweep(const ConvergenceSweepConfig& cfg = {});

struct FigureConfig {
  double alpha = 0.75;
  std::vector<double> x_grid = uniform_grid(0.0, 3.0, 301);
  SeriesAccuracy accuracy{};
};

// (x, Gamma(1-a/2) M_{a/2}(2x), Gamma(a/2) W(-2x,-a/2,a/2), exp(-x^2)).
SweepReport figure_data(const FigureConfig& cfg = {});

}  // namespace fstefan
