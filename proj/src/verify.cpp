#include "fstefan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "fstefan/kernels.hpp"
#include "fstefan/stefan.hpp"

namespace fstefan {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// v[i+1] <= v[i] + slack for the whole column
bool nonincreasing(const std::vector<double>& v, double slack) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] <= v[i - 1] + slack)) return false;
  }
  return true;
}

std::vector<double> column(const SweepReport& r, std::size_t c, std::size_t first = 0,
                           std::size_t last = std::numeric_limits<std::size_t>::max()) {
  std::vector<double> out;
  for (std::size_t i = first; i < r.rows.size() && i < last; ++i) out.push_back(r.rows[i][c]);
  return out;
}

void check_alpha_ladder(const std::vector<double>& alphas) {
  require(!alphas.empty(), ErrorCode::InvalidParameter, "alpha ladder is empty");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    require(alphas[i] > 0.0 && alphas[i] < 1.0, ErrorCode::InvalidParameter,
            "ladder alphas must lie in (0, 1)");
    require(i == 0 || alphas[i] > alphas[i - 1], ErrorCode::InvalidParameter,
            "ladder alphas must be strictly increasing");
  }
}

}  // namespace

bool SweepReport::all_pass() const {
  return std::all_of(flags.begin(), flags.end(), [](const SweepFlag& f) { return f.pass; });
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  require(points >= 2 && lo < hi, ErrorCode::InvalidParameter, "grid needs >= 2 points and lo < hi");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return g;
}

std::vector<double> open_left_grid(double lo, double hi, int points) {
  require(points >= 1 && lo < hi, ErrorCode::InvalidParameter, "grid needs >= 1 point and lo < hi");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) g[static_cast<std::size_t>(i - 1)] = lo + (hi - lo) * i / points;
  return g;
}

SweepReport limit_sweep(const LimitSweepConfig& cfg) {
  check_alpha_ladder(cfg.alphas);
  require(!cfg.x_grid.empty(), ErrorCode::InvalidParameter, "x grid is empty");
  SweepReport r;
  r.name = "limits";
  r.grid = "alpha ladder x " + std::to_string(cfg.x_grid.size()) + " points on [" +
           num(cfg.x_grid.front()) + ", " + num(cfg.x_grid.back()) + "]";
  r.columns = {"alpha", "gap_mainardi", "gap_wright_half", "gap_erf", "gap_erfc"};

  const std::size_t nx = cfg.x_grid.size();
  std::vector<double> gauss(nx), erf_ref(nx), erfc_ref(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = cfg.x_grid[i];
    gauss[i] = std::exp(-x * x) * std::numbers::inv_sqrtpi;
    erf_ref[i] = erf(x);
    erfc_ref[i] = erfc(x);
  }

  std::vector<double> ladder = cfg.alphas;
  ladder.push_back(1.0);
  for (double a : ladder) {
    const double nu = 0.5 * a;
    const WrightSeries mainardi_s(-nu, 1.0 - nu, cfg.accuracy);
    const WrightSeries half_s(-nu, nu, cfg.accuracy);
    const WrightSeries one_s(-nu, 1.0, cfg.accuracy);
    std::vector<double> m(nx), w(nx), e(nx), ec(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      const double y = 2.0 * cfg.x_grid[i];
      m[i] = mainardi_s.decaying(y).value;
      w[i] = half_s.decaying(y).value;
      ec[i] = one_s.decaying(y).value;
      e[i] = 1.0 - ec[i];
    }
    r.rows.push_back({a, kernels::max_abs_diff(m, gauss), kernels::max_abs_diff(w, gauss),
                      kernels::max_abs_diff(e, erf_ref), kernels::max_abs_diff(ec, erfc_ref)});
  }

  const std::size_t fractional_rows = cfg.alphas.size();
  const std::vector<double>& final_row = r.rows[fractional_rows - 1];
  const std::vector<double>& closed_row = r.rows[fractional_rows];
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 1; c < r.columns.size(); ++c) {
    const std::vector<double> col = column(r, c);
    const bool mono = nonincreasing(col, cfg.monotone_slack);
    r.flags.push_back({r.columns[c] + "_nonincreasing", mono, false,
                       "sup-norm gap nonincreasing along the alpha ladder"});
    double rise = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < col.size(); ++i) rise = std::max(rise, col[i] - col[i - 1] - cfg.monotone_slack);
    worst = std::max(worst, rise);

    r.flags.push_back({r.columns[c] + "_final_alpha", final_row[c] <= cfg.final_threshold, true,
                       "gap " + num(final_row[c]) + " at alpha " + num(final_row[0]) +
                           " vs calibrated threshold " + num(cfg.final_threshold)});
    worst = std::max(worst, final_row[c] - cfg.final_threshold);

    r.flags.push_back({r.columns[c] + "_alpha_one", closed_row[c] <= cfg.classical_threshold, false,
                       "gap " + num(closed_row[c]) + " at alpha 1"});
    worst = std::max(worst, closed_row[c] - cfg.classical_threshold);
  }
  r.worst_violation = worst;
  return r;
}

OrderingSweepConfig default_ordering_config(const std::vector<double>& alphas) {
  OrderingSweepConfig cfg;
  for (double a : alphas) {
    require(a > 0.0 && a < 1.0, ErrorCode::InvalidParameter, "ordering alphas must lie in (0, 1)");
    cfg.tuples.push_back({0.5 * a, 0.5 * a, 1.0 - 0.5 * a, 2.0});
  }
  cfg.tuples.push_back({0.2, 0.5, 0.9, 1.0});
  cfg.x_grid = open_left_grid(0.0, 4.0, 400);
  return cfg;
}

SweepReport ordering_sweep(const OrderingSweepConfig& cfg) {
  require(!cfg.tuples.empty() && !cfg.x_grid.empty(), ErrorCode::InvalidParameter,
          "ordering sweep needs tuples and a grid");
  SweepReport r;
  r.name = "ordering";
  r.grid = std::to_string(cfg.tuples.size()) + " tuples x " + std::to_string(cfg.x_grid.size()) +
           " points on (0, " + num(cfg.x_grid.back()) + "]";
  r.columns = {"rho", "mu", "delta", "x", "gamma_delta_w_delta", "gamma_mu_w_mu", "difference"};
  double worst = -std::numeric_limits<double>::infinity();
  for (const OrderingTuple& tup : cfg.tuples) {
    require(tup.rho > 0.0 && tup.rho <= tup.mu && tup.mu < tup.delta && tup.rho < 1.0,
            ErrorCode::InvalidParameter, "ordering tuples need 0 < rho <= mu < delta");
    const WrightSeries w_delta(-tup.rho, tup.delta, cfg.accuracy);
    const WrightSeries w_mu(-tup.rho, tup.mu, cfg.accuracy);
    const double g_delta = gamma(tup.delta);
    const double g_mu = gamma(tup.mu);
    double tuple_worst = -std::numeric_limits<double>::infinity();
    for (double x : cfg.x_grid) {
      require(x > 0.0, ErrorCode::InvalidParameter, "ordering grid must exclude x = 0");
      const double lhs = g_delta * w_delta.decaying(tup.scale * x).value;
      const double rhs = g_mu * w_mu.decaying(tup.scale * x).value;
      r.rows.push_back({tup.rho, tup.mu, tup.delta, x, lhs, rhs, lhs - rhs});
      tuple_worst = std::max(tuple_worst, lhs - rhs);
    }
    // both sides collapse to 1 at x = 0
    const double at_zero = g_delta * rgamma(tup.delta) - g_mu * rgamma(tup.mu);
    r.flags.push_back({"strict_ordering(" + num(tup.rho) + "," + num(tup.mu) + "," + num(tup.delta) + ")",
                       tuple_worst < 0.0, false, "max difference " + num(tuple_worst)});
    r.flags.push_back({"equal_at_zero(" + num(tup.rho) + "," + num(tup.mu) + "," + num(tup.delta) + ")",
                       std::fabs(at_zero) <= 4.0 * std::numeric_limits<double>::epsilon(), false,
                       "difference at x = 0: " + num(at_zero)});
    worst = std::max(worst, tuple_worst);
  }
  r.worst_violation = worst;
  return r;
}

SweepReport convergence_sweep(const ConvergenceSweepConfig& cfg) {
  check_alpha_ladder(cfg.alphas);
  require(cfg.x_points >= 2 && cfg.t_grid.size() >= 1, ErrorCode::InvalidParameter,
          "temperature box needs x_points >= 2 and a t grid");
  SweepReport r;
  r.name = "convergence";
  r.columns = {"alpha", "eta", "xi", "eta_gap", "xi_gap", "xi_minus_eta", "temp_gap_caputo", "temp_gap_rl"};

  const SelfSimilarSolution classical = SelfSimilarSolution::make(SolutionKind::Classical, Alpha{1.0}, cfg.solver);
  const double eta1 = classical.coefficient().value;

  std::vector<SelfSimilarSolution> caputo, rl;
  for (double a : cfg.alphas) {
    caputo.push_back(SelfSimilarSolution::make(SolutionKind::CaputoP1, Alpha{a}, cfg.solver));
    rl.push_back(SelfSimilarSolution::make(SolutionKind::RiemannLiouvilleP2, Alpha{a}, cfg.solver));
  }

  // one fixed box for the whole ladder, inside every front
  const double t_lo = *std::min_element(cfg.t_grid.begin(), cfg.t_grid.end());
  double min_front = classical.front(t_lo);
  for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
    for (double t : cfg.t_grid) {
      min_front = std::min({min_front, caputo[i].front(t), rl[i].front(t)});
    }
  }
  const std::vector<double> xs = uniform_grid(0.0, 0.9 * min_front, cfg.x_points);
  r.grid = std::to_string(cfg.alphas.size()) + " alphas; box x in [0, " + num(0.9 * min_front) + "] x " +
           std::to_string(xs.size()) + ", t in [" + num(t_lo) + ", " +
           num(*std::max_element(cfg.t_grid.begin(), cfg.t_grid.end())) + "] x " +
           std::to_string(cfg.t_grid.size());

  auto sup_gap = [&](const SelfSimilarSolution& s) {
    double g = 0.0;
    for (double t : cfg.t_grid) {
      for (double x : xs) {
        g = std::max(g, std::fabs(s.temperature({x, t}) - classical.temperature({x, t})));
      }
    }
    return g;
  };

  bool ordered = true;
  double min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
    const double eta = caputo[i].coefficient().value;
    const double xi = rl[i].coefficient().value;
    ordered = ordered && eta < xi && (xi - eta) > cfg.min_gap;
    min_separation = std::min(min_separation, xi - eta);
    r.rows.push_back({cfg.alphas[i], eta, xi, std::fabs(eta - eta1), std::fabs(xi - eta1), xi - eta,
                      sup_gap(caputo[i]), sup_gap(rl[i])});
  }

  const std::vector<double>& last = r.rows.back();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c : {3u, 4u}) {
    const std::vector<double> col = column(r, c);
    r.flags.push_back({r.columns[c] + "_nonincreasing", nonincreasing(col, 0.0), false,
                       "root gap to eta_1 = " + num(eta1) + " shrinks along the ladder"});
    r.flags.push_back({r.columns[c] + "_final_alpha", last[c] <= cfg.final_threshold, true,
                       "gap " + num(last[c]) + " vs threshold " + num(cfg.final_threshold)});
    worst = std::max(worst, last[c] - cfg.final_threshold);
  }
  r.flags.push_back({"eta_below_xi", ordered, false,
                     "smallest xi - eta " + num(min_separation) + " vs " + num(cfg.min_gap)});
  worst = std::max(worst, cfg.min_gap - min_separation);
  for (std::size_t c : {6u, 7u}) {
    r.flags.push_back({r.columns[c] + "_nonincreasing", nonincreasing(column(r, c), 0.0), false,
                       "sup |u_alpha - u_classical| on the box shrinks along the ladder"});
  }
  r.worst_violation = worst;
  return r;
}

SweepReport figure_data(const FigureConfig& cfg) {
  const Alpha alpha{cfg.alpha};
  require(!alpha.classical(), ErrorCode::InvalidParameter, "figure data needs alpha < 1");
  require(!cfg.x_grid.empty(), ErrorCode::InvalidParameter, "x grid is empty");
  const double nu = alpha.half();
  const WrightSeries mainardi_s(-nu, 1.0 - nu, cfg.accuracy);
  const WrightSeries half_s(-nu, nu, cfg.accuracy);
  const double g_mainardi = gamma(1.0 - nu);
  const double g_half = gamma(nu);

  SweepReport r;
  r.name = "figure";
  r.grid = "alpha " + num(cfg.alpha) + ", " + std::to_string(cfg.x_grid.size()) + " points on [" +
           num(cfg.x_grid.front()) + ", " + num(cfg.x_grid.back()) + "]";
  r.columns = {"x", "gamma_mainardi", "gamma_wright_half", "gaussian"};
  double worst = -std::numeric_limits<double>::infinity();
  double at_zero = 0.0;
  bool has_zero = false;
  for (double x : cfg.x_grid) {
    require(x >= 0.0, ErrorCode::InvalidParameter, "figure grid must be nonnegative");
    const double c1 = g_mainardi * mainardi_s.decaying(2.0 * x).value;
    const double c2 = g_half * half_s.decaying(2.0 * x).value;
    r.rows.push_back({x, c1, c2, std::exp(-x * x)});
    if (x > 0.0) {
      worst = std::max(worst, c1 - c2);
    } else {
      has_zero = true;
      at_zero = std::max(std::fabs(c1 - 1.0), std::fabs(c2 - 1.0));
    }
  }
  r.flags.push_back({"curves_do_not_cross", worst < 0.0, false,
                     "max of Mainardi curve minus W curve over x > 0: " + num(worst)});
  if (has_zero) {
    r.flags.push_back({"curves_meet_at_zero", at_zero <= 4.0 * std::numeric_limits<double>::epsilon(), false,
                       "deviation from 1 at x = 0: " + num(at_zero)});
  }
  r.worst_violation = worst;
  return r;
}

}  // namespace fstefan
