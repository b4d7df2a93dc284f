#include "fstefan/frcalc.hpp"

#include <cmath>
#include <span>
#include <string>

#include "fstefan/kernels.hpp"

namespace fstefan {

namespace {

constexpr int kSeriesFrom = 16;

// sum_{k >= kmin, k step} C(p, k) u^k; |u| <= 1/16 so a few dozen terms suffice.
double binomial_tail(double p, double u, int kmin, int step) {
  double coef = 1.0;  // C(p, k) u^k, built incrementally from k = 0
  double sum = 0.0;
  for (int k = 1; k <= 80; ++k) {
    coef *= (p - (k - 1)) / k * u;
    if (k >= kmin && (k - kmin) % step == 0) {
      sum += coef;
      if (std::fabs(coef) <= 1e-18 * std::fabs(sum)) break;
    }
  }
  return sum;
}

void check_at(const SampledFunction& f, int at, int lowest) {
  f.validate();
  require(at >= 1 && at <= f.n, ErrorCode::InvalidParameter,
          "grid index " + std::to_string(at) + " outside [1, n]");
  require(at >= lowest, ErrorCode::NeedsMoreGrid,
          "operator needs at least " + std::to_string(lowest) + " intervals of history");
}

void check_beta(double beta) {
  require(beta > 0.0 && beta <= 1.0, ErrorCode::InvalidParameter, "beta must lie in (0, 1]");
}

double scaled_rl_sum(const SampledFunction& f, std::span<const double> taps, double beta, int m) {
  const std::span<const double> v(f.values);
  return rl_integral_origin_weight(beta, m) * v[0] + kernels::convolve_tap(taps, v.subspan(1, m));
}

}  // namespace

void SampledFunction::validate() const {
  require(n >= 2, ErrorCode::InvalidParameter, "sampled function needs n >= 2");
  require(t_end > 0.0 && std::isfinite(t_end), ErrorCode::InvalidParameter, "t_end must be positive");
  require(values.size() == static_cast<std::size_t>(n) + 1, ErrorCode::InvalidParameter,
          "sampled function needs n + 1 values");
  for (double v : values) {
    require(std::isfinite(v), ErrorCode::InvalidParameter, "sampled values must be finite");
  }
}

std::vector<double> rl_integral_taps(double beta, int count) {
  check_beta(beta);
  const double p = beta + 1.0;
  std::vector<double> taps(static_cast<std::size_t>(std::max(count, 0)));
  for (int d = 0; d < count; ++d) {
    double c;
    if (d == 0) {
      c = 1.0;
    } else if (d >= kSeriesFrom) {
      // second difference of d^p, expanded in 1/d
      c = 2.0 * std::pow(static_cast<double>(d), p) * binomial_tail(p, 1.0 / d, 2, 2);
    } else {
      c = std::pow(d + 1.0, p) - 2.0 * std::pow(static_cast<double>(d), p) + std::pow(d - 1.0, p);
    }
    taps[static_cast<std::size_t>(d)] = c;
  }
  return taps;
}

double rl_integral_origin_weight(double beta, int m) {
  check_beta(beta);
  const double p = beta + 1.0;
  if (m >= kSeriesFrom) return std::pow(static_cast<double>(m), p) * binomial_tail(p, -1.0 / m, 2, 1);
  return std::pow(m - 1.0, p) - (m - 1.0 - beta) * std::pow(static_cast<double>(m), beta);
}

std::vector<double> caputo_l1_taps(double alpha, int count) {
  require(alpha > 0.0 && alpha < 1.0, ErrorCode::InvalidParameter, "L1 taps need alpha in (0, 1)");
  const double q = 1.0 - alpha;
  std::vector<double> taps(static_cast<std::size_t>(std::max(count, 0)));
  for (int d = 0; d < count; ++d) {
    taps[static_cast<std::size_t>(d)] =
        d == 0 ? 1.0 : std::pow(static_cast<double>(d), q) * std::expm1(q * std::log1p(1.0 / d));
  }
  return taps;
}

double rl_integral(const SampledFunction& f, double beta, int at) {
  check_beta(beta);
  check_at(f, at, 1);
  const std::vector<double> taps = rl_integral_taps(beta, at);
  const double h = f.step();
  return std::pow(h, beta) * rgamma(beta + 2.0) * scaled_rl_sum(f, taps, beta, at);
}

SampledFunction rl_integral_all(const SampledFunction& f, double beta) {
  check_beta(beta);
  f.validate();
  const std::vector<double> taps = rl_integral_taps(beta, f.n);
  const double scale = std::pow(f.step(), beta) * rgamma(beta + 2.0);
  SampledFunction out{f.t_end, f.n, std::vector<double>(f.values.size(), 0.0)};
  for (int m = 1; m <= f.n; ++m) {
    out.values[static_cast<std::size_t>(m)] = scale * scaled_rl_sum(f, taps, beta, m);
  }
  return out;
}

double rl_integral_singular(const SampledFunction& g, double power, double beta, int at) {
  check_beta(beta);
  require(power > -1.0, ErrorCode::InvalidParameter, "origin power must exceed -1");
  check_at(g, at, 1);
  const double g0 = g.values[0];
  const double tm = g.time(at);

  // g(0) tau^power by the power rule
  const double head = g0 * gamma(power + 1.0) * rgamma(power + 1.0 + beta) * std::pow(tm, power + beta);

  // what is left behaves like tau^(power+1) at the origin
  SampledFunction rest{g.t_end, g.n, std::vector<double>(g.values.size(), 0.0)};
  for (int j = 1; j <= at; ++j) {
    const auto i = static_cast<std::size_t>(j);
    rest.values[i] = std::pow(g.time(j), power) * (g.values[i] - g0);
  }
  return head + rl_integral(rest, beta, at);
}

double caputo_derivative(const SampledFunction& f, Alpha alpha, int at) {
  require(!alpha.classical(), ErrorCode::InvalidParameter, "Caputo derivative needs alpha < 1");
  check_at(f, at, 1);
  const double a = alpha.value();
  const std::vector<double> taps = caputo_l1_taps(a, at);
  std::vector<double> diffs(static_cast<std::size_t>(at));
  for (int j = 0; j < at; ++j) {
    diffs[static_cast<std::size_t>(j)] =
        f.values[static_cast<std::size_t>(j) + 1] - f.values[static_cast<std::size_t>(j)];
  }
  return std::pow(f.step(), -a) * rgamma(2.0 - a) * kernels::convolve_tap(taps, diffs);
}

double rl_derivative(const SampledFunction& f, double order, int at) {
  require(order >= 0.0 && order < 1.0, ErrorCode::InvalidParameter, "RL derivative order must lie in [0, 1)");
  check_at(f, at, 2);
  const double beta = 1.0 - order;
  const std::vector<double> taps = rl_integral_taps(beta, at);
  const double scale = std::pow(f.step(), beta) * rgamma(beta + 2.0);
  const double i0 = scaled_rl_sum(f, taps, beta, at);
  const double i1 = scaled_rl_sum(f, taps, beta, at - 1);
  const double i2 = at >= 3 ? scaled_rl_sum(f, taps, beta, at - 2) : 0.0;
  // at == 2: I(t_0) = 0 identically
  const double i2_scaled = at >= 3 ? i2 * scale : 0.0;
  return (3.0 * scale * i0 - 4.0 * scale * i1 + i2_scaled) / (2.0 * f.step());
}

}  // namespace fstefan
