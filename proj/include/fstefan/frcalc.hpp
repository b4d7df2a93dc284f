#pragma once

// Grid-based fractional operators used as an independent numerical check of
// the closed-form solutions. All operators act on uniform samples over [0, T].

#include <vector>

#include "fstefan/specfun.hpp"

namespace fstefan {

struct SampledFunction {
  double t_end = 1.0;
  int n = 2;                   // number of intervals
  std::vector<double> values;  // n + 1 samples at t_j = j * t_end / n

  double step() const noexcept { return t_end / n; }
  double time(int j) const noexcept { return t_end * j / n; }

  void validate() const;

  template <class F>
  static SampledFunction sample(double t_end, int n, F&& f) {
    SampledFunction s{t_end, n, {}};
    s.values.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) s.values[static_cast<std::size_t>(j)] = f(s.time(j));
    s.validate();
    return s;
  }
};

// RL integral of order beta in (0, 1] at t_at, product trapezoidal rule:
// f linear per interval, kernel (t - tau)^(beta - 1) integrated exactly.
double rl_integral(const SampledFunction& f, double beta, int at);

// The same integral at every node (value 0 at t = 0).
SampledFunction rl_integral_all(const SampledFunction& f, double beta);

// RL integral of tau^power * g(tau), power > -1, where g holds the smooth
// factor. g(0) tau^power is integrated exactly, the remainder
// tau^power (g - g(0)) by product integration.
double rl_integral_singular(const SampledFunction& g, double power, double beta, int at);

// Caputo derivative of order alpha in (0, 1) at t_at by the L1 scheme.
double caputo_derivative(const SampledFunction& f, Alpha alpha, int at);

// RL derivative d/dt I^(1 - order) f at t_at, order in [0, 1), using a
// second-order backward difference of the product-trapezoidal integral.
// NeedsMoreGrid when at < 2.
double rl_derivative(const SampledFunction& f, double order, int at);

// Convolution taps of the product trapezoidal rule for I^beta, in units of
// h^beta / Gamma(beta + 2): taps[d] weights f_{m-d} for d < m.
std::vector<double> rl_integral_taps(double beta, int count);

// Weight of f_0 in the same units, for the rule evaluated at node m >= 1.
double rl_integral_origin_weight(double beta, int m);

// L1 taps (d + 1)^(1 - alpha) - d^(1 - alpha), d = 0 .. count - 1.
std::vector<double> caputo_l1_taps(double alpha, int count);

}  // namespace fstefan
