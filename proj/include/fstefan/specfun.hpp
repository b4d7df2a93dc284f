#pragma once

#include <cstdint>
#include <vector>

#include "fstefan/error.hpp"

namespace fstefan {

// Fractional order in (0, 1]. The value 1 is reserved for classical-limit
// evaluations; every fractional operator additionally rejects it.
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    require(value > 0.0 && value <= 1.0, ErrorCode::InvalidParameter,
            "alpha must lie in (0, 1]");
  }

  double value() const noexcept { return value_; }
  double half() const noexcept { return 0.5 * value_; }
  bool classical() const noexcept { return value_ == 1.0; }

  friend bool operator==(Alpha a, Alpha b) noexcept { return a.value_ == b.value_; }

 private:
  double value_;
};

struct SeriesAccuracy {
  double tol = 1e-12;           // absolute truncation error
  int max_terms = 500;
  double rounding_limit = 1e-6; // largest tolerated cancellation error

  void validate() const;
};

// One Wright-function evaluation W(z; rho; beta).
struct WrightEval {
  double z = 0.0;
  double rho = 0.0;
  double beta = 1.0;
  SeriesAccuracy accuracy{};

  void validate() const;
};

struct WrightResult {
  double value = 0.0;
  double tail_bound = 0.0;      // bound on the discarded series tail
  double rounding_bound = 0.0;  // estimated cancellation error
  int terms = 0;
};

// Sums the Wright series without judging cancellation; throws NonConvergent
// only when max_terms is exhausted.
WrightResult wright_series(const WrightEval& e);

// Like wright_series, but also throws NonConvergent when cancellation
// exceeds accuracy.rounding_limit.
double wright(const WrightEval& e);
double wright(double z, double rho, double beta, const SeriesAccuracy& acc = {});

// M_rho(x) = W(-x; -rho; 1 - rho), 0 < rho < 1.
double mainardi(double rho, double x, const SeriesAccuracy& acc = {});

// W(-y; -nu; beta) for y >= 0, 0 < nu < 1, beta >= nu. On this branch the
// function is positive and strictly decreasing in y, so when the series
// loses significance at large y the value is bounded by a reachable
// smaller argument and reported as 0 with that bound in tail_bound.
WrightResult wright_decaying(double y, double nu, double beta, const SeriesAccuracy& acc = {});

// Wright series with fixed (rho, beta) and precomputed coefficients, for
// repeated evaluation along a grid.
class WrightSeries {
 public:
  WrightSeries(double rho, double beta, SeriesAccuracy acc = {});

  WrightResult evaluate(double z) const;
  double operator()(double z) const;
  WrightResult decaying(double y) const;  // requires -1 < rho < 0, beta >= -rho

  double rho() const noexcept { return rho_; }
  double beta() const noexcept { return beta_; }
  const SeriesAccuracy& accuracy() const noexcept { return acc_; }

  struct Coefficient {
    long double log_abs;       // log |1 / (k! Gamma(rho k + beta))|
    long double log_envelope;  // same with |sin| replaced by 1 past the poles
    int sign;                  // 0 at poles of Gamma
  };

 private:
  double rho_;
  double beta_;
  SeriesAccuracy acc_;
  std::vector<Coefficient> coef_;
};

double erf(double x);
double erfc(double x);

// Gamma(x); PoleError at nonpositive integers, Overflow past the double range.
double gamma(double x);
// log Gamma(x) for x > 0.
double log_gamma(double x);
// 1 / Gamma(x), entire; exactly 0 at the poles.
double rgamma(double x);
// sin(pi x) with exact argument reduction.
double sin_pi(double x);

// (n)!! for odd n >= 1.
std::uint64_t double_factorial(int n);

}  // namespace fstefan
