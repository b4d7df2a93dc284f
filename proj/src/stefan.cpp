#include "fstefan/stefan.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fstefan/frcalc.hpp"

namespace fstefan {

namespace {

constexpr double kMinResidualTime = 0.25;
constexpr double kSpaceStep = 1e-4;

void check_time(double t) {
  require(t > 0.0 && std::isfinite(t), ErrorCode::InvalidParameter, "time must be positive");
}

// Neville extrapolation of (eps_i, v_i) to eps = 0.
double extrapolate_to_zero(std::vector<double> eps, std::vector<double> v) {
  const std::size_t n = v.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      v[i] = (eps[i] * v[i + 1] - eps[i + level] * v[i]) / (eps[i] - eps[i + level]);
    }
  }
  return v[0];
}

}  // namespace

const char* to_string(SolutionKind kind) noexcept {
  switch (kind) {
    case SolutionKind::CaputoP1: return "caputo";
    case SolutionKind::RiemannLiouvilleP2: return "rl";
    case SolutionKind::Classical: return "classical";
  }
  return "unknown";
}

SolutionKind parse_solution_kind(std::string_view name) {
  for (SolutionKind k : {SolutionKind::CaputoP1, SolutionKind::RiemannLiouvilleP2, SolutionKind::Classical}) {
    if (name == to_string(k)) return k;
  }
  fail(ErrorCode::InvalidParameter, "unknown solution kind: " + std::string(name));
}

RootKind root_kind_for(SolutionKind kind) noexcept {
  switch (kind) {
    case SolutionKind::CaputoP1: return RootKind::EtaFractional;
    case SolutionKind::RiemannLiouvilleP2: return RootKind::XiFractional;
    case SolutionKind::Classical: return RootKind::EtaClassical;
  }
  return RootKind::EtaClassical;
}

void SpaceTimePoint::validate() const {
  check_time(t);
  require(x >= 0.0 && std::isfinite(x), ErrorCode::InvalidParameter, "position must be >= 0");
}

SelfSimilarSolution::SelfSimilarSolution(SolutionKind kind, FrontCoefficient coefficient,
                                         SeriesAccuracy acc)
    : kind_(kind), coef_(coefficient), acc_(acc) {
  require(coef_.kind == root_kind_for(kind), ErrorCode::InvalidParameter,
          std::string("coefficient kind does not belong to solution ") + to_string(kind));
  require(coef_.value > 0.0, ErrorCode::InvalidParameter, "front coefficient must be positive");
  if (kind == SolutionKind::Classical) {
    require(coef_.alpha.classical(), ErrorCode::InvalidParameter, "classical solution needs alpha = 1");
    inv_denominator_ = 1.0 / erf(coef_.value);
    return;
  }
  require(!coef_.alpha.classical(), ErrorCode::InvalidParameter,
          "fractional solutions need alpha < 1");
  const double nu = coef_.alpha.half();
  w_one_.emplace(-nu, 1.0, acc);
  w_flux_.emplace(-nu, 1.0 - nu, acc);
  inv_denominator_ = 1.0 / (1.0 - w_one_->decaying(2.0 * coef_.value).value);
}

SelfSimilarSolution SelfSimilarSolution::make(SolutionKind kind, Alpha alpha, const RootProblem& solver) {
  RootProblem p = solver;
  p.kind = root_kind_for(kind);
  p.alpha = kind == SolutionKind::Classical ? Alpha{1.0} : alpha;
  return SelfSimilarSolution(kind, solve(p), p.accuracy);
}

double SelfSimilarSolution::front(double t) const {
  require(t >= 0.0, ErrorCode::InvalidParameter, "time must be >= 0");
  return 2.0 * coef_.value * std::pow(t, alpha().half());
}

double SelfSimilarSolution::front_velocity(double t) const {
  check_time(t);
  const double a = alpha().value();
  return a * coef_.value * std::pow(t, 0.5 * a - 1.0);
}

void SelfSimilarSolution::check_domain(SpaceTimePoint p) const {
  p.validate();
  const double s = front(p.t);
  // the front itself is part of the domain, up to rounding of s(t)
  require(p.x <= s * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()), ErrorCode::OutOfDomain,
          "x = " + std::to_string(p.x) + " lies beyond the front s(t) = " + std::to_string(s));
}

double SelfSimilarSolution::temperature(SpaceTimePoint p) const {
  check_domain(p);
  return profile(p.x, p.t);
}

double SelfSimilarSolution::flux(SpaceTimePoint p) const {
  check_domain(p);
  return profile_flux(p.x, p.t);
}

double SelfSimilarSolution::profile(double x, double t) const {
  require(x >= 0.0 && t >= 0.0, ErrorCode::InvalidParameter, "profile needs x >= 0, t >= 0");
  if (kind_ == SolutionKind::Classical) {
    if (t == 0.0) return x == 0.0 ? 1.0 : 1.0 - inv_denominator_;
    return 1.0 - erf(x / (2.0 * std::sqrt(t))) * inv_denominator_;
  }
  if (t == 0.0) return x == 0.0 ? 1.0 : 1.0 - inv_denominator_;
  const double y = x * std::pow(t, -alpha().half());
  return 1.0 - (1.0 - w_one_->decaying(y).value) * inv_denominator_;
}

double SelfSimilarSolution::profile_flux(double x, double t) const {
  require(x >= 0.0 && t >= 0.0, ErrorCode::InvalidParameter, "profile needs x >= 0, t >= 0");
  if (t == 0.0) {
    require(x > 0.0, ErrorCode::InvalidParameter, "flux is singular at the corner x = t = 0");
    return 0.0;
  }
  if (kind_ == SolutionKind::Classical) {
    return -inv_denominator_ * std::exp(-x * x / (4.0 * t)) / std::sqrt(std::numbers::pi * t);
  }
  const double scale = std::pow(t, -alpha().half());
  return -inv_denominator_ * scale * w_flux_->decaying(x * scale).value;
}

double pde_residual(const SelfSimilarSolution& sol, SpaceTimePoint p, int grid_n) {
  p.validate();
  require(sol.kind() != SolutionKind::RiemannLiouvilleP2, ErrorCode::InvalidParameter,
          "the Caputo diffusion residual applies to the caputo and classical solutions");
  require(p.t >= kMinResidualTime, ErrorCode::InvalidParameter, "residual checks need t >= 0.25");
  const double s = sol.front(p.t);
  require(p.x - kSpaceStep > 0.0 && p.x + kSpaceStep < s, ErrorCode::OutOfDomain,
          "residual point must be interior to (0, s(t))");

  const double dx = kSpaceStep;
  const double uxx = (sol.profile(p.x + dx, p.t) - 2.0 * sol.profile(p.x, p.t) + sol.profile(p.x - dx, p.t)) /
                     (dx * dx);
  if (sol.kind() == SolutionKind::Classical) {
    const double dt = kSpaceStep * p.t;
    const double ut = (sol.profile(p.x, p.t + dt) - sol.profile(p.x, p.t - dt)) / (2.0 * dt);
    return std::fabs(ut - uxx);
  }
  require(grid_n >= 2, ErrorCode::NeedsMoreGrid, "Caputo residual needs grid_n >= 2");
  const SampledFunction history =
      SampledFunction::sample(p.t, grid_n, [&](double tau) { return sol.profile(p.x, tau); });
  return std::fabs(caputo_derivative(history, sol.alpha(), grid_n) - uxx);
}

double stefan_condition_residual_caputo(const SelfSimilarSolution& sol, double t) {
  check_time(t);
  const double s = sol.front(t);
  const double ux = sol.profile_flux(s, t);
  if (sol.kind() == SolutionKind::Classical) return std::fabs(sol.front_velocity(t) + ux);
  // Caputo derivative of 2c t^{a/2}: 2c Gamma(1 + a/2)/Gamma(1 - a/2) t^{-a/2}
  const double nu = sol.alpha().half();
  const double dfront = 2.0 * sol.coefficient().value * gamma(1.0 + nu) / gamma(1.0 - nu) * std::pow(t, -nu);
  return std::fabs(dfront + ux);
}

RlConditionResult stefan_condition_residual_rl(const SelfSimilarSolution& sol, double t,
                                               const RlConditionConfig& cfg) {
  check_time(t);
  require(t >= kMinResidualTime, ErrorCode::InvalidParameter, "residual checks need t >= 0.25");
  require(cfg.grid_n >= 2, ErrorCode::NeedsMoreGrid, "RL condition needs grid_n >= 2");
  require(cfg.offsets.size() >= 2, ErrorCode::InvalidParameter, "extrapolation needs >= 2 offsets");
  for (std::size_t i = 0; i < cfg.offsets.size(); ++i) {
    require(cfg.offsets[i] > 0.0 && cfg.offsets[i] < 1.0, ErrorCode::InvalidParameter,
            "offsets are fractions of s(t) in (0, 1)");
    require(i == 0 || cfg.offsets[i] < cfg.offsets[i - 1], ErrorCode::InvalidParameter,
            "offsets must be strictly decreasing");
  }
  const double a = cfg.alpha.value_or(sol.alpha().value());
  require(a > 0.0 && a <= 1.0, ErrorCode::InvalidParameter, "operator order alpha must lie in (0, 1]");

  RlConditionResult r;
  const double s = sol.front(t);
  r.front_velocity = sol.front_velocity(t);
  for (double frac : cfg.offsets) {
    const double eps = frac * s;
    const double x = s - eps;
    // the history of u_x at fixed x runs through times before the front
    // reached x, where the closed form is used as continued
    const SampledFunction ux = SampledFunction::sample(
        t, cfg.grid_n, [&](double tau) { return sol.profile_flux(x, tau); });
    r.offsets.push_back(eps);
    r.values.push_back(rl_derivative(ux, 1.0 - a, cfg.grid_n));
  }
  for (double v : r.values) {
    require(std::isfinite(v), ErrorCode::ExtrapolationUnstable, "non-finite RL derivative sample");
  }
  for (std::size_t i = 2; i < r.values.size(); ++i) {
    const double prev = std::fabs(r.values[i - 1] - r.values[i - 2]);
    const double cur = std::fabs(r.values[i] - r.values[i - 1]);
    require(cur <= prev, ErrorCode::ExtrapolationUnstable,
            "RL derivative samples do not settle as the offset shrinks");
  }
  r.extrapolated = extrapolate_to_zero(r.offsets, r.values);
  r.residual = std::fabs(r.front_velocity + r.extrapolated);
  return r;
}

}  // namespace fstefan
