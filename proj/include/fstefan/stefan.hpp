#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fstefan/equations.hpp"
#include "fstefan/specfun.hpp"

namespace fstefan {

enum class SolutionKind { CaputoP1, RiemannLiouvilleP2, Classical };

const char* to_string(SolutionKind kind) noexcept;
SolutionKind parse_solution_kind(std::string_view name);  // caputo | rl | classical

// Front coefficient equation that belongs to each solution kind.
RootKind root_kind_for(SolutionKind kind) noexcept;

struct SpaceTimePoint {
  double x = 0.0;
  double t = 1.0;

  void validate() const;
};

// Self-similar solution of the one-phase melting problem with unit boundary
// temperature: u = 1 - [1 - W(-x t^{-a/2}; -a/2; 1)] / [1 - W(-2c; -a/2; 1)],
// front s(t) = 2 c t^{a/2}. The classical member uses erf in place of the
// Wright function and a = 1.
class SelfSimilarSolution {
 public:
  SelfSimilarSolution(SolutionKind kind, FrontCoefficient coefficient, SeriesAccuracy acc = {});

  // Solves for the coefficient with the default solver settings.
  static SelfSimilarSolution make(SolutionKind kind, Alpha alpha, const RootProblem& solver = {});

  SolutionKind kind() const noexcept { return kind_; }
  Alpha alpha() const noexcept { return coef_.alpha; }
  const FrontCoefficient& coefficient() const noexcept { return coef_; }

  double front(double t) const;
  double front_velocity(double t) const;

  // OutOfDomain beyond the front.
  double temperature(SpaceTimePoint p) const;
  double flux(SpaceTimePoint p) const;

  // The closed-form expressions continued past the front, t >= 0. Memory
  // integrals over the history of a fixed x need these.
  double profile(double x, double t) const;
  double profile_flux(double x, double t) const;

 private:
  void check_domain(SpaceTimePoint p) const;

  SolutionKind kind_;
  FrontCoefficient coef_;
  SeriesAccuracy acc_;
  std::optional<WrightSeries> w_one_;
  std::optional<WrightSeries> w_flux_;
  double inv_denominator_ = 1.0;
};

// |D_t^a u - u_xx| at an interior point. Caputo solutions use the L1 scheme
// on grid_n intervals of [0, t]; the classical solution uses a centred
// difference in t. u_xx is a centred difference in x.
double pde_residual(const SelfSimilarSolution& sol, SpaceTimePoint p, int grid_n);

// |D^a s(t) + u_x(s(t), t)| with the Caputo power rule applied to the front
// (the classical solution uses s'(t)).
double stefan_condition_residual_caputo(const SelfSimilarSolution& sol, double t);

struct RlConditionConfig {
  int grid_n = 8192;
  std::vector<double> offsets{0.2, 0.1, 0.05};  // eps / s(t), strictly decreasing
  std::optional<double> alpha;                  // operator order; defaults to the solution's
};

struct RlConditionResult {
  double residual = 0.0;
  double front_velocity = 0.0;
  double extrapolated = 0.0;             // limit of D^{1-a} u_x at the front
  std::vector<double> offsets;           // absolute eps
  std::vector<double> values;            // D^{1-a} u_x(s - eps, t)
};

// |s'(t) + lim_{x -> s(t)} D_t^{1-a} u_x(x, t)| with the limit taken by
// polynomial extrapolation from interior offsets.
RlConditionResult stefan_condition_residual_rl(const SelfSimilarSolution& sol, double t,
                                               const RlConditionConfig& cfg = {});

}  // namespace fstefan
