#pragma once

#include <string>
#include <string_view>

#include "fstefan/specfun.hpp"

namespace fstefan {

enum class RootKind { EtaFractional, XiFractional, EtaClassical, EtaZeroDeriv };

const char* to_string(RootKind kind) noexcept;
RootKind parse_root_kind(std::string_view name);  // eta | xi | classical | eta0

struct Bracket {
  double lo = 1e-4;
  double hi = 5.0;
};

struct RootProblem {
  RootKind kind = RootKind::EtaClassical;
  Alpha alpha{1.0};  // ignored by the two classical kinds
  Bracket bracket{};
  double tol = 1e-12;
  SeriesAccuracy accuracy{};
  int max_iterations = 400;

  void validate() const;
};

struct FrontCoefficient {
  RootKind kind = RootKind::EtaClassical;
  Alpha alpha{1.0};
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  Bracket bracket{};  // final enclosing bracket
};

// 2x [1 - W(-2x; -a/2; 1)], the left side shared by both fractional equations.
double front_lhs(double x, Alpha alpha, const SeriesAccuracy& acc = {});

// 2x[1 - W(-2x,-a/2,1)] - M_{a/2}(2x) Gamma(1 - a/2) / Gamma(1 + a/2).
double eta_residual(double x, Alpha alpha, const SeriesAccuracy& acc = {});
// 2x[1 - W(-2x,-a/2,1)] - (2/a) W(-2x,-a/2,a/2).
double xi_residual(double x, Alpha alpha, const SeriesAccuracy& acc = {});
// 2x[1 - W(-2x,-a/2,1)] - [2x W(-2x,-a/2,1) + W(-2x,-a/2,1+a/2)].
double xi_residual_long(double x, Alpha alpha, const SeriesAccuracy& acc = {});
// x erf(x) - exp(-x^2)/sqrt(pi).
double classical_residual(double x);
// sqrt(pi) x exp(x^2) erfc(x) - 4x^2; its root is where the classical
// fixed-point map x erfc(x) + exp(-x^2)/sqrt(pi) stops increasing.
double eta0_residual(double x);

// Residual for any kind; classical kinds ignore alpha.
double residual(RootKind kind, double x, Alpha alpha, const SeriesAccuracy& acc = {});

// Residual of one equation with the Wright coefficients tabulated once, for
// scans and root solves. Values match residual() bit for bit.
class FrontEquation {
 public:
  FrontEquation(RootKind kind, Alpha alpha, SeriesAccuracy acc = {});
  double operator()(double x) const;

  RootKind kind() const noexcept { return kind_; }
  Alpha alpha() const noexcept { return alpha_; }

 private:
  RootKind kind_;
  Alpha alpha_;
  SeriesAccuracy acc_;
  WrightSeries w_one_;     // beta = 1
  WrightSeries w_second_;  // beta = 1 - a/2 (eta) or a/2 (xi)
  double scale_;           // Gamma(1 - a/2)/Gamma(1 + a/2) or 2/a
};

// Bracketed root of the chosen equation (Illinois regula falsi with
// bisection fallback). Stops when |residual| <= tol and the bracket is no
// wider than tol.
FrontCoefficient solve(const RootProblem& problem);
FrontCoefficient solve(RootKind kind, Alpha alpha = Alpha{1.0});

// Number of strict sign changes of the residual over `samples` points
// spread uniformly on (lo, hi] (the first sample is lo + (hi - lo)/samples).
int count_sign_changes(RootKind kind, Alpha alpha, double lo, double hi, int samples,
                       const SeriesAccuracy& acc = {});

}  // namespace fstefan
