#include "fstefan/equations.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fstefan {

namespace {

constexpr double kMinFractionalAlpha = 0.05;

bool fractional(RootKind kind) {
  return kind == RootKind::EtaFractional || kind == RootKind::XiFractional;
}

void check_x(double x) {
  require(x > 0.0 && std::isfinite(x), ErrorCode::InvalidParameter, "front equations need x > 0");
}

void check_fractional_alpha(Alpha alpha) {
  require(alpha.value() > kMinFractionalAlpha, ErrorCode::InvalidParameter,
          "fractional front equations need alpha > 0.05");
}

double w_neg(double x, double nu, double beta, const SeriesAccuracy& acc) {
  return wright_decaying(2.0 * x, nu, beta, acc).value;
}

double eta_scale(Alpha a) { return gamma(1.0 - a.half()) / gamma(1.0 + a.half()); }

}  // namespace

const char* to_string(RootKind kind) noexcept {
  switch (kind) {
    case RootKind::EtaFractional: return "eta";
    case RootKind::XiFractional: return "xi";
    case RootKind::EtaClassical: return "classical";
    case RootKind::EtaZeroDeriv: return "eta0";
  }
  return "unknown";
}

RootKind parse_root_kind(std::string_view name) {
  for (RootKind k : {RootKind::EtaFractional, RootKind::XiFractional, RootKind::EtaClassical,
                     RootKind::EtaZeroDeriv}) {
    if (name == to_string(k)) return k;
  }
  fail(ErrorCode::InvalidParameter, "unknown equation kind: " + std::string(name));
}

void RootProblem::validate() const {
  require(bracket.lo >= 0.0 && bracket.lo < bracket.hi, ErrorCode::InvalidParameter,
          "bracket needs 0 <= lo < hi");
  require(tol > 0.0, ErrorCode::InvalidParameter, "solver tol must be positive");
  require(max_iterations >= 1, ErrorCode::InvalidParameter, "max_iterations must be >= 1");
  accuracy.validate();
  if (fractional(kind)) check_fractional_alpha(alpha);
}

double front_lhs(double x, Alpha alpha, const SeriesAccuracy& acc) {
  check_x(x);
  return 2.0 * x * (1.0 - w_neg(x, alpha.half(), 1.0, acc));
}

double eta_residual(double x, Alpha alpha, const SeriesAccuracy& acc) {
  check_fractional_alpha(alpha);
  const double nu = alpha.half();
  return front_lhs(x, alpha, acc) - w_neg(x, nu, 1.0 - nu, acc) * eta_scale(alpha);
}

double xi_residual(double x, Alpha alpha, const SeriesAccuracy& acc) {
  check_fractional_alpha(alpha);
  const double nu = alpha.half();
  return front_lhs(x, alpha, acc) - (2.0 / alpha.value()) * w_neg(x, nu, nu, acc);
}

double xi_residual_long(double x, Alpha alpha, const SeriesAccuracy& acc) {
  check_fractional_alpha(alpha);
  const double nu = alpha.half();
  const double w1 = w_neg(x, nu, 1.0, acc);
  return 2.0 * x * (1.0 - w1) - (2.0 * x * w1 + w_neg(x, nu, 1.0 + nu, acc));
}

double classical_residual(double x) {
  check_x(x);
  return x * erf(x) - std::exp(-x * x) * std::numbers::inv_sqrtpi;
}

double eta0_residual(double x) {
  check_x(x);
  // exp(x^2) erfc(x) is formed in one piece to stay finite for large x
  const double scaled_erfc =
      x < 25.0 ? std::exp(x * x) * erfc(x)
               : std::numbers::inv_sqrtpi / x * (1.0 - 0.5 / (x * x) + 0.75 / (x * x * x * x));
  return std::sqrt(std::numbers::pi) * x * scaled_erfc - 4.0 * x * x;
}

double residual(RootKind kind, double x, Alpha alpha, const SeriesAccuracy& acc) {
  switch (kind) {
    case RootKind::EtaFractional: return eta_residual(x, alpha, acc);
    case RootKind::XiFractional: return xi_residual(x, alpha, acc);
    case RootKind::EtaClassical: return classical_residual(x);
    case RootKind::EtaZeroDeriv: return eta0_residual(x);
  }
  fail(ErrorCode::InvalidParameter, "unknown equation kind");
}

FrontEquation::FrontEquation(RootKind kind, Alpha alpha, SeriesAccuracy acc)
    : kind_(kind),
      alpha_(fractional(kind) ? alpha : Alpha{1.0}),
      acc_(acc),
      w_one_(-alpha_.half(), 1.0, acc),
      w_second_(-alpha_.half(),
                kind == RootKind::XiFractional ? alpha_.half() : 1.0 - alpha_.half(), acc),
      scale_(kind == RootKind::XiFractional ? 2.0 / alpha_.value() : eta_scale(alpha_)) {
  if (fractional(kind)) check_fractional_alpha(alpha);
}

double FrontEquation::operator()(double x) const {
  if (!fractional(kind_)) return residual(kind_, x, alpha_, acc_);
  check_x(x);
  const double lhs = 2.0 * x * (1.0 - w_one_.decaying(2.0 * x).value);
  return lhs - w_second_.decaying(2.0 * x).value * scale_;
}

FrontCoefficient solve(const RootProblem& problem) {
  problem.validate();
  const FrontEquation f(problem.kind, problem.alpha, problem.accuracy);
  const double tol = problem.tol;

  double a = problem.bracket.lo;
  double b = problem.bracket.hi;
  // lo = 0 is allowed; the residuals are evaluated just inside.
  const double a_eval = a > 0.0 ? a : std::min(1e-12, 0.5 * b);
  double fa = f(a_eval);
  a = a_eval;
  double fb = f(b);
  int widen = 0;
  while (std::signbit(fa) == std::signbit(fb) && fa != 0.0 && fb != 0.0 && widen < 8) {
    b *= 2.0;
    fb = f(b);
    ++widen;
  }
  require(fa == 0.0 || fb == 0.0 || std::signbit(fa) != std::signbit(fb), ErrorCode::NoSignChange,
          std::string("no sign change for ") + to_string(problem.kind) + " on [" +
              std::to_string(problem.bracket.lo) + ", " + std::to_string(b) + "]");

  auto result = [&](double x, double fx, int it) {
    return FrontCoefficient{problem.kind, f.alpha(), x, fx, it, Bracket{a, b}};
  };
  if (fa == 0.0) return result(a, fa, 0);
  if (fb == 0.0) return result(b, fb, 0);

  // ga/gb are the (possibly Illinois-damped) values used for the secant;
  // fa/fb stay the true residuals at the endpoints.
  double ga = fa, gb = fb;
  int side = 0;  // endpoint replaced last: -1 a, +1 b
  double width_mark = b - a;
  for (int it = 1; it <= problem.max_iterations; ++it) {
    const bool a_best = std::fabs(fa) <= std::fabs(fb);
    if (b - a <= tol && std::fabs(a_best ? fa : fb) <= tol) {
      return result(a_best ? a : b, a_best ? fa : fb, it - 1);
    }
    double x = b - gb * (b - a) / (gb - ga);
    if (it % 3 == 0) {
      // force a bisection when three steps failed to halve the bracket
      if (b - a > 0.5 * width_mark) x = 0.5 * (a + b);
      width_mark = b - a;
    }
    if (!(x > a && x < b)) x = 0.5 * (a + b);
    if (!(x > a && x < b)) {
      require(std::fabs(a_best ? fa : fb) <= tol, ErrorCode::MaxIterations,
              "bracket collapsed at floating-point resolution with residual above tol");
      return result(a_best ? a : b, a_best ? fa : fb, it);
    }
    const double fx = f(x);
    if (fx == 0.0) {
      a = b = x;
      return result(x, fx, it);
    }
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = ga = fx;
      if (side == -1) gb *= 0.5;
      side = -1;
    } else {
      b = x;
      fb = gb = fx;
      if (side == 1) ga *= 0.5;
      side = 1;
    }
  }
  fail(ErrorCode::MaxIterations, std::string("solver exceeded iteration budget for ") +
                                     to_string(problem.kind));
}

FrontCoefficient solve(RootKind kind, Alpha alpha) {
  RootProblem p;
  p.kind = kind;
  p.alpha = alpha;
  if (kind == RootKind::EtaZeroDeriv) p.bracket = Bracket{0.05, 1.0};
  return solve(p);
}

int count_sign_changes(RootKind kind, Alpha alpha, double lo, double hi, int samples,
                       const SeriesAccuracy& acc) {
  require(samples >= 2 && lo < hi, ErrorCode::InvalidParameter, "scan needs samples >= 2 and lo < hi");
  const FrontEquation f(kind, alpha, acc);
  int changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double v = f(x);
    if (v == 0.0) continue;
    if (have_prev && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
    have_prev = true;
  }
  return changes;
}

}  // namespace fstefan
