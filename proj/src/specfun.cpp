#include "fstefan/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <string>

namespace fstefan {

namespace {

using ld = long double;

constexpr ld kLogPi = 1.1447298858494001741434273513530587116473L;
constexpr ld kPi = 3.1415926535897932384626433832795028841972L;

ld lgamma_ld(ld x) {
  int sign = 0;
  return lgammal_r(x, &sign);
}

ld sin_pi_ld(ld x) {
  ld r = x - 2.0L * std::nearbyint(x / 2.0L);  // exact, r in [-1, 1]
  if (r > 0.5L) r = 1.0L - r;
  if (r < -0.5L) r = -1.0L - r;
  return std::sin(kPi * r);
}

WrightSeries::Coefficient coefficient(int k, double rho, double beta) {
  const ld y = static_cast<ld>(rho) * k + static_cast<ld>(beta);
  const ld log_fact = lgamma_ld(static_cast<ld>(k) + 1.0L);
  if (y > 0.0L) {
    const ld lc = -log_fact - lgamma_ld(y);
    return {lc, lc, 1};
  }
  // 1/Gamma(y) = Gamma(1 - y) sin(pi y) / pi
  const ld envelope = -log_fact + lgamma_ld(1.0L - y) - kLogPi;
  if (y == std::floor(y)) return {envelope, envelope, 0};
  const ld s = sin_pi_ld(y);
  return {envelope + std::log(std::fabs(s)), envelope, s > 0.0L ? 1 : -1};
}

// Neumaier-compensated summation of the series with the adaptive
// geometric tail bound. CoefFn maps k to its Coefficient.
template <class CoefFn>
WrightResult sum_series(double z, const SeriesAccuracy& acc, double beta, CoefFn&& coef) {
  if (z == 0.0) {
    return {rgamma(beta), 0.0, 0.0, 1};
  }
  const ld log_z = std::log(std::fabs(static_cast<ld>(z)));
  const bool alternate = z < 0.0;
  const ld eps = LDBL_EPSILON;

  ld sum = 0.0L, comp = 0.0L, rounding = 0.0L;
  ld prev_log_env = 0.0L, prev_ratio = std::numeric_limits<ld>::infinity();
  std::optional<WrightResult> met;
  for (int k = 0; k < acc.max_terms; ++k) {
    const WrightSeries::Coefficient c = coef(k);
    const ld log_term = k * log_z + c.log_abs;
    const ld log_env = k * log_z + c.log_envelope;
    if (c.sign != 0) {
      ld term = std::exp(log_term);
      if ((alternate && (k & 1)) != (c.sign < 0)) term = -term;
      const ld t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
      rounding += std::fabs(term) * eps *
                  (std::fabs(k * log_z) + std::fabs(c.log_abs) + 16.0L);
    }
    if (k > 0) {
      const ld ratio = std::exp(log_env - prev_log_env);
      const ld env = std::exp(log_env);
      if (ratio < 1.0L && ratio <= prev_ratio && env < acc.tol / 2) {
        const ld tail = env * ratio / (1.0L - ratio);
        if (tail < acc.tol / 2) {
          const ld total = sum + comp;
          const double value = static_cast<double>(total);
          const double round_bound =
              static_cast<double>(rounding) + std::fabs(value) * DBL_EPSILON;
          met = WrightResult{value, static_cast<double>(tail), round_bound, k + 1};
          // tol is met; keep going while the tail can still move the double
          if (tail <= std::fabs(total) * 0x1p-56L) return *met;
        }
      }
      prev_ratio = ratio;
    }
    prev_log_env = log_env;
  }
  if (met) return *met;
  fail(ErrorCode::NonConvergent,
       "Wright series did not meet tol within " + std::to_string(acc.max_terms) + " terms");
}

void check_decaying(double y, double nu, double beta) {
  require(y >= 0.0, ErrorCode::InvalidParameter, "decaying Wright branch needs y >= 0");
  require(nu > 0.0 && nu < 1.0, ErrorCode::InvalidParameter, "decaying Wright branch needs 0 < nu < 1");
  // monotone decay needs beta >= nu; W(-y, -nu, 0) starts at 0 and rises
  require(beta >= nu, ErrorCode::InvalidParameter, "decaying Wright branch needs beta >= nu");
}

// nullopt when the series runs out of terms or loses too many digits
template <class Eval>
std::optional<WrightResult> trusted(Eval& eval, double y, const SeriesAccuracy& acc) {
  try {
    WrightResult r = eval(y);
    if (r.rounding_bound <= acc.rounding_limit) return r;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonConvergent) throw;
  }
  return std::nullopt;
}

template <class Eval>
WrightResult decaying_impl(double y, const SeriesAccuracy& acc, Eval&& eval) {
  if (auto r = trusted(eval, y, acc)) return *r;
  // Shrink the argument until the series is trustworthy again; the value
  // there bounds the true value at y from above.
  double ys = y;
  for (int i = 0; i < 400; ++i) {
    ys *= 0.9;
    const auto s = trusted(eval, ys, acc);
    if (!s) continue;
    const double bound = std::fabs(s->value) + s->rounding_bound + s->tail_bound;
    require(bound <= acc.rounding_limit, ErrorCode::NonConvergent,
            "Wright series lost significance before the decaying tail became negligible");
    return {0.0, bound, s->rounding_bound, s->terms};
  }
  fail(ErrorCode::NonConvergent, "no trustworthy Wright argument found below y");
}

}  // namespace

void SeriesAccuracy::validate() const {
  require(tol > 0.0, ErrorCode::InvalidParameter, "series tol must be positive");
  require(max_terms >= 1, ErrorCode::InvalidParameter, "series max_terms must be >= 1");
  require(rounding_limit > 0.0, ErrorCode::InvalidParameter, "rounding_limit must be positive");
}

void WrightEval::validate() const {
  accuracy.validate();
  require(rho > -1.0, ErrorCode::InvalidParameter, "Wright series requires rho > -1");
  require(std::isfinite(z) && std::isfinite(beta), ErrorCode::InvalidParameter,
          "Wright arguments must be finite");
}

WrightResult wright_series(const WrightEval& e) {
  e.validate();
  return sum_series(e.z, e.accuracy, e.beta,
                    [&](int k) { return coefficient(k, e.rho, e.beta); });
}

double wright(const WrightEval& e) {
  const WrightResult r = wright_series(e);
  require(r.rounding_bound <= e.accuracy.rounding_limit, ErrorCode::NonConvergent,
          "Wright series lost significance (cancellation error " +
              std::to_string(r.rounding_bound) + ")");
  return r.value;
}

double wright(double z, double rho, double beta, const SeriesAccuracy& acc) {
  return wright(WrightEval{z, rho, beta, acc});
}

double mainardi(double rho, double x, const SeriesAccuracy& acc) {
  require(rho > 0.0 && rho < 1.0, ErrorCode::InvalidParameter, "Mainardi needs 0 < rho < 1");
  return wright(-x, -rho, 1.0 - rho, acc);
}

WrightResult wright_decaying(double y, double nu, double beta, const SeriesAccuracy& acc) {
  check_decaying(y, nu, beta);
  return decaying_impl(y, acc, [&](double arg) {
    return wright_series(WrightEval{-arg, -nu, beta, acc});
  });
}

WrightSeries::WrightSeries(double rho, double beta, SeriesAccuracy acc)
    : rho_(rho), beta_(beta), acc_(acc) {
  WrightEval{0.0, rho, beta, acc}.validate();
  coef_.reserve(static_cast<std::size_t>(acc.max_terms));
  for (int k = 0; k < acc.max_terms; ++k) coef_.push_back(coefficient(k, rho, beta));
}

WrightResult WrightSeries::evaluate(double z) const {
  require(std::isfinite(z), ErrorCode::InvalidParameter, "Wright argument must be finite");
  return sum_series(z, acc_, beta_, [this](int k) { return coef_[static_cast<std::size_t>(k)]; });
}

double WrightSeries::operator()(double z) const {
  const WrightResult r = evaluate(z);
  require(r.rounding_bound <= acc_.rounding_limit, ErrorCode::NonConvergent,
          "Wright series lost significance");
  return r.value;
}

WrightResult WrightSeries::decaying(double y) const {
  check_decaying(y, -rho_, beta_);
  return decaying_impl(y, acc_, [this](double arg) { return evaluate(-arg); });
}

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

double sin_pi(double x) { return static_cast<double>(sin_pi_ld(x)); }

double gamma(double x) {
  require(!(x <= 0.0 && x == std::floor(x)), ErrorCode::PoleError,
          "Gamma has a pole at " + std::to_string(x));
  const double g = std::tgamma(x);
  require(std::isfinite(g), ErrorCode::Overflow, "Gamma overflows at " + std::to_string(x));
  return g;
}

double log_gamma(double x) {
  require(x > 0.0, ErrorCode::InvalidParameter, "log_gamma requires x > 0");
  int sign = 0;
  return lgamma_r(x, &sign);
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 0.0) {
    if (x < 170.0) return 1.0 / std::tgamma(x);
    return std::exp(-log_gamma(x));
  }
  if (x > -170.0) return 1.0 / std::tgamma(x);
  // reflection keeps the magnitude representable
  return static_cast<double>(std::exp(lgamma_ld(1.0L - x) - kLogPi) * sin_pi_ld(x));
}

std::uint64_t double_factorial(int n) {
  require(n >= 1 && (n % 2) == 1, ErrorCode::InvalidParameter,
          "double_factorial expects an odd n >= 1");
  std::uint64_t acc = 1;
  for (int k = n; k > 1; k -= 2) {
    require(!__builtin_mul_overflow(acc, static_cast<std::uint64_t>(k), &acc),
            ErrorCode::Overflow, "double factorial exceeds 64 bits");
  }
  return acc;
}

}  // namespace fstefan
