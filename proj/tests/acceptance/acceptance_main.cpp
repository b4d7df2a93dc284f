#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fstefan/equations.hpp"
#include "fstefan/frcalc.hpp"
#include "fstefan/specfun.hpp"
#include "fstefan/stefan.hpp"
#include "fstefan/verify.hpp"
#include "oracles.hpp"

using namespace fstefan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string cli(const std::string& args, int* status) {
  return oracle::run_command("\"" FSTEFAN_CLI_PATH "\" " + args + " 2>/dev/null", status);
}

double first_number(const std::string& out) { return std::strtod(out.c_str(), nullptr); }

double key_number(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return std::strtod(line.c_str() + key.size() + 1, nullptr);
  }
  return NAN;
}

Outcome classical_root() {
  Outcome o;
  int status = 0;
  const std::string out = cli("solve classical", &status);
  const double v = first_number(out);
  const double res = key_number(out, "residual");
  o.require(status == 0, "exit " + std::to_string(status));
  o.require(std::fabs(v - 0.6201) <= 5e-4, "eta_1 = " + fmt(v));
  o.require(std::fabs(res) <= 1e-12, "residual " + fmt(res));
  if (o.pass) o.detail = "eta_1 = " + fmt(v) + ", residual " + fmt(res);
  return o;
}

Outcome zero_derivative_point() {
  Outcome o;
  int status = 0;
  const double v = first_number(cli("solve eta0", &status));
  o.require(status == 0, "exit " + std::to_string(status));
  o.require(std::fabs(v - 0.3195) <= 5e-4, "eta_0 = " + fmt(v));
  if (o.pass) o.detail = "eta_0 = " + fmt(v);
  return o;
}

Outcome root_ordering() {
  Outcome o;
  double min_gap = INFINITY;
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    const Alpha alpha{a};
    const int se = count_sign_changes(RootKind::EtaFractional, alpha, 0.0, 5.0, 2000);
    const int sx = count_sign_changes(RootKind::XiFractional, alpha, 0.0, 5.0, 2000);
    o.require(se == 1 && sx == 1, "sign changes at alpha " + fmt(a));
    const double eta = solve(RootKind::EtaFractional, alpha).value;
    const double xi = solve(RootKind::XiFractional, alpha).value;
    o.require(eta < xi && xi - eta > 1e-8, "eta >= xi at alpha " + fmt(a));
    min_gap = std::min(min_gap, xi - eta);
  }
  if (o.pass) o.detail = "one root each for alpha 0.1..0.9, smallest xi - eta " + fmt(min_gap);
  return o;
}

Outcome identities() {
  Outcome o;
  double worst_rel = 0.0;
  for (double x : {0.2, 0.7, 1.5}) {
    for (double a : {0.3, 0.6, 0.9}) {
      worst_rel = std::max(worst_rel, std::fabs(xi_residual(x, Alpha{a}) - xi_residual_long(x, Alpha{a})));
    }
  }
  o.require(worst_rel <= 1e-10, "xi forms differ by " + fmt(worst_rel));

  double worst_deriv = 0.0;
  for (double rho : {-0.45, -0.25, -0.1}) {
    for (double beta : {0.5, 1.0, 1.5}) {
      for (int k = 0; k <= 12; ++k) {
        const double x = -3.0 + 0.25 * k;
        const double fd = oracle::central_difference([&](double z) { return wright(z, rho, beta); }, x, 1e-5);
        worst_deriv = std::max(worst_deriv, std::fabs(fd - wright(x, rho, rho + beta)));
      }
    }
  }
  o.require(worst_deriv <= 1e-6, "derivative rule off by " + fmt(worst_deriv));

  struct Tuple {
    double rho, beta, order, c;
  };
  double worst_ratio = 0.0;
  for (const Tuple tp : {Tuple{0.25, 0.8, 0.3, 1.0}, Tuple{0.4, 0.6, 0.5, 0.7}}) {
    const WrightSeries w(-tp.rho, tp.beta), shifted(-tp.rho, tp.beta + tp.order);
    auto integral = [&](int n) {
      const SampledFunction f = SampledFunction::sample(1.0, n, [&](double t) {
        return t == 0.0 ? 0.0 : std::pow(t, tp.beta - 1.0) * w.decaying(tp.c * std::pow(t, -tp.rho)).value;
      });
      return rl_integral(f, tp.order, n);
    };
    const double coarse = integral(2048), fine = integral(4096);
    const double closed = shifted.decaying(tp.c).value;
    const double observed = std::fabs(coarse - fine);
    const double ratio = std::fabs(fine - closed) / observed;
    worst_ratio = std::max(worst_ratio, ratio);
    o.require(ratio <= 5.0, "integral identity error is " + fmt(ratio) + "x the observed truncation");
  }

  bool integers = true;
  double worst_gamma = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const std::uint64_t dfact = double_factorial(2 * n - 1);
    integers = integers && oracle::factorial(2 * n) == (std::uint64_t{1} << n) * oracle::factorial(n) * dfact;
    const double closed = static_cast<double>(dfact) / std::ldexp(1.0, n) * std::sqrt(std::numbers::pi);
    worst_gamma = std::max(worst_gamma, std::fabs(fstefan::gamma(n + 0.5) - closed) / closed);
  }
  o.require(integers, "factorial split fails");
  o.require(worst_gamma <= 1e-12, "half-integer gamma off by " + fmt(worst_gamma));
  if (o.pass) {
    o.detail = "xi forms " + fmt(worst_rel) + ", derivative rule " + fmt(worst_deriv) + ", integral identity " +
               fmt(worst_ratio) + "x observed error, gamma " + fmt(worst_gamma);
  }
  return o;
}

Outcome limits() {
  Outcome o;
  const SweepReport r = limit_sweep();
  const std::size_t last = r.rows.size() - 2;  // alpha = 0.999, then the alpha = 1 row
  double worst_final = 0.0;
  for (std::size_t c = 1; c < r.columns.size(); ++c) {
    o.require(r.rows.back()[c] <= 1e-10, r.columns[c] + " at alpha 1 is " + fmt(r.rows.back()[c]));
    worst_final = std::max(worst_final, r.rows[last][c]);
    o.require(r.rows[last][c] <= 1e-2, r.columns[c] + " at alpha 0.999 is " + fmt(r.rows[last][c]));
    o.require(r.rows[last][c] <= r.rows[last - 1][c] && r.rows[last - 1][c] <= r.rows[last - 2][c],
              r.columns[c] + " not nonincreasing over 0.9, 0.99, 0.999");
  }
  bool tagged = false;
  for (const SweepFlag& f : r.flags) tagged = tagged || f.calibrated;
  o.require(tagged, "calibrated thresholds are not tagged");
  o.require(r.all_pass(), "a report flag failed");
  if (o.pass) o.detail = "worst gap at alpha 0.999 " + fmt(worst_final) + ", all flags pass";
  return o;
}

Outcome ordering() {
  Outcome o;
  const SweepReport r = ordering_sweep(default_ordering_config({0.25, 0.5, 0.75, 0.9}));
  o.require(r.all_pass(), "a strict-ordering flag failed");
  o.require(r.worst_violation < 0.0, "worst violation " + fmt(r.worst_violation));
  if (o.pass) o.detail = "worst Gamma(delta)W - Gamma(mu)W = " + fmt(r.worst_violation) + " over " +
                         std::to_string(r.rows.size()) + " points, equal at x = 0";
  return o;
}

Outcome pde_residual_check() {
  Outcome o;
  const SelfSimilarSolution p1 = SelfSimilarSolution::make(SolutionKind::CaputoP1, Alpha{0.5});
  const double r1 = pde_residual(p1, {0.2, 1.0}, 4096);
  const double r2 = pde_residual(p1, {0.2, 1.0}, 8192);
  const SelfSimilarSolution cl = SelfSimilarSolution::make(SolutionKind::Classical, Alpha{1.0});
  const double rc = pde_residual(cl, {0.2, 1.0}, 0);
  o.require(r1 <= 1e-2, "residual " + fmt(r1));
  o.require(r1 / r2 >= 1.7, "doubling ratio " + fmt(r1 / r2));
  o.require(rc <= 1e-6, "classical residual " + fmt(rc));
  if (o.pass) o.detail = "n=4096 " + fmt(r1) + ", ratio " + fmt(r1 / r2) + ", classical " + fmt(rc);
  return o;
}

Outcome stefan_conditions() {
  Outcome o;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    const SelfSimilarSolution p1 = SelfSimilarSolution::make(SolutionKind::CaputoP1, Alpha{a});
    worst = std::max(worst, stefan_condition_residual_caputo(p1, 1.0));
  }
  o.require(worst <= 1e-10, "Caputo condition " + fmt(worst));
  const SelfSimilarSolution p1 = SelfSimilarSolution::make(SolutionKind::CaputoP1, Alpha{0.5});
  const SelfSimilarSolution p2 = SelfSimilarSolution::make(SolutionKind::RiemannLiouvilleP2, Alpha{0.5});
  const double good = stefan_condition_residual_rl(p2, 1.0).residual;
  const double control = stefan_condition_residual_rl(p1, 1.0).residual;
  o.require(good <= 5e-2, "RL condition on its own solution " + fmt(good));
  o.require(control > 5e-2, "RL condition on the Caputo solution " + fmt(control));
  if (o.pass) o.detail = "Caputo " + fmt(worst) + ", RL " + fmt(good) + ", control " + fmt(control);
  return o;
}

Outcome convergence() {
  Outcome o;
  const SweepReport r = convergence_sweep();
  const auto& last = r.rows.back();
  o.require(last[3] <= 5e-3 && last[4] <= 5e-3, "root gaps " + fmt(last[3]) + ", " + fmt(last[4]));
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    for (std::size_t c : {3u, 4u, 6u, 7u}) {
      o.require(r.rows[i][c] <= r.rows[i - 1][c], r.columns[c] + " rises at alpha " + fmt(r.rows[i][0]));
    }
  }
  o.require(r.all_pass(), "a report flag failed");
  if (o.pass) {
    o.detail = "at alpha 0.999 |eta - eta_1| " + fmt(last[3]) + ", |xi - eta_1| " + fmt(last[4]) +
               ", temperature gaps " + fmt(last[6]) + ", " + fmt(last[7]);
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands{
      "eval wright -- -2 -0.5 1", "solve xi --alpha 0.5", "profile caputo --alpha 0.5 --t 1 --n 101",
      "residual stefan-rl --alpha 0.5 --t 1", "sweep figure --alpha 0.75", "sweep limits --format json",
  };
  for (const std::string& c : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = cli(c, &s1);
    const std::string b = cli(c, &s2);
    o.require(s1 == 0 && s2 == 0 && !a.empty(), "'" + c + "' failed");
    o.require(a == b, "'" + c + "' differs between runs");
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"classical root", classical_root},
      {"zero-derivative point", zero_derivative_point},
      {"fractional root ordering", root_ordering},
      {"identity suite", identities},
      {"limit suite", limits},
      {"ordering suite", ordering},
      {"diffusion residual", pde_residual_check},
      {"front conditions", stefan_conditions},
      {"convergence sweep", convergence},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
