#include <arm_neon.h>

#include <cmath>

#include "fstefan/kernels.hpp"

namespace fstefan::kernels::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double convolve_tap_neon(const double* taps, const double* f, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const float64x2_t t0 = vextq_f64(vld1q_f64(taps + n - 2 - j), vld1q_f64(taps + n - 2 - j), 1);
    const float64x2_t t1 = vextq_f64(vld1q_f64(taps + n - 4 - j), vld1q_f64(taps + n - 4 - j), 1);
    acc0 = vfmaq_f64(acc0, t0, vld1q_f64(f + j));
    acc1 = vfmaq_f64(acc1, t1, vld1q_f64(f + j + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; j < n; ++j) s += taps[n - 1 - j] * f[j];
  return s;
}

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  bool nan_seen = false;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    nan_seen = nan_seen || std::isnan(vgetq_lane_f64(d, 0)) || std::isnan(vgetq_lane_f64(d, 1));
    m = vmaxq_f64(m, d);
  }
  double r = vmaxvq_f64(m);
  if (nan_seen) r = std::nan("");
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > r || std::isnan(d)) r = d;
  }
  return r;
}

}  // namespace

const KernelTable kNeonTable{Isa::Neon, "neon", dot_neon, convolve_tap_neon, max_abs_diff_neon};

}  // namespace fstefan::kernels::detail
