#include <immintrin.h>

#include <cmath>

#include "fstefan/kernels.hpp"

namespace fstefan::kernels::detail {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

// taps are walked backwards: lane order is reversed after each load.
double convolve_tap_avx2(const double* taps, const double* f, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256d t0 = _mm256_permute4x64_pd(_mm256_loadu_pd(taps + n - 4 - j), 0x1B);
    const __m256d t1 = _mm256_permute4x64_pd(_mm256_loadu_pd(taps + n - 8 - j), 0x1B);
    acc0 = _mm256_fmadd_pd(t0, _mm256_loadu_pd(f + j), acc0);
    acc1 = _mm256_fmadd_pd(t1, _mm256_loadu_pd(f + j + 4), acc1);
  }
  for (; j + 4 <= n; j += 4) {
    const __m256d t0 = _mm256_permute4x64_pd(_mm256_loadu_pd(taps + n - 4 - j), 0x1B);
    acc0 = _mm256_fmadd_pd(t0, _mm256_loadu_pd(f + j), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; j < n; ++j) s += taps[n - 1 - j] * f[j];
  return s;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  __m256d nan_seen = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_andnot_pd(sign, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(d, d, _CMP_UNORD_Q));
    m = _mm256_max_pd(m, d);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = lanes[0];
  for (int k = 1; k < 4; ++k) r = lanes[k] > r ? lanes[k] : r;
  if (_mm256_movemask_pd(nan_seen) != 0) r = std::nan("");
  for (; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > r || std::isnan(d)) r = d;
  }
  return r;
}

}  // namespace

const KernelTable kAvx2Table{Isa::Avx2, "avx2", dot_avx2, convolve_tap_avx2, max_abs_diff_avx2};

}  // namespace fstefan::kernels::detail
