#include <cmath>

#include "fstefan/kernels.hpp"

namespace fstefan::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double convolve_tap_scalar(const double* taps, const double* f, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += taps[n - 1 - j] * f[j];
  return s;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m || std::isnan(d)) m = d;
  }
  return m;
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar, "scalar", dot_scalar, convolve_tap_scalar,
                               max_abs_diff_scalar};

}  // namespace fstefan::kernels::detail
