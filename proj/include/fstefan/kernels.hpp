#pragma once

// Data-parallel inner loops of the fractional quadratures. Each kernel has a
// scalar reference and vector variants; the variant is chosen once per
// process from the CPU features, or forced with FSTEFAN_SIMD=scalar|avx2|neon.

#include <cstddef>
#include <span>

namespace fstefan::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  const char* name;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_{j=0}^{n-1} taps[n-1-j] * f[j]
  double (*convolve_tap)(const double* taps, const double* f, std::size_t n);
  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

bool supported(Isa isa) noexcept;
const KernelTable& table(Isa isa);
const KernelTable& active();

const char* to_string(Isa isa) noexcept;

double dot(std::span<const double> a, std::span<const double> b);
// Discrete convolution evaluated at the last sample of f:
// sum_j taps[m - j] * f[j] with m = f.size() - 1. Needs taps.size() >= f.size().
double convolve_tap(std::span<const double> taps, std::span<const double> f);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

namespace detail {
extern const KernelTable kScalarTable;
#if defined(FSTEFAN_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(FSTEFAN_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace fstefan::kernels
