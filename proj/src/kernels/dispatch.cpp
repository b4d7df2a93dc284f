#include <cstdlib>
#include <string_view>

#include "fstefan/error.hpp"
#include "fstefan/kernels.hpp"

namespace fstefan::kernels {

namespace {

const KernelTable& select() {
  const char* forced = std::getenv("FSTEFAN_SIMD");
  if (forced != nullptr && *forced != '\0' && std::string_view(forced) != "auto") {
    const std::string_view name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && supported(isa)) return table(isa);
    }
    fail(ErrorCode::InvalidParameter,
         "FSTEFAN_SIMD names an unknown or unsupported kernel set: " + std::string(name));
  }
  if (supported(Isa::Avx2)) return table(Isa::Avx2);
  if (supported(Isa::Neon)) return table(Isa::Neon);
  return detail::kScalarTable;
}

void check_sizes(bool ok) {
  require(ok, ErrorCode::InvalidParameter, "kernel operand lengths do not match");
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(FSTEFAN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(FSTEFAN_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  require(supported(isa), ErrorCode::InvalidParameter,
          std::string("kernel set not supported on this CPU: ") + to_string(isa));
  switch (isa) {
#if defined(FSTEFAN_HAVE_AVX2)
    case Isa::Avx2: return detail::kAvx2Table;
#endif
#if defined(FSTEFAN_HAVE_NEON)
    case Isa::Neon: return detail::kNeonTable;
#endif
    default: return detail::kScalarTable;
  }
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

double dot(std::span<const double> a, std::span<const double> b) {
  check_sizes(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}

double convolve_tap(std::span<const double> taps, std::span<const double> f) {
  check_sizes(taps.size() >= f.size());
  return active().convolve_tap(taps.data(), f.data(), f.size());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  check_sizes(a.size() == b.size());
  return active().max_abs_diff(a.data(), b.data(), a.size());
}

}  // namespace fstefan::kernels
