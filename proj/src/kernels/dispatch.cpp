#include "ineq/kernels.hpp"

namespace ineq::kernels {

bool avx2_available() {
#if defined(INEQ_WITH_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = avx2_available() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double dot(const double* x, const double* y, std::size_t n) {
#if defined(INEQ_WITH_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::dot(x, y, n);
#endif
  return scalar::dot(x, y, n);
}

double sum_sq(const double* x, std::size_t n) {
#if defined(INEQ_WITH_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::sum_sq(x, n);
#endif
  return scalar::sum_sq(x, n);
}

void dft(const DftArgs& args) {
#if defined(INEQ_WITH_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::dft(args);
#endif
  scalar::dft(args);
}

}  // namespace ineq::kernels
