#pragma once

#include <cstddef>

namespace ineq::kernels {

/// Direct DFT over precomputed twiddles: out_j = sum_k a_k (c[m] - i s[m])
/// with m = j k mod n, c[m] = cos(2 pi m / n), s[m] = sin(2 pi m / n).
/// No normalization is applied.
struct DftArgs {
  const double* re;
  const double* im;
  const double* cos_table;
  const double* sin_table;
  std::size_t n;
  double* out_re;
  double* out_im;
};

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void dft(const DftArgs& args);
}  // namespace scalar

#if defined(INEQ_WITH_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void dft(const DftArgs& args);
}  // namespace avx2
#endif

enum class Isa { Scalar, Avx2 };

/// True when the AVX2 variants are compiled in and the CPU supports AVX2+FMA.
bool avx2_available();
/// Variant used by the dispatching entry points below; chosen once.
Isa active_isa();
const char* to_string(Isa isa);

double dot(const double* x, const double* y, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void dft(const DftArgs& args);

}  // namespace ineq::kernels
