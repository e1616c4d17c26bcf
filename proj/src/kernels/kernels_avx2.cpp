#include <immintrin.h>

#include <cstdint>

#include "ineq/kernels.hpp"

namespace ineq::kernels::avx2 {
namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_sq(const double* x, std::size_t n) { return dot(x, x, n); }

void dft(const DftArgs& a) {
  const std::size_t n = a.n;
  for (std::size_t j = 0; j < n; ++j) {
    __m256d sr = _mm256_setzero_pd();
    __m256d si = _mm256_setzero_pd();
    // Twiddle indices m_k = j k mod n for four consecutive k.
    const std::int64_t step = static_cast<std::int64_t>(j % n);
    std::int64_t m0 = 0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      std::int64_t idx[4];
      std::int64_t m = m0;
      for (int l = 0; l < 4; ++l) {
        idx[l] = m;
        m += step;
        if (m >= static_cast<std::int64_t>(n)) m -= static_cast<std::int64_t>(n);
      }
      m0 = m;
      const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx));
      const __m256d c = _mm256_i64gather_pd(a.cos_table, vi, 8);
      const __m256d s = _mm256_i64gather_pd(a.sin_table, vi, 8);
      const __m256d xr = _mm256_loadu_pd(a.re + k);
      const __m256d xi = _mm256_loadu_pd(a.im + k);
      sr = _mm256_fmadd_pd(xr, c, sr);
      sr = _mm256_fmadd_pd(xi, s, sr);
      si = _mm256_fmadd_pd(xi, c, si);
      si = _mm256_fnmadd_pd(xr, s, si);
    }
    double tr = hsum(sr);
    double ti = hsum(si);
    std::size_t m = static_cast<std::size_t>(m0);
    for (; k < n; ++k) {
      const double c = a.cos_table[m];
      const double s = a.sin_table[m];
      tr += a.re[k] * c + a.im[k] * s;
      ti += a.im[k] * c - a.re[k] * s;
      m += j;
      if (m >= n) m -= n;
    }
    a.out_re[j] = tr;
    a.out_im[j] = ti;
  }
}

}  // namespace ineq::kernels::avx2
