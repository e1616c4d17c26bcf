#include "ineq/kernels.hpp"

namespace ineq::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_sq(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void dft(const DftArgs& a) {
  const std::size_t n = a.n;
  for (std::size_t j = 0; j < n; ++j) {
    double sr = 0.0;
    double si = 0.0;
    std::size_t m = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double c = a.cos_table[m];
      const double s = a.sin_table[m];
      sr += a.re[k] * c + a.im[k] * s;
      si += a.im[k] * c - a.re[k] * s;
      m += j;
      if (m >= n) m -= n;
    }
    a.out_re[j] = sr;
    a.out_im[j] = si;
  }
}

}  // namespace ineq::kernels::scalar
