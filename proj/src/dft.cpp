#include "ineq/dft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ineq/errors.hpp"
#include "ineq/kernels.hpp"

namespace ineq {
namespace {

std::size_t count_nonzero(const std::vector<double>& moduli, double zero_tol) {
  const double peak = *std::max_element(moduli.begin(), moduli.end());
  if (peak == 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(
      moduli.begin(), moduli.end(), [&](double m) { return m > zero_tol * peak; }));
}

std::vector<double> moduli(const std::vector<std::complex<double>>& v) {
  std::vector<double> m(v.size());
  std::transform(v.begin(), v.end(), m.begin(), [](const auto& z) { return std::abs(z); });
  return m;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw DegenerateError("dft of an empty vector");

  std::vector<double> re(n), im(n), c(n), s(n), out_re(n), out_im(n);
  for (std::size_t k = 0; k < n; ++k) {
    re[k] = a[k].real();
    im[k] = a[k].imag();
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    c[k] = std::cos(angle);
    s[k] = std::sin(angle);
  }
  kernels::dft({re.data(), im.data(), c.data(), s.data(), n, out_re.data(), out_im.data()});

  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<std::complex<double>> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = {out_re[j] * norm, out_im[j] * norm};
  return b;
}

UncertaintyReport dft_uncertainty(const std::vector<std::complex<double>>& a, double zero_tol) {
  if (!(zero_tol >= 0.0)) throw ParameterError("zero_tol must be nonnegative");
  const auto ma = moduli(a);
  if (a.empty() || *std::max_element(ma.begin(), ma.end()) == 0.0) {
    throw DegenerateError("dft_uncertainty needs a nonzero vector");
  }
  UncertaintyReport r;
  r.n = a.size();
  r.A = count_nonzero(ma, zero_tol);
  r.B = count_nonzero(moduli(dft(a)), zero_tol);
  r.product = r.A * r.B;
  r.holds = r.product >= r.n;
  r.equality = r.product == r.n;
  return r;
}

}  // namespace ineq
