#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ineq {

/// b_j = n^{-1/2} sum_k a_k w^{-j k}, w = exp(2 pi i / n), by the direct sum.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& a);

struct UncertaintyReport {
  std::size_t n = 0;
  std::size_t A = 0;  // nonzero entries of the input
  std::size_t B = 0;  // nonzero entries of its transform
  std::size_t product = 0;
  bool holds = false;    // A B >= n
  bool equality = false; // A B == n
};

inline constexpr double kDftZeroTol = 1e-9;

/// An entry counts as nonzero when its modulus exceeds zero_tol times the
/// largest modulus of its vector. Throws DegenerateError for a zero vector.
UncertaintyReport dft_uncertainty(const std::vector<std::complex<double>>& a,
                                  double zero_tol = kDftZeroTol);

}  // namespace ineq
