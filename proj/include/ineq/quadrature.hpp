#pragma once

#include <cstddef>
#include <functional>

namespace ineq {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

inline constexpr int kQuadratureDepthCap = 60;

/// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b].
/// Stops once the summed error estimate is at most max(tol, tol * |I|).
/// Throws ConvergenceError if an interval would be split beyond depth 60.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol);

inline double quadrature(const std::function<double(double)>& f, double a, double b,
                         double tol) {
  return integrate(f, a, b, tol).value;
}

/// One 15-point Kronrod panel on [a, b]; `err` receives |K15 - G7|.
double kronrod15(const std::function<double(double)>& f, double a, double b, double* err);

}  // namespace ineq
