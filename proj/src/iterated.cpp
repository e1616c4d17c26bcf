#include "ineq/iterated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ineq/errors.hpp"

namespace ineq {
namespace {

double relative_gap(double x, double y) {
  const double hi = std::max(x, y);
  return hi == 0.0 ? 0.0 : std::abs(x - y) / hi;
}

}  // namespace

IterationResult iterate_means(const MeanSpec& m, const MeanSpec& n, double x0, double y0,
                              double tol) {
  if (!(x0 > 0.0) || !(y0 > 0.0)) {
    throw DomainError("iterate_means: starting values must be positive");
  }
  if (!(tol > 0.0)) throw ParameterError("iterate_means: tolerance must be positive");

  double x = x0;
  double y = y0;
  double gap = relative_gap(x, y);
  std::size_t k = 0;
  while (gap > tol) {
    if (k == kIterationCap) {
      throw ConvergenceError("iterate_means: no common limit after " +
                             std::to_string(kIterationCap) + " iterations (gap " +
                             std::to_string(gap) + ")");
    }
    const double xn = eval_mean(m, x, y);
    const double yn = eval_mean(n, x, y);
    x = xn;
    y = yn;
    gap = relative_gap(x, y);
    ++k;
  }
  return {0.5 * (x + y), k, gap};
}

double agm(double x, double y, double tol) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("agm: arguments must be positive");
  if (!(tol > 0.0)) throw ParameterError("agm: tolerance must be positive");
  double a = std::max(x, y);
  double b = std::min(x, y);
  // Quadratic convergence; the cap only guards against a tolerance below the
  // rounding floor, where a and b settle on neighbouring doubles.
  for (std::size_t k = 0; k < kIterationCap; ++k) {
    if (a - b <= tol * a) break;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (an == a && bn == b) break;
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

}  // namespace ineq
