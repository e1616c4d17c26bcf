#pragma once

#include <cstddef>

#include "ineq/means.hpp"

namespace ineq {

struct IterationResult {
  double value = 0.0;
  std::size_t iterations = 0;
  /// |x_n - y_n| / max(x_n, y_n) at exit.
  double final_gap = 0.0;
};

inline constexpr std::size_t kIterationCap = 200;

/// Runs x <- M(x, y), y <- N(x, y) from (x0, y0) until the relative gap is at
/// most `tol`. Throws DomainError for nonpositive starts and ConvergenceError
/// when the cap is reached first.
IterationResult iterate_means(const MeanSpec& m, const MeanSpec& n, double x0, double y0,
                              double tol);

/// Arithmetic-geometric mean. Inputs are ordered so that x >= y internally.
double agm(double x, double y, double tol = 1e-15);

}  // namespace ineq
