#pragma once

namespace ineq {

/// Evaluated three-term inequality chain left <= middle <= right, or
/// left >= middle >= right when `reversed` is set.
struct ChainReport {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
  bool ordered = false;
  /// Oriented so that both slacks are >= 0 when the chain holds:
  /// middle - left and right - middle, or their negatives when reversed.
  double slack_left = 0.0;
  double slack_right = 0.0;
  double tolerance = 0.0;
  bool reversed = false;

  double scale() const;
};

inline constexpr double kDiscreteChainTol = 1e-12;
inline constexpr double kIntegralChainTol = 1e-8;

/// Builds the report; ordered iff both slacks are >= -tol * scale with
/// scale = max(|left|, |middle|, |right|).
ChainReport make_chain(double left, double middle, double right, double tol,
                       bool reversed = false);

}  // namespace ineq
