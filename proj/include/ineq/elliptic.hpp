#pragma once

namespace ineq {

enum class KMethod { Agm, Quadrature };

/// Complete elliptic integral of the first kind in modulus form,
/// K(x) = integral over [0, 1] of dt / sqrt((1 - t^2)(1 - x^2 t^2)), 0 <= x < 1.
/// Throws DomainError outside [0, 1).
double elliptic_k(double x, KMethod method = KMethod::Agm);

struct BoundsReport {
  double x = 0.0;
  double L0 = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double K = 0.0;
  double G2 = 0.0;
  double G1 = 0.0;
  double G0 = 0.0;
  bool chain_ok = false;
  /// Largest relative defect over the six links of
  /// L0 <= L1 <= L2 <= K <= G2 <= G1 <= G0; <= 0 when every link holds.
  double max_violation = 0.0;
};

inline constexpr double kEllipticChainTol = 1e-10;

/// Elementary lower bounds L0 < L1 < L2 and upper bounds G2 < G1 < G0 for K(x)
/// at 0 < x < 1, with the reference K from the AGM. Throws DomainError
/// outside (0, 1).
BoundsReport elliptic_bounds(double x);

}  // namespace ineq
