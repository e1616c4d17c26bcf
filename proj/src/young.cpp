#include "ineq/young.hpp"

#include <algorithm>
#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"

namespace ineq {
namespace {

constexpr double kGapQuadTol = 1e-12;
constexpr double kInverseReach = 1e6;
constexpr int kBisectionCap = 400;

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("Young exponent p must exceed 1");
  return p / (p - 1.0);
}

// Bisection on a monotone bracket until the midpoint stops moving.
template <class F>
double bisect(F&& increasing, double lo, double hi) {
  for (int i = 0; i < kBisectionCap; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (increasing(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(YoungCase c) {
  switch (c) {
    case YoungCase::BothAboveOne: return "BothAboveOne";
    case YoungCase::BothBelowOne: return "BothBelowOne";
    case YoungCase::Straddle: return "Straddle";
  }
  return "?";
}

const char* to_string(YoungWinner w) {
  switch (w) {
    case YoungWinner::Standard: return "Standard";
    case YoungWinner::Swapped: return "Swapped";
    case YoungWinner::Tie: return "Tie";
  }
  return "?";
}

YoungComparison young_pair(double x, double y, double p) {
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw ParameterError("Young arguments must be finite and nonnegative");
  }
  const double q = conjugate_exponent(p);

  YoungComparison r;
  r.x = x;
  r.y = y;
  r.p = p;
  r.q = q;
  r.product = x * y;
  r.rhs_standard = std::pow(x, p) / p + std::pow(y, q) / q;
  r.rhs_swapped = std::pow(x, q) / q + std::pow(y, p) / p;

  const double diff = r.rhs_standard - r.rhs_swapped;
  const double scale = std::max(r.rhs_standard, r.rhs_swapped);
  if (std::abs(diff) <= kYoungTieRel * scale) {
    r.winner = YoungWinner::Tie;
  } else {
    r.winner = diff < 0.0 ? YoungWinner::Standard : YoungWinner::Swapped;
  }

  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo >= 1.0) {
    r.case_id = YoungCase::BothAboveOne;
  } else if (hi <= 1.0) {
    r.case_id = YoungCase::BothBelowOne;
  } else {
    r.case_id = YoungCase::Straddle;
    r.y_critical = critical_y(lo, std::max(p, q));
  }
  return r;
}

double critical_y(double x, double p, double tol) {
  if (!(x >= 0.0) || !(x <= 1.0)) throw ParameterError("critical_y requires 0 <= x <= 1");
  if (!(p >= 2.0) || !std::isfinite(p)) throw ParameterError("critical_y requires p >= 2");
  if (!(tol > 0.0)) throw ParameterError("critical_y tolerance must be positive");
  const double q = p / (p - 1.0);
  if (x == 1.0) return 1.0;

  const double target = std::pow(x, p) / p - std::pow(x, q) / q;
  // Strictly increasing on [1, inf) because p > q.
  auto residual = [&](double y) { return std::pow(y, p) / p - std::pow(y, q) / q - target; };

  double lo = 1.0;
  double hi = kCriticalBracketHi;
  if (residual(lo) > 0.0 || residual(hi) < 0.0) {
    throw BracketError("critical_y: no sign change on [1, 1e6]");
  }
  for (int i = 0; i < kBisectionCap; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double r = residual(mid);
    if (std::abs(r) <= tol || mid <= lo || mid >= hi) return mid;
    if (r < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double young_integral_gap(const FunctionSpec& f, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParameterError("young_integral_gap needs a, b > 0");
  if (std::abs(f(0.0)) > 1e-14) throw PreconditionError("young_integral_gap needs f(0) = 0");

  // Smallest power-of-two reach with f(reach) >= b.
  double reach = std::max(a, 1.0);
  while (f(reach) < b) {
    reach *= 2.0;
    if (reach > kInverseReach) throw DomainError("b lies beyond the range of f on [0, 1e6]");
  }
  require_nondecreasing(f, 0.0, std::max(a, reach));

  auto inverse = [&](double s) {
    if (s <= 0.0) return 0.0;
    return bisect([&](double t) { return f(t) - s; }, 0.0, reach);
  };

  const double direct = quadrature([&](double t) { return f(t); }, 0.0, a, kGapQuadTol);
  const double inverted = quadrature(inverse, 0.0, b, kGapQuadTol);
  return direct + inverted - a * b;
}

ChainReport rgh_refined_chain(const std::vector<double>& a, const std::vector<double>& b,
                              double p) {
  if (a.size() != b.size() || a.empty()) {
    throw PreconditionError("vectors must be nonempty and of equal length");
  }
  if (!(p >= 2.0) || !std::isfinite(p)) throw ParameterError("refined Hoelder chain needs p >= 2");
  const double q = p / (p - 1.0);
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] >= 0.0) || !(b[k] >= 0.0)) throw PreconditionError("entries must be nonnegative");
    sa += std::pow(a[k], p);
    sb += std::pow(b[k], q);
  }
  if (sa == 0.0 || sb == 0.0) throw DegenerateError("a zero vector has no normalization");
  const double na = std::pow(sa, 1.0 / p);
  const double nb = std::pow(sb, 1.0 / q);

  double left = 0.0;
  double middle = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double u = a[k] / na;
    const double v = b[k] / nb;
    left += u * v;
    middle += std::pow(std::max(u, v), p) / p + std::pow(std::min(u, v), q) / q;
  }
  return make_chain(left, middle, 1.0, kDiscreteChainTol);
}

}  // namespace ineq
