#pragma once

#include <optional>
#include <vector>

#include "ineq/chain.hpp"
#include "ineq/function_spec.hpp"

namespace ineq {

enum class YoungCase { BothAboveOne, BothBelowOne, Straddle };
enum class YoungWinner { Standard, Swapped, Tie };

struct YoungComparison {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double q = 0.0;
  /// x^p/p + y^q/q
  double rhs_standard = 0.0;
  /// x^q/q + y^p/p
  double rhs_swapped = 0.0;
  double product = 0.0;
  YoungCase case_id = YoungCase::BothAboveOne;
  /// The smaller right-hand side wins.
  YoungWinner winner = YoungWinner::Tie;
  /// Threshold for the larger argument in the Straddle case.
  std::optional<double> y_critical;
};

inline constexpr double kYoungTieRel = 1e-12;
inline constexpr double kCriticalBracketHi = 1e6;

/// Both Young bounds for x, y >= 0 and p > 1, q = p/(p-1). Classification and
/// the critical value use the normalized frame max(x,y), min(x,y),
/// max(p,q); values are reported in the caller's coordinates.
YoungComparison young_pair(double x, double y, double p);

const char* to_string(YoungCase c);
const char* to_string(YoungWinner w);

/// Root y >= 1 of x^p/p - x^q/q = y^p/p - y^q/q for 0 <= x <= 1, p >= 2, by
/// bisection on [1, 1e6]. Throws ParameterError on bad input and
/// BracketError if the bracket holds no sign change.
double critical_y(double x, double p, double tol = 1e-12);

/// int_0^a f + int_0^b f^{-1} - a b for increasing f with f(0) = 0. The
/// inverse is found by bisection. Throws PreconditionError if f(0) != 0 or f
/// decreases, DomainError if b is out of reach of f on [0, 1e6].
double young_integral_gap(const FunctionSpec& f, double a, double b);

/// sum (a_k/A)(b_k/B) <= sum(max^p/p + min^q/q) <= 1 with A = ||a||_p,
/// B = ||b||_q, max/min taken over each normalized pair. Requires p >= 2.
ChainReport rgh_refined_chain(const std::vector<double>& a, const std::vector<double>& b,
                              double p);

}  // namespace ineq
