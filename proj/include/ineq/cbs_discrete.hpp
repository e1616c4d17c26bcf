#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ineq/chain.hpp"
#include "ineq/function_spec.hpp"
#include "ineq/means.hpp"

namespace ineq {

/// (sum x y)^2 <= (sum M(x,y)^2)(sum M*(x,y)^2) <= (sum x^2)(sum y^2) for
/// strictly positive vectors of equal length.
ChainReport cbs_chain(const std::vector<double>& x, const std::vector<double>& y,
                      const MeanSpec& spec);

/// The middle product (sum M^2)(sum M*^2) alone.
double cbs_middle(const std::vector<double>& x, const std::vector<double>& y,
                  const MeanSpec& spec);

struct CdeViolation {
  int condition = 0;  // 1: f g = x^2 y^2, 2: degree-2 homogeneity, 3: hybrid condition
  double x = 0.0;
  double y = 0.0;
  double lambda = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CdeReport {
  std::size_t checks = 0;
  std::vector<CdeViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline constexpr double kCdeTol = 1e-10;

using PairFunction = std::function<double(double, double)>;

/// Checks the three sufficient conditions on a pair (f, g) at every grid point:
/// f g = x^2 y^2; f(l x, l y) = l^2 f(x, y) for l in {0.01, 0.5, 2, 100}; and
/// y f(x,1)/(x f(y,1)) + x f(y,1)/(y f(x,1)) <= x/y + y/x.
CdeReport cde_check(const PairFunction& f, const PairFunction& g,
                    const std::vector<std::pair<double, double>>& grid);
/// Same with f = M^2, g = M*^2.
CdeReport cde_check(const MeanSpec& spec, const std::vector<std::pair<double, double>>& grid);

/// Reversed chain for time-like vectors (x0, x), (y0, y) with positive
/// spatial parts: (x0 y0 - sum x y)^2 >= (x0 y0 - sqrt(A))^2 >=
/// (x0^2 - sum x^2)(y0^2 - sum y^2), A the discrete middle product.
ChainReport lorentz_chain(double x0, const std::vector<double>& x, double y0,
                          const std::vector<double>& y, const MeanSpec& spec);

inline constexpr double kJacksonTailTol = 1e-14;

/// (1 - q) sum_k h(q^k) q^k, stopped once the remaining tail is provably
/// below tail_tol given |h| <= bound on (0, 1].
double q_jackson_sum(const std::function<double(double)>& h, double bound, double q,
                     double tail_tol = kJacksonTailTol);
double q_jackson_integral(const FunctionSpec& f, double q, double tail_tol = kJacksonTailTol);

/// The discrete chain with q-integrals over [0, 1] in place of sums.
ChainReport q_cbs_chain(const FunctionSpec& f, const FunctionSpec& g, double q,
                        const MeanSpec& spec, double tail_tol = kJacksonTailTol);

}  // namespace ineq
