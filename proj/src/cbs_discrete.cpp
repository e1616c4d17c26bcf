#include "ineq/cbs_discrete.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/kernels.hpp"

namespace ineq {
namespace {

constexpr std::array<double, 4> kCdeLambdas = {0.01, 0.5, 2.0, 100.0};
constexpr long kJacksonTermCap = 100000000;

void require_pair(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw PreconditionError("vectors differ in length");
  if (x.empty()) throw PreconditionError("vectors must be nonempty");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0) || !std::isfinite(x[k]) || !std::isfinite(y[k])) {
      throw PreconditionError("entry " + std::to_string(k) + " is not strictly positive");
    }
  }
}

bool close(double lhs, double rhs) {
  return std::abs(lhs - rhs) <= kCdeTol * std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace

double cbs_middle(const std::vector<double>& x, const std::vector<double>& y,
                  const MeanSpec& spec) {
  require_pair(x, y);
  std::vector<double> m(x.size());
  std::vector<double> mc(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    m[k] = eval_mean(spec, x[k], y[k]);
    mc[k] = (x[k] / m[k]) * y[k];
  }
  return kernels::sum_sq(m.data(), m.size()) * kernels::sum_sq(mc.data(), mc.size());
}

ChainReport cbs_chain(const std::vector<double>& x, const std::vector<double>& y,
                      const MeanSpec& spec) {
  const double middle = cbs_middle(x, y, spec);
  const double xy = kernels::dot(x.data(), y.data(), x.size());
  const double right = kernels::sum_sq(x.data(), x.size()) * kernels::sum_sq(y.data(), y.size());
  return make_chain(xy * xy, middle, right, kDiscreteChainTol);
}

CdeReport cde_check(const PairFunction& f, const PairFunction& g,
                    const std::vector<std::pair<double, double>>& grid) {
  if (grid.empty()) throw ParameterError("cde_check grid is empty");
  CdeReport rep;
  for (const auto& [x, y] : grid) {
    if (!(x > 0.0) || !(y > 0.0)) throw PreconditionError("cde_check grid must be positive");
    const double fxy = f(x, y);

    const double prod = fxy * g(x, y);
    const double target = x * x * y * y;
    ++rep.checks;
    if (!close(prod, target)) rep.violations.push_back({1, x, y, 1.0, prod, target});

    for (double l : kCdeLambdas) {
      const double scaled = f(l * x, l * y);
      ++rep.checks;
      if (!close(scaled, l * l * fxy)) rep.violations.push_back({2, x, y, l, scaled, l * l * fxy});
    }

    const double fx1 = f(x, 1.0);
    const double fy1 = f(y, 1.0);
    const double u = (y * fx1) / (x * fy1);
    const double lhs = u + 1.0 / u;
    const double rhs = x / y + y / x;
    ++rep.checks;
    if (lhs > rhs * (1.0 + kCdeTol)) rep.violations.push_back({3, x, y, 1.0, lhs, rhs});
  }
  return rep;
}

CdeReport cde_check(const MeanSpec& spec, const std::vector<std::pair<double, double>>& grid) {
  auto f = [&spec](double x, double y) {
    const double m = eval_mean(spec, x, y);
    return m * m;
  };
  auto g = [&spec](double x, double y) {
    const double m = conjugate_eval(spec, x, y);
    return m * m;
  };
  return cde_check(f, g, grid);
}

ChainReport lorentz_chain(double x0, const std::vector<double>& x, double y0,
                          const std::vector<double>& y, const MeanSpec& spec) {
  if (!(x0 > 0.0) || !(y0 > 0.0)) throw PreconditionError("time components must be positive");
  require_pair(x, y);
  const double xx = kernels::sum_sq(x.data(), x.size());
  const double yy = kernels::sum_sq(y.data(), y.size());
  if (x0 * x0 < xx || y0 * y0 < yy) throw PreconditionError("vectors are not time-like");

  const double t = x0 * y0;
  const double xy = kernels::dot(x.data(), y.data(), x.size());
  const double a = cbs_middle(x, y, spec);
  const double left = (t - xy) * (t - xy);
  const double mid = (t - std::sqrt(a)) * (t - std::sqrt(a));
  const double right = (x0 * x0 - xx) * (y0 * y0 - yy);
  return make_chain(left, mid, right, kDiscreteChainTol, true);
}

double q_jackson_sum(const std::function<double(double)>& h, double bound, double q,
                     double tail_tol) {
  if (!(q > 0.0) || !(q < 1.0)) throw ParameterError("q must lie in (0, 1)");
  if (!(tail_tol > 0.0)) throw ParameterError("tail_tol must be positive");
  if (!(bound >= 0.0) || !std::isfinite(bound)) throw ParameterError("bound must be finite");
  // The tail from index k is at most sum_{j >= k} (1 - q) q^j bound = q^k bound.
  double sum = 0.0;
  double qk = 1.0;
  for (long k = 0; qk * bound >= tail_tol; ++k) {
    if (k >= kJacksonTermCap) throw ConvergenceError("q-series did not reach tail tolerance");
    sum += h(qk) * qk;
    qk *= q;
  }
  return (1.0 - q) * sum;
}

double q_jackson_integral(const FunctionSpec& f, double q, double tail_tol) {
  return q_jackson_sum([&f](double t) { return f(t); }, f.sup_bound_unit(), q, tail_tol);
}

ChainReport q_cbs_chain(const FunctionSpec& f, const FunctionSpec& g, double q,
                        const MeanSpec& spec, double tail_tol) {
  require_positive(f, 0.0, 1.0);
  require_positive(g, 0.0, 1.0);
  const double bf = f.sup_bound_unit();
  const double bg = g.sup_bound_unit();
  const double bm = std::max(bf, bg);

  if (!(q > 0.0) || !(q < 1.0)) throw ParameterError("q must lie in (0, 1)");
  if (!(tail_tol > 0.0)) throw ParameterError("tail_tol must be positive");

  // All five q-integrals share one node set, so the truncated sums are
  // themselves a positively weighted discrete chain.
  const double bound = std::max({bf * bg, bm * bm, bf * bf, bg * bg});
  double fg = 0.0, mm = 0.0, mc = 0.0, ff = 0.0, gg = 0.0;
  double qk = 1.0;
  for (long k = 0; qk * bound >= tail_tol; ++k) {
    if (k >= kJacksonTermCap) throw ConvergenceError("q-series did not reach tail tolerance");
    const double fv = f(qk);
    const double gv = g(qk);
    if (!(fv > 0.0) || !(gv > 0.0)) throw PreconditionError("function is not positive at a q-node");
    const double m = eval_mean(spec, fv, gv);
    const double c = (fv / m) * gv;
    fg += fv * gv * qk;
    mm += m * m * qk;
    mc += c * c * qk;
    ff += fv * fv * qk;
    gg += gv * gv * qk;
    qk *= q;
  }
  const double w = 1.0 - q;
  fg *= w;
  mm *= w;
  mc *= w;
  ff *= w;
  gg *= w;
  return make_chain(fg * fg, mm * mc, ff * gg, kDiscreteChainTol);
}

}  // namespace ineq
