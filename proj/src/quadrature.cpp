#include "ineq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "ineq/errors.hpp"

namespace ineq {
namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes kXgk[1], [3], [5], [7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kIntervalCap = 200000;

struct Panel {
  double a;
  double b;
  double value;
  double err;
  int depth;
  friend bool operator<(const Panel& l, const Panel& r) { return l.err < r.err; }
};

}  // namespace

double kronrod15(const std::function<double(double)>& f, double a, double b, double* err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[i] * s;
    if (i % 2 == 1) g += kWg[i / 2] * s;
  }
  if (err != nullptr) *err = std::abs((k - g) * h);
  return k * h;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  if (!(tol > 0.0)) throw ParameterError("quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) throw ParameterError("quadrature bounds must be finite");
  if (a == b) return {};
  if (b < a) {
    auto r = integrate(f, b, a, tol);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Panel> heap;
  double err0 = 0.0;
  const double v0 = kronrod15(f, a, b, &err0);
  if (!std::isfinite(v0) || !std::isfinite(err0)) {
    throw DomainError("integrand is not finite on the interval");
  }
  heap.push({a, b, v0, err0, 0});
  double total = v0;
  double total_err = err0;
  std::size_t count = 1;

  while (total_err > std::max(tol, tol * std::abs(total))) {
    const Panel p = heap.top();
    if (p.depth >= kQuadratureDepthCap || count >= kIntervalCap) {
      throw ConvergenceError("adaptive quadrature did not converge on [" + std::to_string(a) +
                             ", " + std::to_string(b) + "]");
    }
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    double e1 = 0.0;
    double e2 = 0.0;
    const double v1 = kronrod15(f, p.a, mid, &e1);
    const double v2 = kronrod15(f, mid, p.b, &e2);
    total += v1 + v2 - p.value;
    total_err += e1 + e2 - p.err;
    heap.push({p.a, mid, v1, e1, p.depth + 1});
    heap.push({mid, p.b, v2, e2, p.depth + 1});
    ++count;
    if (!std::isfinite(total) || !std::isfinite(total_err)) throw DomainError("integrand is not finite on the interval");
  }

  // Re-sum from the panels so the running updates leave no drift.
  QuadratureResult r;
  r.intervals = count;
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r2) { return l.a < r2.a; });
  for (const Panel& p : panels) {
    r.value += p.value;
    r.error_estimate += p.err;
  }
  return r;
}

}  // namespace ineq
