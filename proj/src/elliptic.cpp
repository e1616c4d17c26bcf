#include "ineq/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ineq/errors.hpp"
#include "ineq/iterated.hpp"
#include "ineq/quadrature.hpp"

namespace ineq {
namespace {

constexpr double kQuadTol = 1e-14;

// The bounds integrate the interpolants min(a, b), max(a, b), ab/(a + b),
// ab(a + b)/(a^2 + 3ab + b^2), ... of a = f^2, b = g^2 in closed form. The
// three basic pieces:
//   ta = int min,  tb = int max,  tc = int ab/(a + b),
// and the quadratic-denominator piece p2 whose partial fractions carry the
// golden-ratio constants below.
struct GoldenConstants {
  double s5 = std::sqrt(5.0);
  // Index 0 takes +sqrt(5), index 1 takes -sqrt(5).
  std::array<double, 2> shift{};     // 4 +- s5
  std::array<double, 2> lin{};       // (7 +- s5)/2
  std::array<double, 2> cst{};       // (3 +- s5)/2
  std::array<double, 2> num_x{};     // (9 +- s5)/2
  std::array<double, 2> num_c{};     // (11 +- 3 s5)/2
  std::array<double, 2> den{};       // (5 +- s5)/2
  std::array<double, 2> weight{};    // (s5 +- 1)/(2 s5)

  GoldenConstants() {
    for (int i = 0; i < 2; ++i) {
      const double s = i == 0 ? s5 : -s5;
      shift[i] = 4.0 + s;
      lin[i] = (7.0 + s) / 2.0;
      cst[i] = (3.0 + s) / 2.0;
      num_x[i] = (9.0 + s) / 2.0;
      num_c[i] = (11.0 + 3.0 * s) / 2.0;
      den[i] = (5.0 + s) / 2.0;
      weight[i] = (s5 + (i == 0 ? 1.0 : -1.0)) / (2.0 * s5);
    }
  }
};

const GoldenConstants& golden() {
  static const GoldenConstants c;
  return c;
}

double piece_ta(double x) {
  const double r = std::sqrt(2.0 * (x + 1.0));
  return std::log((2.0 * r + x + 3.0) / (1.0 - x)) / r;
}

double piece_tb(double x) {
  const double r = std::sqrt(2.0 * x * (x + 1.0));
  return std::log1p((2.0 * r + 4.0 * x) / (1.0 - x)) / r;
}

double piece_tc(double x) {
  const double r = std::sqrt((x + 3.0) * (3.0 * x + 1.0));
  return std::log((r + 2.0 * x + 2.0) / (1.0 - x)) / r;
}

double piece_p2(double x) {
  const GoldenConstants& c = golden();
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double r = std::sqrt((x + c.shift[i]) * (c.lin[i] * x + c.cst[i]));
    sum += c.weight[i] / r *
           std::log((2.0 * r + c.num_x[i] * x + c.num_c[i]) / (c.den[i] * (1.0 - x)));
  }
  return sum;
}

}  // namespace

double elliptic_k(double x, KMethod method) {
  if (!(x >= 0.0) || !(x < 1.0)) throw DomainError("elliptic_k requires 0 <= x < 1");
  if (method == KMethod::Agm) {
    const double kp = std::sqrt((1.0 - x) * (1.0 + x));
    return std::numbers::pi / (2.0 * agm(1.0, kp));
  }
  // t = sin(theta) removes the endpoint singularity of the t-form.
  const double x2 = x * x;
  auto integrand = [x2](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - x2 * s * s);
  };
  return quadrature(integrand, 0.0, std::numbers::pi / 2.0, kQuadTol);
}

BoundsReport elliptic_bounds(double x) {
  if (!(x > 0.0) || !(x < 1.0)) throw DomainError("elliptic bounds require 0 < x < 1");
  const double ta = piece_ta(x);
  const double tb = piece_tb(x);
  const double tc = piece_tc(x);
  const double p2 = piece_p2(x);

  BoundsReport r;
  r.x = x;
  r.L0 = ta;
  r.L1 = 2.0 * tc;
  r.L2 = 2.5 * p2;
  r.K = elliptic_k(x, KMethod::Agm);
  r.G2 = 0.4 * (ta + tb + tc);
  r.G1 = 0.5 * (ta + tb);
  r.G0 = tb;

  const std::array<double, 7> chain = {r.L0, r.L1, r.L2, r.K, r.G2, r.G1, r.G0};
  double worst = -INFINITY;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const double scale = std::max(std::abs(chain[i]), std::abs(chain[i + 1]));
    worst = std::max(worst, (chain[i] - chain[i + 1]) / scale);
  }
  r.max_violation = worst;
  r.chain_ok = worst <= kEllipticChainTol;
  return r;
}

}  // namespace ineq
