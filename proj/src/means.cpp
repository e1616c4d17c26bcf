#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ineq/errors.hpp"
#include "ineq/iterated.hpp"
#include "ineq/means.hpp"

namespace ineq {
namespace {

// |x - y| <= kEqualRel * max(x, y): arguments are treated as equal.
constexpr double kEqualRel = 1e-12;
// Below this relative separation the logarithmic and identric means switch to
// series in z = (y - x) / (y + x).
constexpr double kSeriesRel = 1e-6;
constexpr double kIteratedEvalTol = 1e-15;

struct Ordered {
  double lo;
  double hi;
  double rel;  // (hi - lo) / hi, 0 when hi == 0
};

Ordered order_args(double x, double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return {lo, hi, hi == 0.0 ? 0.0 : (hi - lo) / hi};
}

// sqrt(x y) without overflow or underflow of the product.
double geometric(double x, double y) {
  const double p = x * y;
  if (std::isfinite(p) && p >= std::numeric_limits<double>::min()) return std::sqrt(p);
  return std::sqrt(x) * std::sqrt(y);
}

void require_positive(double x, double y, const char* what) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError(std::string(what) + " requires positive arguments");
  }
}

double power_generic(double alpha, double x, double y) {
  const auto [lo, hi, rel] = order_args(x, y);
  if (rel == 0.0) return hi;
  if (alpha > 0.0) {
    const double r = lo / hi;
    return hi * std::pow(0.5 * (1.0 + std::pow(r, alpha)), 1.0 / alpha);
  }
  if (lo == 0.0) return 0.0;
  const double r = hi / lo;  // r^alpha <= 1
  return lo * std::pow(0.5 * (1.0 + std::pow(r, alpha)), 1.0 / alpha);
}

// ln(lo / hi) without underflow and without the cancellation of log1p(-rel)
// when lo << hi.
double log_ratio(const Ordered& o) {
  return o.rel < 0.5 ? std::log1p(-o.rel) : std::log(o.lo) - std::log(o.hi);
}

// ln(1 + e^z) for any real z.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double rado_generic(double beta, double x, double y) {
  const Ordered o = order_args(x, y);
  if (o.rel <= kEqualRel) return 0.5 * (o.lo + o.hi);
  const double s = beta + 1.0;
  if (o.lo == 0.0) {
    if (s < 0.0) return 0.0;
    return o.hi * std::pow(1.0 / s, 1.0 / beta);
  }
  // ln[(1 - r^s) / (s (1 - r))], r = lo / hi, with 1 - r = rel exactly and
  // 1 - r^s expanded around whichever of r^s, r^-s is bounded.
  const double sl = s * log_ratio(o);
  const double log_num = s > 0.0 ? std::log(-std::expm1(sl)) - std::log(s)
                                 : sl + std::log(-std::expm1(-sl)) - std::log(-s);
  const double e = (log_num - std::log(o.rel)) / beta;
  return e > -700.0 ? o.hi * std::exp(e) : std::exp(std::log(o.hi) + e);
}

double logarithmic_mean(double x, double y) {
  require_positive(x, y, "logarithmic mean");
  const auto [lo, hi, rel] = order_args(x, y);
  if (rel <= kEqualRel) return 0.5 * (lo + hi);
  if (rel < kSeriesRel) {
    const double z = (hi - lo) / (hi + lo);
    const double z2 = z * z;
    return 0.5 * (lo + hi) * (1.0 - z2 / 3.0 - 4.0 * z2 * z2 / 45.0);
  }
  if (rel < 0.5) return (hi - lo) / std::log1p((hi - lo) / lo);
  return (hi - lo) / (std::log(hi) - std::log(lo));
}

// (1/e) (y^y / x^x)^{1/(y-x)}, in log space:
// ln I = ln hi - 1 + lo/(hi-lo) * ln(hi/lo).
double identric_mean(double x, double y) {
  if (x < 0.0 || y < 0.0) throw DomainError("identric mean requires nonnegative arguments");
  const auto [lo, hi, rel] = order_args(x, y);
  if (rel <= kEqualRel) return 0.5 * (lo + hi);
  if (lo == 0.0) return hi / std::numbers::e;
  if (rel < kSeriesRel) {
    const double z = (hi - lo) / (hi + lo);
    const double z2 = z * z;
    return 0.5 * (lo + hi) * std::exp(-z2 / 6.0 - z2 * z2 / 20.0);
  }
  const double d = hi - lo;
  const double log_q = rel < 0.5 ? std::log1p(d / lo) : std::log(hi) - std::log(lo);
  return hi * std::exp(-1.0 + (lo / d) * log_q);
}

double gini_mean(const MeanSpec& spec, double x, double y) {
  const double u = spec.first();
  const double v = spec.second();
  if (spec.branch() == Branch::Geometric) return geometric(x, y);
  const Ordered o = order_args(x, y);
  if (o.rel <= kEqualRel) return 0.5 * (o.lo + o.hi);
  if (o.lo == 0.0) {
    if (u < 0.0 || v < 0.0) {
      throw DomainError("gini mean with a negative order requires positive arguments");
    }
    if (spec.branch() == Branch::GiniDiagonal) return o.hi;
    const double num = u == 0.0 ? 2.0 : 1.0;
    const double den = v == 0.0 ? 2.0 : 1.0;
    return o.hi * std::pow(num / den, 1.0 / (u - v));
  }
  const double lr = log_ratio(o);
  if (spec.branch() == Branch::GiniDiagonal) {
    // exp(r^u ln r / (1 + r^u)) with the weight written as a logistic.
    return o.hi * std::exp(lr / (1.0 + std::exp(-u * lr)));
  }
  return o.hi * std::exp((softplus(u * lr) - softplus(v * lr)) / (u - v));
}

double lehmer_mean(double u, double x, double y) {
  require_positive(x, y, "lehmer mean");
  const Ordered o = order_args(x, y);
  if (o.rel == 0.0) return o.hi;
  const double lr = log_ratio(o);
  return o.hi * std::exp(softplus((u + 1.0) * lr) - softplus(u * lr));
}

double quasi_mean(const MeanSpec& spec, double x, double y) {
  switch (spec.generator()) {
    case QuasiGenerator::Identity: return 0.5 * (x + y);
    case QuasiGenerator::Log: return geometric(x, y);
    case QuasiGenerator::Exp: {
      const auto [lo, hi, rel] = order_args(x, y);
      (void)rel;
      return hi + std::log1p(0.5 * std::expm1(lo - hi));
    }
    case QuasiGenerator::Power: return power_generic(spec.first(), x, y);
  }
  return 0.0;
}

}  // namespace

double eval_mean(const MeanSpec& spec, double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("mean arguments must be nonnegative");

  switch (spec.branch()) {
    case Branch::Min: return std::min(x, y);
    case Branch::Max: return std::max(x, y);
    case Branch::Geometric: return geometric(x, y);
    case Branch::Logarithmic: return logarithmic_mean(x, y);
    case Branch::Identric: return identric_mean(x, y);
    case Branch::GiniDiagonal:
    case Branch::Generic: break;
  }

  switch (spec.family()) {
    case Family::Power: return power_generic(spec.order().value(), x, y);
    case Family::Rado: return rado_generic(spec.order().value(), x, y);
    case Family::Gini: return gini_mean(spec, x, y);
    case Family::Lehmer: return lehmer_mean(spec.first(), x, y);
    case Family::WeightedArithmetic: return spec.first() * x + spec.second() * y;
    case Family::WeightedGeometric: return std::pow(x, spec.first()) * std::pow(y, spec.second());
    case Family::QuasiArithmetic: return quasi_mean(spec, x, y);
    case Family::Iterated:
      require_positive(x, y, "iterated mean");
      return iterate_means(spec.inner_m(), spec.inner_n(), x, y, kIteratedEvalTol).value;
    case Family::Mediant:
      throw ParameterError("mediant acts on numerator/denominator pairs, not on two numbers");
    case Family::Logarithmic:
    case Family::Identric:
    case Family::Min:
    case Family::Max: break;  // resolved by branch above
  }
  throw ParameterError("unhandled mean family");
}

double conjugate_eval(const MeanSpec& spec, double x, double y) {
  require_positive(x, y, "conjugate mean");
  const double m = eval_mean(spec, x, y);
  return (x / m) * y;
}

double h_of(const MeanSpec& spec, double t) {
  // M(1, e^t) / (1 + e^t) evaluated at the homogeneous rescaling
  // (e^{-t/2}, e^{t/2}) so that |t| up to ~1400 stays finite.
  const double s = std::exp(0.5 * t);
  const double inv = 1.0 / s;
  return eval_mean(spec, inv, s) / (inv + s);
}

double entropy(const MeanSpec& spec, double x, double y) {
  require_positive(x, y, "entropy");
  return -std::log(eval_mean(spec, x, y));
}

std::pair<ExtReal, ExtReal> rado_power_bound_orders(ExtReal beta) {
  if (beta.is_neg_inf()) return {ExtReal::neg_inf(), ExtReal(0.0)};
  if (beta.is_pos_inf()) return {ExtReal::pos_inf(), ExtReal::pos_inf()};

  const double b = beta.value();
  const ExtReal linear((b + 2.0) / 3.0);
  // b ln 2 / ln(1 + b), with its limit ln 2 at b = 0 and 0 at b = -1.
  auto log_order = [b]() {
    if (b == 0.0) return ExtReal(std::numbers::ln2);
    if (b == -1.0) return ExtReal(0.0);
    return ExtReal(b * std::numbers::ln2 / std::log1p(b));
  };

  if (b <= -2.0) return {linear, ExtReal(0.0)};
  if (b <= -1.0) return {ExtReal(0.0), linear};
  if (b <= -0.5) return {log_order(), linear};
  if (b < 1.0) return {linear, log_order()};
  return {log_order(), linear};
}

Fraction mediant(Fraction a, Fraction b) {
  if (a.den <= 0 || b.den <= 0) throw ParameterError("mediant: denominators must be positive");
  return {a.num + b.num, a.den + b.den};
}

}  // namespace ineq
