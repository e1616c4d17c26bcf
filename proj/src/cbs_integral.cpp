#include "ineq/cbs_integral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "ineq/errors.hpp"
#include "ineq/quadrature.hpp"
#include "ineq/random.hpp"
#include "text.hpp"

namespace ineq {
namespace {

constexpr int kInitialCells = 8;
constexpr int kAntiderivativeDepthCap = 40;

void require_interval(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("interval must satisfy a < b");
  }
}

MeanFn mean_of(const MeanSpec& spec) {
  if (spec.family() == Family::Mediant) {
    throw ParameterError("mediant needs numerator/denominator pairs; use the log-derivative chain");
  }
  return [spec](double x, double y) { return eval_mean(spec, x, y); };
}

double integrate_rel(const RealFn& h, double a, double b, double tol) {
  return quadrature(h, a, b, tol);
}

RealFn logderiv_rate(const FunctionSpec& f, const FunctionSpec& g, const MeanFn& mean) {
  return [f, g, mean](double t) { return mean(f.log_derivative(t), g.log_derivative(t)); };
}

RealFn mediant_rate(const FunctionSpec& f, const FunctionSpec& g) {
  return [f, g](double t) { return (f.derivative(t) + g.derivative(t)) / (f(t) + g(t)); };
}

}  // namespace

const char* to_string(ChainKind k) { return k == ChainKind::MeanForm ? "mean" : "logderiv"; }

ChainKind parse_chain_kind(const std::string& raw) {
  const std::string t = text::lower(text::trim(raw));
  if (t == "mean") return ChainKind::MeanForm;
  if (t == "logderiv") return ChainKind::LogDerivForm;
  throw ParameterError("unknown chain kind '" + raw + "' (expected mean or logderiv)");
}

// --- mean form ----------------------------------------------------------------

double integral_mean_middle(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                            const MeanFn& mean) {
  const double m2 = integrate_rel(
      [&](double t) {
        const double m = mean(f(t), g(t));
        return m * m;
      },
      a, b, kIntegralQuadTol);
  const double c2 = integrate_rel(
      [&](double t) {
        const double fv = f(t);
        const double gv = g(t);
        const double c = (fv / mean(fv, gv)) * gv;
        return c * c;
      },
      a, b, kIntegralQuadTol);
  return m2 * c2;
}

ChainReport integral_mean_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                double b, const MeanFn& mean) {
  require_interval(a, b);
  require_positive(f, a, b);
  require_positive(g, a, b);
  const double fg = integrate_rel([&](double t) { return f(t) * g(t); }, a, b, kIntegralQuadTol);
  const double ff = integrate_rel([&](double t) { return f(t) * f(t); }, a, b, kIntegralQuadTol);
  const double gg = integrate_rel([&](double t) { return g(t) * g(t); }, a, b, kIntegralQuadTol);
  return make_chain(fg * fg, integral_mean_middle(f, g, a, b, mean), ff * gg,
                    kIntegralChainTol);
}

ChainReport integral_mean_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                double b, const MeanSpec& spec) {
  return integral_mean_chain(f, g, a, b, mean_of(spec));
}

// --- antiderivative table -----------------------------------------------------

Antiderivative::Antiderivative(RealFn rate, double a, double b, double tol)
    : rate_(std::move(rate)), tol_(tol), span_(b - a) {
  require_interval(a, b);
  if (!(tol > 0.0)) throw ParameterError("antiderivative tolerance must be positive");
  nodes_.push_back(a);
  values_.push_back(0.0);
  rates_.push_back(rate_(a));
  const double h = (b - a) / kInitialCells;
  for (int i = 0; i < kInitialCells; ++i) {
    const double lo = a + i * h;
    const double hi = i + 1 == kInitialCells ? b : a + (i + 1) * h;
    refine(lo, hi, rates_.back(), rate_(hi), kronrod15(rate_, lo, hi, nullptr), 0);
  }
}

void Antiderivative::refine(double lo, double hi, double r_lo, double r_hi, double value,
                            int depth) {
  const double width = hi - lo;
  const double mid = 0.5 * (lo + hi);
  const double left = kronrod15(rate_, lo, mid, nullptr);
  const double right = kronrod15(rate_, mid, hi, nullptr);
  // Hermite value at the midpoint against the accurate half integral.
  const double hermite_mid = 0.5 * value + width / 8.0 * (r_lo - r_hi);
  const double budget = tol_ * width / span_;
  const bool accurate = std::abs(left + right - value) <= budget &&
                        std::abs(hermite_mid - left) <= budget;
  if (accurate || !(width > 0.0) || mid <= lo || mid >= hi) {
    nodes_.push_back(hi);
    values_.push_back(values_.back() + left + right);
    rates_.push_back(r_hi);
    return;
  }
  if (depth >= kAntiderivativeDepthCap) {
    throw ConvergenceError("antiderivative table did not converge");
  }
  const double r_mid = rate_(mid);
  refine(lo, mid, r_lo, r_mid, left, depth + 1);
  refine(mid, hi, r_mid, r_hi, right, depth + 1);
}

double Antiderivative::operator()(double x) const {
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return values_.back();
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (x - nodes_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * values_[i] + (t3 - 2.0 * t2 + t) * h * rates_[i] +
         (-2.0 * t3 + 3.0 * t2) * values_[i + 1] + (t3 - t2) * h * rates_[i + 1];
}

// --- log-derivative form ------------------------------------------------------

LogDerivFactors::LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a,
                                 double b, RealFn rate)
    : f_(f), g_(g), antiderivative_(std::move(rate), a, b, kInnerTol) {}

LogDerivFactors::LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a,
                                 double b, const MeanFn& mean)
    : LogDerivFactors(f, g, a, b, logderiv_rate(f, g, mean)) {}

LogDerivFactors::LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a,
                                 double b, const MeanSpec& spec)
    : LogDerivFactors(f, g, a, b,
                      spec.family() == Family::Mediant ? mediant_rate(f, g)
                                                       : logderiv_rate(f, g, mean_of(spec))) {}

double LogDerivFactors::phi1(double x) const { return std::exp(exponent(x)); }

double LogDerivFactors::phi2(double x) const {
  const double fg = f_(x) * g_(x);
  return fg * fg * std::exp(-exponent(x));
}

double integral_logderiv_middle(const LogDerivFactors& factors, double a, double b) {
  const double i1 = quadrature([&](double x) { return factors.phi1(x); }, a, b, kOuterTol);
  const double i2 = quadrature([&](double x) { return factors.phi2(x); }, a, b, kOuterTol);
  return i1 * i2;
}

namespace {

ChainReport logderiv_chain(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                           const LogDerivFactors& factors) {
  const double fg = quadrature([&](double t) { return f(t) * g(t); }, a, b, kIntegralQuadTol);
  const double ff = quadrature([&](double t) { return f(t) * f(t); }, a, b, kIntegralQuadTol);
  const double gg = quadrature([&](double t) { return g(t) * g(t); }, a, b, kIntegralQuadTol);
  return make_chain(fg * fg, integral_logderiv_middle(factors, a, b), ff * gg,
                    kIntegralChainTol);
}

void require_logderiv_inputs(const FunctionSpec& f, const FunctionSpec& g, double a, double b) {
  require_interval(a, b);
  require_positive(f, a, b);
  require_positive(g, a, b);
  require_nondecreasing(f, a, b);
  require_nondecreasing(g, a, b);
}

}  // namespace

ChainReport integral_logderiv_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                    double b, const MeanSpec& spec) {
  require_logderiv_inputs(f, g, a, b);
  return logderiv_chain(f, g, a, b, LogDerivFactors(f, g, a, b, spec));
}

ChainReport integral_logderiv_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                    double b, const MeanFn& mean) {
  require_logderiv_inputs(f, g, a, b);
  return logderiv_chain(f, g, a, b, LogDerivFactors(f, g, a, b, mean));
}

// --- product identity ---------------------------------------------------------

IdentityCheck product_identity_check(const FunctionSpec& f, const FunctionSpec& g,
                                     const RealFn& phi1, const RealFn& phi2,
                                     const std::vector<double>& grid) {
  if (grid.empty()) throw ParameterError("identity grid is empty");
  IdentityCheck r;
  for (double x : grid) {
    const double fg = f(x) * g(x);
    const double target = fg * fg;
    const double got = phi1(x) * phi2(x);
    const double defect = std::abs(got - target) / std::max(std::abs(target), std::abs(got));
    if (defect > r.max_rel_defect) {
      r.max_rel_defect = defect;
      r.worst_x = x;
    }
  }
  r.ok = r.max_rel_defect <= kIdentityTol;
  return r;
}

IdentityCheck product_identity_check(const FunctionSpec& f, const FunctionSpec& g,
                                     ChainKind kind, const MeanSpec& spec, double a, double b,
                                     const std::vector<double>& grid) {
  for (double x : grid) {
    if (x < a || x > b) throw ParameterError("identity grid point outside [a, b]");
  }
  if (kind == ChainKind::MeanForm) {
    const MeanFn mean = mean_of(spec);
    auto phi1 = [&](double x) {
      const double m = mean(f(x), g(x));
      return m * m;
    };
    auto phi2 = [&](double x) {
      const double fv = f(x);
      const double gv = g(x);
      const double c = (fv / mean(fv, gv)) * gv;
      return c * c;
    };
    return product_identity_check(f, g, phi1, phi2, grid);
  }
  const LogDerivFactors factors(f, g, a, b, spec);
  return product_identity_check(
      f, g, [&](double x) { return factors.phi1(x); }, [&](double x) { return factors.phi2(x); },
      grid);
}

// --- h-form -------------------------------------------------------------------

std::vector<double> default_h_grid() { return {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}; }

MeanFn mean_from_h(const RealFn& h) {
  return [h](double u, double v) { return (u + v) * h(std::log(v / u)); };
}

ChainReport general_h_chain(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                            const RealFn& h, ChainKind kind) {
  const HFunctionCheck check = check_h_conditions(h, default_h_grid());
  if (!check.ok()) throw PreconditionError("h violates the h-function conditions");
  const MeanFn mean = mean_from_h(h);
  return kind == ChainKind::MeanForm ? integral_mean_chain(f, g, a, b, mean)
                                     : integral_logderiv_chain(f, g, a, b, mean);
}

// --- comparison ---------------------------------------------------------------

const char* to_string(Relation r) {
  switch (r) {
    case Relation::APrecB: return "APrecB";
    case Relation::BPrecA: return "BPrecA";
    case Relation::Incomparable: return "Incomparable";
    case Relation::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

FunctionSpec sample_function(Sampler& rng) {
  auto coeff = [&rng]() { return rng.log_uniform(0.1, 10.0); };
  switch (rng.below(4)) {
    case 0: {
      std::vector<double> c(2 + rng.below(3));
      for (double& v : c) v = coeff();
      return FunctionSpec::poly(std::move(c));
    }
    case 1: return FunctionSpec::exp(coeff());
    case 2: {
      const double c0 = coeff();
      return FunctionSpec::affine(c0, coeff());
    }
    default: {
      std::vector<double> c(2 + rng.below(2));
      for (double& v : c) v = coeff();
      return FunctionSpec::exp_poly(std::move(c));
    }
  }
}

double middle_of(const SampledPair& s, const MeanSpec& spec, ChainKind kind) {
  if (kind == ChainKind::MeanForm) return integral_mean_middle(s.f, s.g, s.a, s.b, mean_of(spec));
  return integral_logderiv_middle(LogDerivFactors(s.f, s.g, s.a, s.b, spec), s.a, s.b);
}

}  // namespace

SampledPair sample_function_pair(std::uint64_t seed, std::size_t trial) {
  static constexpr std::array<double, 3> kLengths = {0.5, 1.0, 2.0};
  Sampler rng(mix_seed(seed, trial));
  FunctionSpec f = sample_function(rng);
  FunctionSpec g = sample_function(rng);
  const double len = kLengths[rng.below(kLengths.size())];
  return {std::move(f), std::move(g), 0.0, len};
}

OrderVerdict compare_generalizations(const MeanSpec& spec_a, const MeanSpec& spec_b,
                                     std::size_t trials, std::uint64_t seed, ChainKind kind) {
  if (trials == 0) throw ParameterError("compare needs at least one trial");
  OrderVerdict v;
  v.kind = kind;
  v.seed = seed;
  std::optional<ComparisonWitness> first_a;
  std::optional<ComparisonWitness> first_b;

  for (std::size_t i = 0; i < trials; ++i) {
    const SampledPair s = sample_function_pair(seed, i);
    const double ma = middle_of(s, spec_a, kind);
    const double mb = middle_of(s, spec_b, kind);
    ++v.trials;
    const ComparisonWitness w{to_string(s.f), to_string(s.g), s.a, s.b, ma, mb};
    const double margin = kStrictRel * std::max(std::abs(ma), std::abs(mb));
    if (mb - ma > margin) {
      ++v.a_below;
      if (!first_a) first_a = w;
    } else if (ma - mb > margin) {
      ++v.b_below;
      if (!first_b) first_b = w;
    } else {
      ++v.ties;
    }
    if (first_a && first_b) break;
  }

  if (first_a && first_b) {
    v.relation = Relation::Incomparable;
  } else if (first_a) {
    v.relation = Relation::APrecB;
  } else if (first_b) {
    v.relation = Relation::BPrecA;
  }
  if (first_a) v.witnesses.push_back(*first_a);
  if (first_b) v.witnesses.push_back(*first_b);
  return v;
}

}  // namespace ineq
