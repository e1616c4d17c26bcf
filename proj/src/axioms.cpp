#include <algorithm>
#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/means.hpp"
#include "ineq/random.hpp"

namespace ineq {
namespace {

constexpr double kBump = 0.01;
constexpr double kHTol = 1e-10;

// Records one sample. `defect` is a relative error, positive when the axiom
// is violated by that much.
void record(AxiomResult& r, double defect, const AxiomWitness& w) {
  const bool failed = defect > kAxiomTolerance;
  if (failed && r.pass) {
    r.pass = false;
    r.witness = w;
  }
  if (defect > r.worst_error) {
    r.worst_error = defect;
    if (r.pass) r.witness = w;
  }
}

double rel_gap(double observed, double expected) {
  const double scale = std::max(std::abs(expected), std::abs(observed));
  return scale == 0.0 ? 0.0 : std::abs(observed - expected) / scale;
}

}  // namespace

AxiomReport check_axioms(const MeanSpec& spec, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw ParameterError("check_axioms needs at least one sample");
  if (spec.family() == Family::Mediant) {
    throw ParameterError("mediant is not a mean of two numbers");
  }

  AxiomReport rep;
  rep.seed = seed;
  Sampler rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = rng.log_uniform(kSampleLo, kSampleHi);
    const double y = rng.log_uniform(kSampleLo, kSampleHi);
    const double lambda = rng.log_uniform(kSampleLo, kSampleHi);
    const double m = eval_mean(spec, x, y);

    const double mxx = eval_mean(spec, x, x);
    record(rep.unbiasedness, rel_gap(mxx, x), {x, x, 1.0, mxx, x});

    const double scaled = eval_mean(spec, lambda * x, lambda * y);
    record(rep.homogeneity, rel_gap(scaled, lambda * m), {x, y, lambda, scaled, lambda * m});

    // A 1% increase of either argument must not lower the mean. Strict growth
    // can be smaller than one ulp (power:3 at x/y ~ 1e-6), so only a decrease
    // beyond the tolerance counts as a violation.
    const double mx = eval_mean(spec, x * (1.0 + kBump), y);
    const double my = eval_mean(spec, x, y * (1.0 + kBump));
    const double drop_x = (m - mx) / m;
    const double drop_y = (m - my) / m;
    if (drop_x >= drop_y) {
      record(rep.monotonicity, drop_x, {x * (1.0 + kBump), y, kBump, mx, m});
    } else {
      record(rep.monotonicity, drop_y, {x, y * (1.0 + kBump), kBump, my, m});
    }

    const double myx = eval_mean(spec, y, x);
    record(rep.symmetry, rel_gap(myx, m), {y, x, 1.0, myx, m});

    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    const double below = (lo - m) / lo;
    const double above = (m - hi) / hi;
    const double expected = below > above ? lo : hi;
    record(rep.intermediacy, std::max(below, above), {x, y, 1.0, m, expected});

    ++rep.samples_used;
  }
  return rep;
}

std::pair<double, double> h_ratio_bounds(double t1, double t2) {
  const double lower = (1.0 + std::exp(-t2)) / (1.0 + std::exp(-t1));
  return {lower, std::exp(t2 - t1) * lower};
}

HFunctionCheck check_h_conditions(const std::function<double(double)>& h,
                                  const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw ParameterError("h-check grid is empty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw ParameterError("h-check grid must be nonnegative and ascending");
    }
  }

  HFunctionCheck out;
  out.grid = t_grid;
  out.h0_value = h(0.0);
  out.h0_ok = std::abs(out.h0_value - 0.5) <= kHTol;

  std::vector<double> values;
  values.reserve(t_grid.size());
  for (double t : t_grid) {
    const double v = h(t);
    values.push_back(v);
    const double mirror = h(-t);
    if (std::abs(mirror - v) > kHTol * std::max(std::abs(v), std::abs(mirror))) {
      out.evenness_violations.push_back(t);
    }
  }

  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    for (std::size_t j = i; j < t_grid.size(); ++j) {
      const double ratio = values[i] / values[j];
      const auto [lo, hi] = h_ratio_bounds(t_grid[i], t_grid[j]);
      if (!(ratio >= lo * (1.0 - kHTol)) || !(ratio <= hi * (1.0 + kHTol))) {
        out.ratio_violations.push_back({t_grid[i], t_grid[j], ratio, lo, hi});
      }
    }
  }
  return out;
}

HFunctionCheck check_h_conditions(const MeanSpec& spec, const std::vector<double>& t_grid) {
  return check_h_conditions([&spec](double t) { return h_of(spec, t); }, t_grid);
}

}  // namespace ineq
