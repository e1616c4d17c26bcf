#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ineq/ext_real.hpp"

namespace ineq {

enum class Family : std::uint8_t {
  Power,
  Rado,
  Gini,
  Lehmer,
  WeightedArithmetic,
  WeightedGeometric,
  QuasiArithmetic,
  Logarithmic,
  Identric,
  Min,
  Max,
  Mediant,
  Iterated,
};

/// Evaluation branch resolved when a spec is built. Exceptional orders of the
/// power and Rado scales map to their closed limit forms here, so evaluation
/// never inspects a raw order against 0 or -1.
enum class Branch : std::uint8_t {
  Generic,
  Min,
  Max,
  Geometric,
  Logarithmic,
  Identric,
  GiniDiagonal,  // Gini with u == v != 0
};

/// Generators of the shipped quasi-arithmetic catalog.
enum class QuasiGenerator : std::uint8_t { Identity, Log, Exp, Power };

/// Immutable descriptor of a two-argument mean: the family tag plus its
/// parameters. Cheap to copy; iterated specs share their inner pair.
class MeanSpec {
 public:
  static MeanSpec power(ExtReal order);
  static MeanSpec power(double order) { return power(ExtReal(order)); }
  static MeanSpec rado(ExtReal order);
  static MeanSpec rado(double order) { return rado(ExtReal(order)); }
  static MeanSpec gini(double u, double v);
  static MeanSpec lehmer(double u);
  /// alpha*x + beta*y; requires alpha, beta >= 0 and alpha + beta = 1.
  static MeanSpec weighted_arithmetic(double alpha, double beta);
  /// x^alpha * y^beta; same weight constraints.
  static MeanSpec weighted_geometric(double alpha, double beta);
  /// f^{-1}((f(x) + f(y)) / 2); `p` is used by QuasiGenerator::Power only.
  static MeanSpec quasi_arithmetic(QuasiGenerator gen, double p = 1.0);
  static MeanSpec logarithmic();
  static MeanSpec identric();
  static MeanSpec min();
  static MeanSpec max();
  /// Mediant of formal fractions. Only meaningful where the arguments carry a
  /// numerator/denominator split (log-derivative chains); eval_mean rejects it.
  static MeanSpec mediant();
  /// Common limit of x <- M(x, y), y <- N(x, y).
  static MeanSpec iterated(const MeanSpec& m, const MeanSpec& n);

  Family family() const { return family_; }
  Branch branch() const { return branch_; }

  /// Order of a Power or Rado spec.
  const ExtReal& order() const { return order_; }
  /// (u, v) for Gini, (alpha, beta) for the weighted families, (u, 0) for
  /// Lehmer, (p, 0) for QuasiArithmetic.
  double first() const { return a_; }
  double second() const { return b_; }
  QuasiGenerator generator() const { return gen_; }

  /// Inner pair of an Iterated spec. Undefined for other families.
  const MeanSpec& inner_m() const { return inner_->first; }
  const MeanSpec& inner_n() const { return inner_->second; }

  friend bool operator==(const MeanSpec& l, const MeanSpec& r);

 private:
  MeanSpec() = default;

  Family family_ = Family::Min;
  Branch branch_ = Branch::Generic;
  ExtReal order_;
  double a_ = 0.0;
  double b_ = 0.0;
  QuasiGenerator gen_ = QuasiGenerator::Identity;
  std::shared_ptr<const std::pair<MeanSpec, MeanSpec>> inner_;
};

/// Canonical, case-insensitive grammar: `power:2`, `power:inf`, `rado:0`,
/// `gini:2,1`, `lehmer:1`, `wgeom:0.7,0.3`, `warith:0.5,0.5`, `log`,
/// `identric`, `min`, `max`, `mediant`, `quasi:ln`, `quasi:id`, `quasi:exp`,
/// `quasi:pow:3`, `iter:<M>|<N>`. Throws ParameterError naming the token.
MeanSpec parse_mean_spec(const std::string& text);
std::string to_string(const MeanSpec& spec);

/// Homogeneous, unbiased, monotone members of the shipped catalog, used by
/// the chain property suites and the comparison sampler.
std::vector<MeanSpec> mean_catalog();

// --- evaluation -------------------------------------------------------------

/// M(x, y) for x, y >= 0. Families that divide by an argument require x, y > 0
/// and throw DomainError otherwise; near-equal arguments use limit forms.
double eval_mean(const MeanSpec& spec, double x, double y);

/// M*(x, y) = x y / M(x, y); x, y > 0.
double conjugate_eval(const MeanSpec& spec, double x, double y);

/// h(t) = M(1, e^t) / (1 + e^t), the profile of a symmetric homogeneous mean.
double h_of(const MeanSpec& spec, double t);

/// Generalized entropy -ln M(x, y); x, y > 0.
double entropy(const MeanSpec& spec, double x, double y);

/// Orders (lower, upper) of the power means that sandwich the Rado mean of
/// order beta: M_lower <= R_beta <= M_upper.
std::pair<ExtReal, ExtReal> rado_power_bound_orders(ExtReal beta);

struct Fraction {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// (p1 + p2) / (q1 + q2), unreduced. Throws ParameterError on a nonpositive
/// denominator.
Fraction mediant(Fraction a, Fraction b);

// --- axiom checking ---------------------------------------------------------

struct AxiomWitness {
  double x = 0.0;
  double y = 0.0;
  double lambda = 0.0;  // scale factor, or perturbation size for monotonicity
  double observed = 0.0;
  double expected = 0.0;
};

struct AxiomResult {
  bool pass = true;
  /// Largest relative defect seen. For a failed axiom the witness is the
  /// first failing sample; otherwise it is the sample with the worst defect.
  double worst_error = 0.0;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  AxiomResult unbiasedness;
  AxiomResult homogeneity;
  AxiomResult monotonicity;
  AxiomResult symmetry;
  AxiomResult intermediacy;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;

  /// Every axiom except symmetry, which abstract means need not satisfy.
  bool core_pass() const {
    return unbiasedness.pass && homogeneity.pass && monotonicity.pass && intermediacy.pass;
  }
  bool all_pass() const { return core_pass() && symmetry.pass; }
};

inline constexpr double kAxiomTolerance = 1e-10;

/// Samples (x, y, lambda) log-uniformly in [1e-3, 1e3] and checks the mean
/// axioms at relative tolerance 1e-10. Failures are reported, not thrown.
AxiomReport check_axioms(const MeanSpec& spec, std::size_t n_samples, std::uint64_t seed);

// --- h-function conditions --------------------------------------------------

struct RatioViolation {
  double t1 = 0.0;
  double t2 = 0.0;
  double ratio = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

struct HFunctionCheck {
  double h0_value = 0.0;
  bool h0_ok = false;
  std::vector<double> evenness_violations;  // t with h(-t) != h(t)
  std::vector<RatioViolation> ratio_violations;
  std::vector<double> grid;

  bool ok() const { return h0_ok && evenness_violations.empty() && ratio_violations.empty(); }
};

/// Checks h(0) = 1/2, evenness and the two-sided ratio bound for every pair
/// t1 <= t2 of the grid. The grid must be nonempty, ascending and >= 0.
HFunctionCheck check_h_conditions(const std::function<double(double)>& h,
                                  const std::vector<double>& t_grid);
HFunctionCheck check_h_conditions(const MeanSpec& spec, const std::vector<double>& t_grid);

/// Lower and upper ratio bounds for h(t1)/h(t2), 0 <= t1 <= t2.
std::pair<double, double> h_ratio_bounds(double t1, double t2);

}  // namespace ineq
