#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ineq/chain.hpp"
#include "ineq/function_spec.hpp"
#include "ineq/means.hpp"

namespace ineq {

using MeanFn = std::function<double(double, double)>;
using RealFn = std::function<double(double)>;

enum class ChainKind { MeanForm, LogDerivForm };

const char* to_string(ChainKind k);
ChainKind parse_chain_kind(const std::string& text);

inline constexpr double kIntegralQuadTol = 1e-12;
inline constexpr double kInnerTol = 1e-10;
inline constexpr double kOuterTol = 1e-10;

// --- mean form ----------------------------------------------------------------

/// (int f g)^2 <= int M(f,g)^2 * int M*(f,g)^2 <= int f^2 * int g^2 on [a, b].
ChainReport integral_mean_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                double b, const MeanSpec& spec);
ChainReport integral_mean_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                double b, const MeanFn& mean);
double integral_mean_middle(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                            const MeanFn& mean);

// --- log-derivative form ------------------------------------------------------

/// x -> int_a^x rate(t) dt, tabulated on an adaptive grid and interpolated by
/// cubic Hermite pieces that use the exact rate at the nodes.
class Antiderivative {
 public:
  Antiderivative(RealFn rate, double a, double b, double tol = kInnerTol);
  double operator()(double x) const;
  std::size_t cells() const { return nodes_.size() - 1; }
  double lower() const { return nodes_.front(); }
  double upper() const { return nodes_.back(); }

 private:
  void refine(double lo, double hi, double f_lo, double f_hi, double value, int depth);
  RealFn rate_;
  double tol_;
  double span_;
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> rates_;
};

/// Phi1(x) = exp(2 int_a^x rate), Phi2 = f^2 g^2 / Phi1, where the rate is
/// M(Lf, Lg) with Lh = h'/h; the mediant spec uses (f' + g')/(f + g).
class LogDerivFactors {
 public:
  LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                  const MeanSpec& spec);
  LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                  const MeanFn& mean);

  double exponent(double x) const { return 2.0 * antiderivative_(x); }
  double phi1(double x) const;
  double phi2(double x) const;

 private:
  LogDerivFactors(const FunctionSpec& f, const FunctionSpec& g, double a, double b, RealFn rate);
  FunctionSpec f_;
  FunctionSpec g_;
  Antiderivative antiderivative_;
};

/// Requires f, g positive and nondecreasing on [a, b].
ChainReport integral_logderiv_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                    double b, const MeanSpec& spec);
ChainReport integral_logderiv_chain(const FunctionSpec& f, const FunctionSpec& g, double a,
                                    double b, const MeanFn& mean);
double integral_logderiv_middle(const LogDerivFactors& factors, double a, double b);

// --- product identity ---------------------------------------------------------

struct IdentityCheck {
  bool ok = true;
  double max_rel_defect = 0.0;
  double worst_x = 0.0;
};

inline constexpr double kIdentityTol = 1e-10;

/// Pointwise Phi1(x) Phi2(x) = f(x)^2 g(x)^2 on the grid.
IdentityCheck product_identity_check(const FunctionSpec& f, const FunctionSpec& g,
                                     const RealFn& phi1, const RealFn& phi2,
                                     const std::vector<double>& grid);
/// Builds Phi1, Phi2 of the requested chain kind on [a, b] and checks them.
IdentityCheck product_identity_check(const FunctionSpec& f, const FunctionSpec& g,
                                     ChainKind kind, const MeanSpec& spec, double a, double b,
                                     const std::vector<double>& grid);

// --- h-form -------------------------------------------------------------------

/// Grid on which general_h_chain validates h before use.
std::vector<double> default_h_grid();

/// M(u, v) = (u + v) h(ln(v / u)).
MeanFn mean_from_h(const RealFn& h);

/// Chain of the requested kind with M built from h. Throws PreconditionError
/// if h fails the h-function conditions on default_h_grid().
ChainReport general_h_chain(const FunctionSpec& f, const FunctionSpec& g, double a, double b,
                            const RealFn& h, ChainKind kind);

// --- comparison ---------------------------------------------------------------

enum class Relation { APrecB, BPrecA, Incomparable, Undetermined };
const char* to_string(Relation r);

struct ComparisonWitness {
  std::string f;
  std::string g;
  double a = 0.0;
  double b = 0.0;
  double middle_a = 0.0;
  double middle_b = 0.0;
};

struct OrderVerdict {
  Relation relation = Relation::Undetermined;
  ChainKind kind = ChainKind::LogDerivForm;
  std::vector<ComparisonWitness> witnesses;  // at most two
  std::size_t trials = 0;                    // trials actually run
  std::size_t a_below = 0;                   // middle_a < middle_b strictly
  std::size_t b_below = 0;
  std::size_t ties = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kStrictRel = 1e-9;

struct SampledPair {
  FunctionSpec f;
  FunctionSpec g;
  double a = 0.0;
  double b = 0.0;
};

/// Trial i draws from mix_seed(seed, i): two positive nondecreasing catalog
/// functions (poly, exp, affine, exppoly; coefficients log-uniform in
/// [0.1, 10]) on [0, L], L in {0.5, 1, 2}.
SampledPair sample_function_pair(std::uint64_t seed, std::size_t trial);

/// A precedes B when A's middle term never exceeds B's. Stops early once both
/// strict directions are witnessed.
OrderVerdict compare_generalizations(const MeanSpec& spec_a, const MeanSpec& spec_b,
                                     std::size_t trials, std::uint64_t seed,
                                     ChainKind kind = ChainKind::LogDerivForm);

}  // namespace ineq
