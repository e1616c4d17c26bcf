#include "ineq/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ineq/errors.hpp"
#include "text.hpp"

namespace ineq {
namespace {

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double horner_derivative(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * t + static_cast<double>(k) * c[k];
  return acc;
}

std::string join(const std::vector<double>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ',';
    s += text::shortest(c[i]);
  }
  return s;
}

}  // namespace

FunctionSpec FunctionSpec::poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ParameterError("poly needs at least one coefficient");
  FunctionSpec f;
  f.family_ = FunctionFamily::Poly;
  f.coeffs_ = std::move(coeffs);
  return f;
}

FunctionSpec FunctionSpec::exp(double k) {
  FunctionSpec f;
  f.family_ = FunctionFamily::Exp;
  f.coeffs_ = {k};
  return f;
}

FunctionSpec FunctionSpec::power(double p) {
  FunctionSpec f;
  f.family_ = FunctionFamily::Power;
  f.coeffs_ = {p};
  return f;
}

FunctionSpec FunctionSpec::affine(double c0, double c1) {
  FunctionSpec f;
  f.family_ = FunctionFamily::Affine;
  f.coeffs_ = {c0, c1};
  return f;
}

FunctionSpec FunctionSpec::exp_poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ParameterError("exppoly needs at least one coefficient");
  FunctionSpec f;
  f.family_ = FunctionFamily::ExpOfPoly;
  f.coeffs_ = std::move(coeffs);
  return f;
}

FunctionSpec FunctionSpec::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("function scale factor must be positive");
  }
  FunctionSpec f = *this;
  f.factor_ *= lambda;
  return f;
}

double FunctionSpec::value(double t) const {
  double v = 0.0;
  switch (family_) {
    case FunctionFamily::Poly: v = horner(coeffs_, t); break;
    case FunctionFamily::Exp: v = std::exp(coeffs_[0] * t); break;
    case FunctionFamily::Power:
      if (t < 0.0) throw DomainError("pow: argument must be nonnegative");
      v = std::pow(t, coeffs_[0]);
      break;
    case FunctionFamily::Affine: v = coeffs_[0] + coeffs_[1] * t; break;
    case FunctionFamily::ExpOfPoly: v = std::exp(horner(coeffs_, t)); break;
  }
  return factor_ * v;
}

double FunctionSpec::derivative(double t) const {
  double d = 0.0;
  switch (family_) {
    case FunctionFamily::Poly: d = horner_derivative(coeffs_, t); break;
    case FunctionFamily::Exp: d = coeffs_[0] * std::exp(coeffs_[0] * t); break;
    case FunctionFamily::Power: {
      if (t < 0.0) throw DomainError("pow: argument must be nonnegative");
      const double p = coeffs_[0];
      d = p == 0.0 ? 0.0 : p * std::pow(t, p - 1.0);
      break;
    }
    case FunctionFamily::Affine: d = coeffs_[1]; break;
    case FunctionFamily::ExpOfPoly:
      d = horner_derivative(coeffs_, t) * std::exp(horner(coeffs_, t));
      break;
  }
  return factor_ * d;
}

double FunctionSpec::log_derivative(double t) const {
  switch (family_) {
    case FunctionFamily::Exp: return coeffs_[0];
    case FunctionFamily::Power: return coeffs_[0] / t;
    case FunctionFamily::ExpOfPoly: return horner_derivative(coeffs_, t);
    case FunctionFamily::Affine: return coeffs_[1] / (coeffs_[0] + coeffs_[1] * t);
    case FunctionFamily::Poly: return horner_derivative(coeffs_, t) / horner(coeffs_, t);
  }
  return 0.0;
}

double FunctionSpec::sup_bound_unit() const {
  double s = 0.0;
  switch (family_) {
    case FunctionFamily::Poly:
    case FunctionFamily::Affine:
      for (double c : coeffs_) s += std::abs(c);
      break;
    case FunctionFamily::Exp: s = std::max(1.0, std::exp(coeffs_[0])); break;
    case FunctionFamily::Power:
      if (coeffs_[0] < 0.0) throw DomainError("pow with negative exponent is unbounded on (0, 1]");
      s = 1.0;
      break;
    case FunctionFamily::ExpOfPoly: {
      double m = 0.0;
      for (double c : coeffs_) m += std::abs(c);
      s = std::exp(m);
      break;
    }
  }
  return std::abs(factor_) * s;
}

FunctionSpec parse_function_spec(const std::string& raw) {
  std::string t = text::lower(text::trim(raw));
  double factor = 1.0;
  if (const auto star = t.find('*'); star != std::string::npos) {
    factor = text::parse_real(t.substr(0, star));
    t = text::trim(t.substr(star + 1));
  }
  const auto colon = t.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("function spec '" + raw + "' needs '<family>:<params>'");
  }
  const std::string head = t.substr(0, colon);
  const std::string rest = t.substr(colon + 1);

  FunctionSpec f = [&]() {
    if (head == "poly") return FunctionSpec::poly(text::parse_reals(rest, 0, raw));
    if (head == "exp") return FunctionSpec::exp(text::parse_reals(rest, 1, raw)[0]);
    if (head == "pow") return FunctionSpec::power(text::parse_reals(rest, 1, raw)[0]);
    if (head == "affine") {
      const auto c = text::parse_reals(rest, 2, raw);
      return FunctionSpec::affine(c[0], c[1]);
    }
    if (head == "exppoly") return FunctionSpec::exp_poly(text::parse_reals(rest, 0, raw));
    throw ParameterError("unknown function family '" + head + "'");
  }();
  return factor == 1.0 ? f : f.scaled(factor);
}

std::string to_string(const FunctionSpec& f) {
  std::string body;
  switch (f.family()) {
    case FunctionFamily::Poly: body = "poly:" + join(f.coefficients()); break;
    case FunctionFamily::Exp: body = "exp:" + join(f.coefficients()); break;
    case FunctionFamily::Power: body = "pow:" + join(f.coefficients()); break;
    case FunctionFamily::Affine: body = "affine:" + join(f.coefficients()); break;
    case FunctionFamily::ExpOfPoly: body = "exppoly:" + join(f.coefficients()); break;
  }
  return f.factor() == 1.0 ? body : text::shortest(f.factor()) + "*" + body;
}

void require_positive(const FunctionSpec& f, double a, double b) {
  const double h = (b - a) / kValidationSamples;
  for (int i = 0; i < kValidationSamples; ++i) {
    const double t = a + (i + 0.5) * h;
    const double v = f(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PreconditionError(to_string(f) + " is not positive at t=" + text::shortest(t));
    }
  }
}

void require_nondecreasing(const FunctionSpec& f, double a, double b) {
  const double h = (b - a) / kValidationSamples;
  for (int i = 0; i < kValidationSamples; ++i) {
    const double t = a + (i + 0.5) * h;
    if (!(f.derivative(t) >= 0.0)) {
      throw PreconditionError(to_string(f) + " has a negative derivative at t=" +
                              text::shortest(t));
    }
  }
}

}  // namespace ineq
