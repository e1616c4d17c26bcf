#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace ineq {

/// A real number extended by the two infinities. Infinite orders of the power
/// and Rado scales are carried as a tag, never as an IEEE infinity.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtReal() = default;
  constexpr explicit ExtReal(double v) : kind_(Kind::Finite), value_(v) {}

  static constexpr ExtReal finite(double v) { return ExtReal(v); }
  static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite value; 0 for the infinities.
  constexpr double value() const { return value_; }

  /// IEEE view, for printing and ordering only.
  double as_double() const {
    switch (kind_) {
      case Kind::NegInf: return -INFINITY;
      case Kind::PosInf: return INFINITY;
      case Kind::Finite: break;
    }
    return value_;
  }

  friend constexpr bool operator==(const ExtReal&, const ExtReal&) = default;

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

/// "inf", "-inf", "+inf" or a decimal literal. Throws ParameterError.
ExtReal parse_ext_real(const std::string& token);
std::string format_ext_real(const ExtReal& r);

}  // namespace ineq
