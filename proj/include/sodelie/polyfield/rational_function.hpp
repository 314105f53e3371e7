#ifndef SODELIE_POLYFIELD_RATIONAL_FUNCTION_HPP
#define SODELIE_POLYFIELD_RATIONAL_FUNCTION_HPP

#include <string>

#include "sodelie/polyfield/polynomial.hpp"

namespace sodelie {

/// Quotient of two polynomials over the same coordinates.
///
/// No gcd cancellation is performed; equality is decided by cross
/// multiplication. The denominator is never zero and its leading term has a
/// positive coefficient.
class RationalFunction {
 public:
  /// Throws std::domain_error when `denominator` is the zero polynomial.
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial numerator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const Coords& coords() const { return num_.coords(); }

  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when `b` is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// p/q == r/s iff p*s - r*q is the zero polynomial.
  bool operator==(const RationalFunction& other) const;
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

  /// Throws std::domain_error when the denominator vanishes at `point`.
  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace sodelie

#endif
