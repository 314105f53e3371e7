#include "sodelie/polyfield/rational_function.hpp"

#include <stdexcept>

namespace sodelie {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_coords(num_.coords(), den_.coords(), "rational function");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (den_.leading_term().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction::RationalFunction(Polynomial numerator)
    : RationalFunction(numerator, Polynomial::constant(numerator.coords(), 1)) {}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool RationalFunction::operator==(const RationalFunction& other) const {
  if (coords() != other.coords()) return false;
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

Rational RationalFunction::eval(std::span<const Rational> point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw std::domain_error("rational function denominator vanishes at point");
  return num_.eval(point) / d;
}

double RationalFunction::eval(std::span<const double> point) const {
  const double d = den_.eval(point);
  if (d == 0.0) throw std::domain_error("rational function denominator vanishes at point");
  return num_.eval(point) / d;
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sodelie
