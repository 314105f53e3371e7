#ifndef SODELIE_POLYFIELD_POLYNOMIAL_HPP
#define SODELIE_POLYFIELD_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sodelie/polyfield/coords.hpp"
#include "sodelie/polyfield/rational.hpp"

namespace sodelie {

/// Dense exponent vector, one entry per coordinate.
using Exponent = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no stored term has a zero coefficient, so the zero
/// polynomial is the empty term map and equality is term-map equality.
/// Terms are ordered lexicographically by exponent vector; the leading term is
/// the lexicographically greatest one.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit Polynomial(Coords coords) : coords_(std::move(coords)) {}

  static Polynomial constant(Coords coords, const Rational& value);
  static Polynomial variable(Coords coords, std::string_view name);
  static Polynomial monomial(Coords coords, Exponent exponent, const Rational& coefficient);

  const Coords& coords() const { return coords_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for constants and for the zero polynomial.
  std::uint32_t degree() const;
  Rational coefficient(const Exponent& exponent) const;
  /// Lexicographically greatest term. Precondition: !is_zero().
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  /// Adds `coefficient * x^exponent`, keeping canonical form.
  void add_term(const Exponent& exponent, const Rational& coefficient);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  bool operator==(const Polynomial& other) const {
    return coords_ == other.coords_ && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial pow(unsigned exponent) const;

  /// Partial derivative with respect to coordinate `index`.
  Polynomial diff(std::size_t index) const;
  Polynomial diff(std::string_view name) const { return diff(coords_.require_index(name)); }

  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  /// Returns the same polynomial over `target`, where coordinate i of this
  /// polynomial becomes coordinate mapping[i] of `target`.
  Polynomial remap(const Coords& target, std::span<const std::size_t> mapping) const;

  /// Human-readable form, e.g. "3*x^2*v - 1/2".
  std::string to_string() const;

 private:
  Coords coords_;
  TermMap terms_;
};

}  // namespace sodelie

#endif
