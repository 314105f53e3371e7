#ifndef SODELIE_POLYFIELD_VECTOR_FIELD_HPP
#define SODELIE_POLYFIELD_VECTOR_FIELD_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sodelie/polyfield/polynomial.hpp"
#include "sodelie/polyfield/rational_function.hpp"

namespace sodelie {

/// Polynomial vector field sum_i X^i d/dq_i on a fixed coordinate list.
class VectorField {
 public:
  /// Throws CoordinateMismatch if the component count differs from the
  /// coordinate count or any component lives on other coordinates.
  VectorField(Coords coords, std::vector<Polynomial> components);

  static VectorField zero(const Coords& coords);
  /// Builds a field from component polynomials on a two-coordinate list.
  static VectorField planar(const Coords& coords, Polynomial first, Polynomial second);

  const Coords& coords() const { return coords_; }
  std::size_t dim() const { return components_.size(); }
  const Polynomial& component(std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }

  bool is_zero() const;

  /// X(p) = sum_i X^i dp/dq_i.
  Polynomial apply(const Polynomial& p) const;

  std::vector<Rational> eval(std::span<const Rational> point) const;
  std::vector<double> eval(std::span<const double> point) const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Rational& s, const VectorField& a);

  bool operator==(const VectorField& other) const {
    return coords_ == other.coords_ && components_ == other.components_;
  }
  bool operator!=(const VectorField& other) const { return !(*this == other); }

  /// E.g. "(v)*d/dx + (-3*x*v - x^3)*d/dv"; "0" for the zero field.
  std::string to_string() const;

 private:
  Coords coords_;
  std::vector<Polynomial> components_;
};

/// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Coordinates of `copies` copies of `base`: every copy of base coordinate 0,
/// then every copy of coordinate 1, and so on. For base (x, v) this is
/// (x0, ..., x{m-1}, v0, ..., v{m-1}).
Coords prolonged_coords(const Coords& base, std::size_t copies);

/// Diagonal prolongation: the field acting identically on each copy.
/// Throws std::invalid_argument when copies == 0.
VectorField prolong(const VectorField& field, std::size_t copies);

/// Embeds a polynomial on the base coordinates into copy `copy` of the
/// prolonged coordinate list.
Polynomial on_copy(const Polynomial& p, const Coords& prolonged, std::size_t copy);

/// X(F) for F = p/q, returned as (q X(p) - p X(q)) / q^2.
RationalFunction derive_along(const VectorField& field, const RationalFunction& f);

/// Exact rank of the matrix whose rows are the fields evaluated at `point`.
/// Throws std::invalid_argument on a dimension mismatch.
std::size_t rank_at(std::span<const VectorField> fields, std::span<const Rational> point);

/// Coefficients c with field = sum_i c_i basis_i, or nullopt if no such
/// combination exists. Free coefficients (dependent basis) are set to zero.
std::optional<std::vector<Rational>> in_span(const VectorField& field,
                                             std::span<const VectorField> basis);

/// sum_i coefficients_i * basis_i.
VectorField combine(std::span<const VectorField> basis, std::span<const Rational> coefficients);

}  // namespace sodelie

#endif
