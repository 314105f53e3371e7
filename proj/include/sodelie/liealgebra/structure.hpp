#ifndef SODELIE_LIEALGEBRA_STRUCTURE_HPP
#define SODELIE_LIEALGEBRA_STRUCTURE_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sodelie/polyfield/vector_field.hpp"

namespace sodelie::lie {

/// Structure constants [e_a, e_b] = sum_k c^k_ab e_k for a < b (0-based).
class StructureTable {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  explicit StructureTable(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  /// Stores the coefficients of [e_a, e_b]; requires a < b.
  void set(std::size_t a, std::size_t b, std::vector<Rational> coefficients);
  /// Coefficients of [e_a, e_b] for any a, b (antisymmetry applied).
  std::vector<Rational> bracket(std::size_t a, std::size_t b) const;
  const std::map<Key, std::vector<Rational>>& entries() const { return entries_; }

  bool operator==(const StructureTable& other) const = default;

 private:
  std::size_t dimension_;
  std::map<Key, std::vector<Rational>> entries_;
};

/// Raised when a bracket of two basis elements leaves their span.
class NotClosed : public std::runtime_error {
 public:
  NotClosed(std::size_t a, std::size_t b, VectorField bracket);

  std::size_t first() const { return a_; }
  std::size_t second() const { return b_; }
  const VectorField& bracket() const { return bracket_; }

 private:
  std::size_t a_;
  std::size_t b_;
  VectorField bracket_;
};

/// Resolves every [X_a, X_b], a < b, in the basis. Throws NotClosed.
StructureTable structure_constants(std::span<const VectorField> basis);

}  // namespace sodelie::lie

#endif
