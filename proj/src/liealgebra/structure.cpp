#include "sodelie/liealgebra/structure.hpp"

#include <string>

namespace sodelie::lie {

void StructureTable::set(std::size_t a, std::size_t b, std::vector<Rational> coefficients) {
  if (a >= b || b >= dimension_) throw std::invalid_argument("structure table: need a < b < dimension");
  if (coefficients.size() != dimension_) throw std::invalid_argument("structure table: wrong coefficient count");
  entries_[{a, b}] = std::move(coefficients);
}

std::vector<Rational> StructureTable::bracket(std::size_t a, std::size_t b) const {
  if (a == b) return std::vector<Rational>(dimension_, 0);
  const bool swapped = a > b;
  auto it = entries_.find(swapped ? Key{b, a} : Key{a, b});
  if (it == entries_.end()) throw std::out_of_range("structure table: missing entry");
  std::vector<Rational> out = it->second;
  if (swapped) {
    for (auto& c : out) c = -c;
  }
  return out;
}

NotClosed::NotClosed(std::size_t a, std::size_t b, VectorField bracket)
    : std::runtime_error("bracket [e" + std::to_string(a + 1) + ", e" + std::to_string(b + 1) +
                         "] = " + bracket.to_string() + " is not in the span of the basis"),
      a_(a),
      b_(b),
      bracket_(std::move(bracket)) {}

StructureTable structure_constants(std::span<const VectorField> basis) {
  StructureTable table(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      VectorField br = lie_bracket(basis[a], basis[b]);
      auto coefficients = in_span(br, basis);
      if (!coefficients) throw NotClosed(a, b, std::move(br));
      table.set(a, b, std::move(*coefficients));
    }
  }
  return table;
}

}  // namespace sodelie::lie
