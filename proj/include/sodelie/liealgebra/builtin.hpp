#ifndef SODELIE_LIEALGEBRA_BUILTIN_HPP
#define SODELIE_LIEALGEBRA_BUILTIN_HPP

#include <vector>

#include "sodelie/polyfield/vector_field.hpp"

namespace sodelie::lie {

enum class FieldFamily {
  /// X1..X8 spanning the sl(3,R) Vessiot-Guldberg algebra of
  /// x'' + 3 x x' + x^3 = f(t).
  Sl3,
  /// Y1..Y8 spanning the quasi-Lie scheme space of the second-order Riccati
  /// equation.
  RiccatiScheme,
};

/// The (x, v) tangent-bundle coordinates every builtin field lives on.
const Coords& phase_coords();

/// Returns the eight fields of `family`; element 0 is X1 (or Y1).
std::vector<VectorField> builtin_fields(FieldFamily family);

}  // namespace sodelie::lie

#endif
