#include "sodelie/liealgebra/builtin.hpp"

namespace sodelie::lie {

const Coords& phase_coords() {
  static const Coords coords = Coords::intern({"x", "v"});
  return coords;
}

namespace {

Polynomial c(const Rational& r) { return Polynomial::constant(phase_coords(), r); }
Polynomial x() { return Polynomial::variable(phase_coords(), "x"); }
Polynomial v() { return Polynomial::variable(phase_coords(), "v"); }

VectorField field(Polynomial dx, Polynomial dv) {
  return VectorField::planar(phase_coords(), std::move(dx), std::move(dv));
}

std::vector<VectorField> sl3_fields() {
  return {
      field(v(), -(c(3) * x() * v() + x().pow(3))),
      field(c(0), c(1)),
      field(c(-1), c(3) * x()),
      field(x(), c(-2) * x().pow(2)),
      field(v() + c(2) * x().pow(2), -(x() * (v() + c(3) * x().pow(2)))),
      field(c(2) * x() * (v() + x().pow(2)), c(2) * (v().pow(2) - x().pow(4))),
      field(c(1), -x()),
      field(c(2) * x(), c(4) * v()),
  };
}

std::vector<VectorField> riccati_fields() {
  return {
      field(v(), c(0)),
      field(c(0), v()),
      field(c(0), x() * v()),
      field(c(0), c(1)),
      field(c(0), x()),
      field(c(0), x().pow(2)),
      field(c(0), x().pow(3)),
      field(x(), c(0)),
  };
}

}  // namespace

std::vector<VectorField> builtin_fields(FieldFamily family) {
  switch (family) {
    case FieldFamily::Sl3:
      return sl3_fields();
    case FieldFamily::RiccatiScheme:
      return riccati_fields();
  }
  return {};
}

}  // namespace sodelie::lie
