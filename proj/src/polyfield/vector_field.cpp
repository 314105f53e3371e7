#include "sodelie/polyfield/vector_field.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "sodelie/polyfield/linalg.hpp"

namespace sodelie {

VectorField::VectorField(Coords coords, std::vector<Polynomial> components)
    : coords_(std::move(coords)), components_(std::move(components)) {
  if (components_.size() != coords_.size()) {
    throw CoordinateMismatch("vector field: component count differs from coordinate count");
  }
  for (const auto& c : components_) require_same_coords(coords_, c.coords(), "vector field component");
}

VectorField VectorField::zero(const Coords& coords) {
  return {coords, std::vector<Polynomial>(coords.size(), Polynomial(coords))};
}

VectorField VectorField::planar(const Coords& coords, Polynomial first, Polynomial second) {
  std::vector<Polynomial> components;
  components.push_back(std::move(first));
  components.push_back(std::move(second));
  return {coords, std::move(components)};
}

bool VectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Polynomial VectorField::apply(const Polynomial& p) const {
  require_same_coords(coords_, p.coords(), "vector field action");
  Polynomial out(coords_);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    Polynomial partial = p.diff(i);
    if (partial.is_zero()) continue;
    out += components_[i] * partial;
  }
  return out;
}

std::vector<Rational> VectorField::eval(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.eval(point));
  return out;
}

std::vector<double> VectorField::eval(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.eval(point));
  return out;
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> components;
  for (const auto& c : components_) components.push_back(-c);
  return {coords_, std::move(components)};
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_coords(a.coords_, b.coords_, "vector field add");
  std::vector<Polynomial> components;
  for (std::size_t i = 0; i < a.dim(); ++i) components.push_back(a.components_[i] + b.components_[i]);
  return {a.coords_, std::move(components)};
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_coords(a.coords_, b.coords_, "vector field sub");
  std::vector<Polynomial> components;
  for (std::size_t i = 0; i < a.dim(); ++i) components.push_back(a.components_[i] - b.components_[i]);
  return {a.coords_, std::move(components)};
}

VectorField operator*(const Rational& s, const VectorField& a) {
  std::vector<Polynomial> components;
  for (const auto& c : a.components_) components.push_back(c * s);
  return {a.coords_, std::move(components)};
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components_[i].to_string() + ")*d/d" + coords_.name(i);
  }
  return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_coords(x.coords(), y.coords(), "lie bracket");
  std::vector<Polynomial> components;
  components.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    components.push_back(x.apply(y.component(i)) - y.apply(x.component(i)));
  }
  return {x.coords(), std::move(components)};
}

Coords prolonged_coords(const Coords& base, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("prolongation needs at least one copy");
  std::vector<std::string> names;
  names.reserve(base.size() * copies);
  for (std::size_t k = 0; k < base.size(); ++k) {
    for (std::size_t a = 0; a < copies; ++a) names.push_back(base.name(k) + std::to_string(a));
  }
  return Coords::intern(std::move(names));
}

namespace {

std::vector<std::size_t> copy_mapping(std::size_t base_dim, std::size_t copies, std::size_t copy) {
  std::vector<std::size_t> mapping(base_dim);
  for (std::size_t k = 0; k < base_dim; ++k) mapping[k] = k * copies + copy;
  return mapping;
}

}  // namespace

Polynomial on_copy(const Polynomial& p, const Coords& prolonged, std::size_t copy) {
  const std::size_t base_dim = p.coords().size();
  if (base_dim == 0 || prolonged.size() % base_dim != 0) {
    throw CoordinateMismatch("on_copy: prolonged coordinates incompatible with base");
  }
  const std::size_t copies = prolonged.size() / base_dim;
  if (copy >= copies) throw std::invalid_argument("on_copy: copy index out of range");
  return p.remap(prolonged, copy_mapping(base_dim, copies, copy));
}

VectorField prolong(const VectorField& field, std::size_t copies) {
  const Coords target = prolonged_coords(field.coords(), copies);
  const std::size_t base_dim = field.dim();
  std::vector<Polynomial> components(target.size(), Polynomial(target));
  for (std::size_t a = 0; a < copies; ++a) {
    const auto mapping = copy_mapping(base_dim, copies, a);
    for (std::size_t k = 0; k < base_dim; ++k) {
      components[mapping[k]] = field.component(k).remap(target, mapping);
    }
  }
  return {target, std::move(components)};
}

RationalFunction derive_along(const VectorField& field, const RationalFunction& f) {
  require_same_coords(field.coords(), f.coords(), "derive_along");
  const Polynomial& p = f.numerator();
  const Polynomial& q = f.denominator();
  Polynomial numerator = q * field.apply(p) - p * field.apply(q);
  return {std::move(numerator), q * q};
}

std::size_t rank_at(std::span<const VectorField> fields, std::span<const Rational> point) {
  if (fields.empty()) return 0;
  const Coords& coords = fields.front().coords();
  for (const auto& f : fields) require_same_coords(coords, f.coords(), "rank_at");
  if (point.size() != coords.size()) throw std::invalid_argument("rank_at: point dimension mismatch");
  RationalMatrix m(fields.size(), coords.size());
  for (std::size_t r = 0; r < fields.size(); ++r) {
    for (std::size_t c = 0; c < coords.size(); ++c) m(r, c) = fields[r].component(c).eval(point);
  }
  return exact_rank(m);
}

std::optional<std::vector<Rational>> in_span(const VectorField& field, std::span<const VectorField> basis) {
  for (const auto& b : basis) require_same_coords(field.coords(), b.coords(), "in_span");
  // One equation per (component, monomial) appearing anywhere.
  std::map<std::pair<std::size_t, Exponent>, std::size_t> rows;
  auto collect = [&rows](const VectorField& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      for (const auto& [e, c] : v.component(i).terms()) rows.try_emplace({i, e}, rows.size());
    }
  };
  collect(field);
  for (const auto& b : basis) collect(b);

  if (basis.empty()) {
    if (field.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  RationalMatrix a(rows.size(), basis.size());
  std::vector<Rational> rhs(rows.size(), 0);
  for (const auto& [key, row] : rows) {
    for (std::size_t j = 0; j < basis.size(); ++j) a(row, j) = basis[j].component(key.first).coefficient(key.second);
    rhs[row] = field.component(key.first).coefficient(key.second);
  }
  return solve_exact(a, rhs);
}

VectorField combine(std::span<const VectorField> basis, std::span<const Rational> coefficients) {
  if (basis.empty()) throw std::invalid_argument("combine: empty basis");
  if (basis.size() != coefficients.size()) throw std::invalid_argument("combine: size mismatch");
  VectorField out = VectorField::zero(basis.front().coords());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i] != 0) out = out + coefficients[i] * basis[i];
  }
  return out;
}

}  // namespace sodelie
