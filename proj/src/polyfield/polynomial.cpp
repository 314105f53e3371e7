#include "sodelie/polyfield/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sodelie {

Polynomial Polynomial::constant(Coords coords, const Rational& value) {
  Polynomial p(coords);
  p.add_term(Exponent(coords.size(), 0), value);
  return p;
}

Polynomial Polynomial::variable(Coords coords, std::string_view name) {
  Exponent e(coords.size(), 0);
  e[coords.require_index(name)] = 1;
  return monomial(std::move(coords), std::move(e), 1);
}

Polynomial Polynomial::monomial(Coords coords, Exponent exponent, const Rational& coefficient) {
  if (exponent.size() != coords.size()) {
    throw std::invalid_argument("exponent length does not match coordinate count");
  }
  Polynomial p(std::move(coords));
  p.add_term(exponent, coefficient);
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
  }
  return best;
}

Rational Polynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_coords(coords_, other.coords_, "polynomial add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_coords(coords_, other.coords_, "polynomial sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_coords(a.coords_, b.coords_, "polynomial mul");
  Polynomial out(a.coords_);
  Exponent sum(a.coords_.size());
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(sum, product);
      if (!inserted) it->second += product;
    }
  }
  std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(coords_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::diff(std::size_t index) const {
  if (index >= coords_.size()) throw UnknownCoordinate("coordinate index out of range");
  Polynomial out(coords_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent lowered = e;
    lowered[index] -= 1;
    out.terms_.emplace_hint(out.terms_.end(), std::move(lowered), c * e[index]);
  }
  return out;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != coords_.size()) throw std::invalid_argument("point dimension mismatch");
  Rational total = 0;
  Rational term;
  Rational power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

double Polynomial::eval(std::span<const double> point) const {
  if (point.size() != coords_.size()) throw std::invalid_argument("point dimension mismatch");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::remap(const Coords& target, std::span<const std::size_t> mapping) const {
  if (mapping.size() != coords_.size()) throw std::invalid_argument("remap: mapping size mismatch");
  Polynomial out(target);
  Exponent moved(target.size());
  for (const auto& [e, c] : terms_) {
    std::fill(moved.begin(), moved.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) moved[mapping[i]] += e[i];
    out.add_term(moved, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest lexicographic term first reads naturally ("x^3 + ... + 1").
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_constant = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || is_constant) {
      out << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << coords_.name(i);
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace sodelie
