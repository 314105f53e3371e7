#ifndef SODELIE_LIEALGEBRA_VERIFY_HPP
#define SODELIE_LIEALGEBRA_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sodelie/liealgebra/matrix3.hpp"
#include "sodelie/polyfield/vector_field.hpp"

namespace sodelie::lie {

/// One checked bracket. Indices are 1-based, as printed.
struct BracketCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string relation;                           // printed form, e.g. "[X1,X3]=-3X4"
  std::vector<Rational> expected;                 // coefficients over the basis
  std::optional<std::vector<Rational>> computed;  // nullopt: bracket left the span
  bool match = false;
};

struct TableReport {
  std::string title;
  std::vector<BracketCheck> checks;

  std::size_t matched() const;
  bool passed() const { return matched() == checks.size(); }
};

/// Compares the structure constants of the matrices (computed) against those
/// of the vector fields (expected) pair by pair.
struct IsomorphismReport {
  TableReport pairs;
  bool matrices_independent = false;
  bool matrices_traceless = false;

  bool passed() const { return pairs.passed() && matrices_independent && matrices_traceless; }
};

/// ad_{Y3}^k (Y6) against (-x)^(k+2) d/dv.
struct WitnessCheck {
  unsigned k = 0;
  std::string computed;
  bool matches_formula = false;
  bool in_span = false;
  /// Formula matches, and for k >= 2 the field lies outside span{Y1..Y8}.
  bool passed() const { return matches_formula && (k < 2 || !in_span); }
};

struct SchemeReport {
  bool w_abelian = false;
  bool w_in_v = false;
  TableReport brackets;
  std::vector<WitnessCheck> witnesses;

  bool passed() const;
};

/// Checks the 28 printed commutator relations of X1..X8 against brackets
/// computed from `basis` (defaults to the builtin fields). Mismatches are
/// report content.
TableReport verify_paper_table();
TableReport verify_paper_table(std::span<const VectorField> basis);

/// Checks that rho(M_a) = X_a preserves every bracket.
IsomorphismReport verify_isomorphism();
IsomorphismReport verify_isomorphism(std::span<const Matrix3> matrices);

/// Quasi-Lie scheme conditions for W = <Y2, Y8> inside V = <Y1..Y8>, plus
/// the non-closure witness up to depth `witness_depth`.
SchemeReport verify_scheme(unsigned witness_depth = 6);

nlohmann::json to_json(const TableReport& report);
nlohmann::json to_json(const IsomorphismReport& report);
nlohmann::json to_json(const SchemeReport& report);

std::string to_text(const TableReport& report);
std::string to_text(const IsomorphismReport& report);
std::string to_text(const SchemeReport& report);

/// Rationals as "p/q" strings.
nlohmann::json to_json(std::span<const Rational> values);

}  // namespace sodelie::lie

#endif
