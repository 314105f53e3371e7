#include "sodelie/liealgebra/verify.hpp"

#include <sstream>

#include "sodelie/liealgebra/builtin.hpp"
#include "sodelie/polyfield/linalg.hpp"

namespace sodelie::lie {

namespace {

struct PrintedTerm {
  std::size_t index;  // 1-based
  long num;
  long den;
};

struct PrintedRelation {
  std::size_t first;
  std::size_t second;
  std::vector<PrintedTerm> rhs;
};

// The six defining relations X3=[X1,X2], -3X4=[X1,X3], X5=[X1,X4],
// X6=[X1,X5], X7=[X2,X5], X8=[X2,X6], followed by the 22-entry table.
const std::vector<PrintedRelation>& printed_sl3_relations() {
  static const std::vector<PrintedRelation> relations{
      {1, 2, {{3, 1, 1}}},
      {1, 3, {{4, -3, 1}}},
      {1, 4, {{5, 1, 1}}},
      {1, 5, {{6, 1, 1}}},
      {2, 5, {{7, 1, 1}}},
      {2, 6, {{8, 1, 1}}},
      {1, 6, {}},
      {1, 7, {{8, 1, 2}}},
      {1, 8, {{1, -2, 1}}},
      {2, 3, {}},
      {2, 4, {}},
      {2, 7, {}},
      {2, 8, {{2, 4, 1}}},
      {3, 4, {{7, -1, 1}}},
      {3, 5, {{8, -1, 2}}},
      {3, 6, {{1, -2, 1}}},
      {3, 7, {{2, -2, 1}}},
      {3, 8, {{3, 2, 1}}},
      {4, 5, {{1, -1, 1}}},
      {4, 6, {}},
      {4, 7, {{3, 1, 1}}},
      {4, 8, {}},
      {5, 6, {}},
      {5, 7, {{4, -3, 1}}},
      {5, 8, {{5, -2, 1}}},
      {6, 7, {{5, -2, 1}}},
      {6, 8, {{6, -4, 1}}},
      {7, 8, {{7, 2, 1}}},
  };
  return relations;
}

// [Y2, Yi] and [Y8, Yi] for i = 1..8. Entries involving only Y2 and Y8 are
// zero because W is abelian.
const std::vector<PrintedRelation>& printed_scheme_relations() {
  static const std::vector<PrintedRelation> relations{
      {2, 1, {{1, 1, 1}}},  {2, 2, {}},           {2, 3, {}},           {2, 4, {{4, -1, 1}}},
      {2, 5, {{5, -1, 1}}}, {2, 6, {{6, -1, 1}}}, {2, 7, {{7, -1, 1}}}, {2, 8, {}},
      {8, 1, {{1, -1, 1}}}, {8, 2, {}},           {8, 3, {{3, 1, 1}}},  {8, 4, {}},
      {8, 5, {{5, 1, 1}}},  {8, 6, {{6, 2, 1}}},  {8, 7, {{7, 3, 1}}},  {8, 8, {}},
  };
  return relations;
}

std::vector<Rational> expand(const std::vector<PrintedTerm>& terms, std::size_t dimension) {
  std::vector<Rational> out(dimension, 0);
  for (const auto& t : terms) out[t.index - 1] = ratio(t.num, t.den);
  return out;
}

std::string format_combination(std::span<const Rational> coefficients, char symbol) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += symbol + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string relation_text(const PrintedRelation& r, std::size_t dimension, char symbol) {
  const auto coefficients = expand(r.rhs, dimension);
  return "[" + std::string(1, symbol) + std::to_string(r.first) + "," + symbol + std::to_string(r.second) +
         "]=" + format_combination(coefficients, symbol);
}

BracketCheck check_relation(const PrintedRelation& r, std::span<const VectorField> basis, char symbol) {
  BracketCheck check;
  check.first = r.first;
  check.second = r.second;
  check.relation = relation_text(r, basis.size(), symbol);
  check.expected = expand(r.rhs, basis.size());
  check.computed = in_span(lie_bracket(basis[r.first - 1], basis[r.second - 1]), basis);
  check.match = check.computed.has_value() && *check.computed == check.expected;
  return check;
}

}  // namespace

std::size_t TableReport::matched() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.match ? 1 : 0;
  return n;
}

bool SchemeReport::passed() const {
  if (!w_abelian || !w_in_v || !brackets.passed()) return false;
  for (const auto& w : witnesses) {
    if (!w.passed()) return false;
  }
  return true;
}

TableReport verify_paper_table() {
  const auto basis = builtin_fields(FieldFamily::Sl3);
  return verify_paper_table(basis);
}

TableReport verify_paper_table(std::span<const VectorField> basis) {
  if (basis.size() != 8) throw std::invalid_argument("verify_paper_table: need exactly eight fields");
  TableReport report;
  report.title = "sl(3) commutator relations";
  for (const auto& r : printed_sl3_relations()) report.checks.push_back(check_relation(r, basis, 'X'));
  return report;
}

IsomorphismReport verify_isomorphism() {
  const auto matrices = sl3_matrices();
  return verify_isomorphism(matrices);
}

IsomorphismReport verify_isomorphism(std::span<const Matrix3> matrices) {
  if (matrices.size() != 8) throw std::invalid_argument("verify_isomorphism: need exactly eight matrices");
  const auto fields = builtin_fields(FieldFamily::Sl3);
  IsomorphismReport report;
  report.pairs.title = "rho(M_a) = X_a bracket preservation";
  report.matrices_independent = matrix_rank(matrices) == 8;
  report.matrices_traceless = true;
  for (const auto& m : matrices) report.matrices_traceless = report.matrices_traceless && m.trace() == 0;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      BracketCheck check;
      check.first = a + 1;
      check.second = b + 1;
      check.relation = "[M" + std::to_string(a + 1) + ",M" + std::to_string(b + 1) + "] ~ [X" +
                       std::to_string(a + 1) + ",X" + std::to_string(b + 1) + "]";
      auto field_side = in_span(lie_bracket(fields[a], fields[b]), fields);
      check.expected = field_side.value_or(std::vector<Rational>{});
      check.computed = matrix_coefficients(matrix_bracket(matrices[a], matrices[b]), matrices);
      check.match = field_side.has_value() && check.computed.has_value() && *check.computed == check.expected;
      report.pairs.checks.push_back(std::move(check));
    }
  }
  return report;
}

SchemeReport verify_scheme(unsigned witness_depth) {
  const auto y = builtin_fields(FieldFamily::RiccatiScheme);
  const VectorField& y2 = y[1];
  const VectorField& y3 = y[2];
  const VectorField& y6 = y[5];
  const VectorField& y8 = y[7];

  SchemeReport report;
  report.w_abelian = lie_bracket(y2, y8).is_zero();
  report.w_in_v = in_span(y2, y).has_value() && in_span(y8, y).has_value();
  report.brackets.title = "[W, V] inside V";
  for (const auto& r : printed_scheme_relations()) report.brackets.checks.push_back(check_relation(r, y, 'Y'));

  const Coords& coords = y2.coords();
  const Polynomial minus_x = -Polynomial::variable(coords, "x");
  VectorField current = y6;
  for (unsigned k = 1; k <= witness_depth; ++k) {
    current = lie_bracket(y3, current);
    const VectorField expected = VectorField::planar(coords, Polynomial(coords), minus_x.pow(k + 2));
    WitnessCheck w;
    w.k = k;
    w.computed = current.to_string();
    w.matches_formula = current == expected;
    w.in_span = in_span(current, y).has_value();
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

nlohmann::json to_json(std::span<const Rational> values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

nlohmann::json to_json(const TableReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({
        {"pair", {c.first, c.second}},
        {"relation", c.relation},
        {"expected", to_json(c.expected)},
        {"computed", c.computed ? to_json(*c.computed) : nlohmann::json(nullptr)},
        {"match", c.match},
    });
  }
  return {{"title", report.title},
          {"matched", report.matched()},
          {"total", report.checks.size()},
          {"passed", report.passed()},
          {"checks", checks}};
}

nlohmann::json to_json(const IsomorphismReport& report) {
  return {{"pairs", to_json(report.pairs)},
          {"matrices_independent", report.matrices_independent},
          {"matrices_traceless", report.matrices_traceless},
          {"passed", report.passed()}};
}

nlohmann::json to_json(const SchemeReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"k", w.k},
                         {"computed", w.computed},
                         {"matches_formula", w.matches_formula},
                         {"in_span", w.in_span},
                         {"passed", w.passed()}});
  }
  return {{"w_abelian", report.w_abelian},
          {"w_in_v", report.w_in_v},
          {"brackets", to_json(report.brackets)},
          {"witnesses", witnesses},
          {"passed", report.passed()}};
}

std::string to_text(const TableReport& report) {
  std::ostringstream out;
  out << report.title << ": " << report.matched() << "/" << report.checks.size() << " match\n";
  for (const auto& c : report.checks) {
    out << "  " << (c.match ? "ok      " : "MISMATCH") << "  " << c.relation;
    if (!c.match) {
      out << "  computed: ";
      if (c.computed) {
        out << to_json(*c.computed).dump();
      } else {
        out << "outside span";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string to_text(const IsomorphismReport& report) {
  std::ostringstream out;
  out << to_text(report.pairs);
  out << "  matrices linearly independent: " << (report.matrices_independent ? "yes" : "NO") << "\n";
  out << "  matrices traceless: " << (report.matrices_traceless ? "yes" : "NO") << "\n";
  return out.str();
}

std::string to_text(const SchemeReport& report) {
  std::ostringstream out;
  out << "W = <Y2,Y8> abelian: " << (report.w_abelian ? "yes" : "NO") << "\n";
  out << "W inside V: " << (report.w_in_v ? "yes" : "NO") << "\n";
  out << to_text(report.brackets);
  out << "non-closure witness ad_{Y3}^k(Y6):\n";
  for (const auto& w : report.witnesses) {
    out << "  k=" << w.k << "  " << (w.passed() ? "ok      " : "FAIL    ") << w.computed
        << (w.in_span ? "  (in span)" : "  (outside span)") << "\n";
  }
  return out.str();
}

}  // namespace sodelie::lie
