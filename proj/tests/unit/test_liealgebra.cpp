#include <random>

#include "doctest.h"
#include "sodelie/liealgebra/builtin.hpp"
#include "sodelie/liealgebra/matrix3.hpp"
#include "sodelie/liealgebra/structure.hpp"
#include "sodelie/liealgebra/verify.hpp"

using namespace sodelie;
using namespace sodelie::lie;

namespace {

Polynomial px() { return Polynomial::variable(phase_coords(), "x"); }
Polynomial pc(const Rational& r) { return Polynomial::constant(phase_coords(), r); }

std::vector<Rational> unit(std::size_t index, const Rational& value = 1, std::size_t dim = 8) {
  std::vector<Rational> e(dim, 0);
  e[index] = value;
  return e;
}

// F_abc on exact rationals, (x_a, v_a) pairs.
Rational f_exact(const Rational& xa, const Rational& va, const Rational& xb, const Rational& vb, const Rational& xc,
                 const Rational& vc) {
  return va * (xc - xb) + vb * (xa - xc) + vc * (xb - xa) + (xa - xb) * (xb - xc) * (xc - xa);
}

}  // namespace

TEST_CASE("builtin fields are printed exactly") {
  const auto x = builtin_fields(FieldFamily::Sl3);
  REQUIRE(x.size() == 8);
  CHECK(x[2] == VectorField::planar(phase_coords(), pc(-1), pc(3) * px()));
  const auto y = builtin_fields(FieldFamily::RiccatiScheme);
  REQUIRE(y.size() == 8);
  CHECK(y[7] == VectorField::planar(phase_coords(), px(), pc(0)));

  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<VectorField> others;
    for (std::size_t j = 0; j < 8; ++j) {
      if (j != i) others.push_back(x[j]);
    }
    CHECK_FALSE(in_span(x[i], others).has_value());
  }
}

TEST_CASE("structure constants of the sl(3) family") {
  const auto x = builtin_fields(FieldFamily::Sl3);
  const StructureTable table = structure_constants(x);
  CHECK(table.entries().size() == 28);
  CHECK(table.bracket(4, 7) == unit(4, -2));
  CHECK(table.bracket(7, 4) == unit(4, 2));
  CHECK(table.bracket(0, 1) == unit(2));

  const std::vector<VectorField> lone{x[1]};
  CHECK(structure_constants(lone).entries().empty());

  const auto y = builtin_fields(FieldFamily::RiccatiScheme);
  const std::vector<VectorField> pair{y[2], y[5]};
  CHECK_THROWS_AS(structure_constants(pair), NotClosed);
  try {
    structure_constants(pair);
  } catch (const NotClosed& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(e.bracket() == VectorField::planar(phase_coords(), pc(0), -px().pow(3)));
  }
}

TEST_CASE("printed commutator table") {
  const TableReport report = verify_paper_table();
  CHECK(report.checks.size() == 28);
  CHECK(report.matched() == 28);
  CHECK(report.passed());

  auto find = [&](std::size_t a, std::size_t b) -> const BracketCheck& {
    for (const auto& c : report.checks) {
      if (c.first == a && c.second == b) return c;
    }
    throw std::logic_error("missing pair");
  };
  CHECK(find(1, 3).match);
  CHECK(find(1, 3).expected == unit(3, -3));
  CHECK(find(3, 6).match);
  CHECK(*find(3, 6).computed == unit(0, -2));
  CHECK(find(1, 6).match);
  CHECK(*find(1, 6).computed == std::vector<Rational>(8, 0));

  const auto json = to_json(report);
  CHECK(json["matched"] == 28);
  CHECK(json["checks"][1]["relation"] == "[X1,X3]=-3*X4");
}

TEST_CASE("mutated X5 is caught by the table check") {
  auto x = builtin_fields(FieldFamily::Sl3);
  x[4] = x[4] + VectorField::planar(phase_coords(), pc(0), px());
  const TableReport report = verify_paper_table(x);
  CHECK_FALSE(report.passed());
  bool names_x5 = false;
  for (const auto& c : report.checks) {
    if (!c.match && (c.first == 5 || c.second == 5)) names_x5 = true;
  }
  CHECK(names_x5);
  CHECK(to_text(report).find("MISMATCH") != std::string::npos);
}

TEST_CASE("matrix commutators") {
  const auto m = sl3_matrices();
  for (const auto& mat : m) CHECK(mat.trace() == 0);
  CHECK(matrix_bracket(m[0], m[1]) == m[2]);
  CHECK(matrix_bracket(m[3], m[3]).is_zero());
  CHECK(matrix_bracket(m[1], m[7]) == Rational(4) * m[1]);
  CHECK(matrix_rank(m) == 8);
}

TEST_CASE("rho is a Lie algebra isomorphism") {
  const IsomorphismReport report = verify_isomorphism();
  CHECK(report.passed());
  CHECK(report.pairs.checks.size() == 28);
  const BracketCheck& first = report.pairs.checks.front();
  CHECK(first.first == 1);
  CHECK(first.second == 2);
  CHECK(first.expected == unit(2));
  CHECK(*first.computed == unit(2));

  auto perturbed = sl3_matrices();
  perturbed[4] = perturbed[4] + perturbed[5];
  const IsomorphismReport bad = verify_isomorphism(perturbed);
  CHECK_FALSE(bad.passed());
  CHECK(bad.pairs.matched() < 28);
}

TEST_CASE("quasi-Lie scheme conditions") {
  const SchemeReport report = verify_scheme();
  CHECK(report.w_abelian);
  CHECK(report.w_in_v);
  CHECK(report.brackets.checks.size() == 16);
  CHECK(report.brackets.passed());
  CHECK(report.passed());
  REQUIRE(report.witnesses.size() == 6);
  CHECK(report.witnesses[0].in_span);  // -x^3 d/dv = -Y7
  CHECK(report.witnesses[2].computed == "(-x^5)*d/dv");
  CHECK_FALSE(report.witnesses[2].in_span);

  const auto y = builtin_fields(FieldFamily::RiccatiScheme);
  CHECK(lie_bracket(y[1], y[7]).is_zero());
  CHECK(lie_bracket(y[7], y[5]) == Rational(2) * y[5]);
  CHECK(verify_scheme(3).witnesses.size() == 3);
}

TEST_CASE("prolongation is a Lie algebra morphism on X1..X8") {
  const auto x = builtin_fields(FieldFamily::Sl3);
  for (std::size_t m = 2; m <= 5; ++m) {
    std::vector<VectorField> lifted;
    for (const auto& f : x) lifted.push_back(prolong(f, m));
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        CHECK(prolong(lie_bracket(x[a], x[b]), m) == lie_bracket(lifted[a], lifted[b]));
      }
    }
  }
}

TEST_CASE("time-slices of the named families lie in the algebras") {
  const auto x = builtin_fields(FieldFamily::Sl3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational f = ratio(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    auto c = in_span(x[0] + f * x[1], x);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == f);
  }

  const auto y = builtin_fields(FieldFamily::RiccatiScheme);
  const std::vector<Rational> coeffs{1, ratio(-3, 5), ratio(-7, 2), ratio(1, 9), ratio(-4, 1), ratio(2, 3), ratio(-5, 8)};
  const std::vector<VectorField> first_seven(y.begin(), y.begin() + 7);
  const VectorField yt = combine(first_seven, coeffs);
  auto c = in_span(yt, y);
  REQUIRE(c.has_value());
  for (std::size_t i = 0; i < 7; ++i) CHECK((*c)[i] == coeffs[i]);
  CHECK((*c)[7] == 0);
}

TEST_CASE("projected prolongations have rank 8 at generic points") {
  const auto x = builtin_fields(FieldFamily::Sl3);
  std::vector<VectorField> lifted;
  for (const auto& f : x) lifted.push_back(prolong(f, 4));
  std::mt19937 rng(2024);
  int generic_points = 0;
  while (generic_points < 10) {
    std::vector<Rational> p;  // x1..x4, v1..v4
    for (int k = 0; k < 8; ++k) p.push_back(ratio(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1));
    auto f = [&](int a, int b, int c) { return f_exact(p[a], p[4 + a], p[b], p[4 + b], p[c], p[4 + c]); };
    if (f(0, 1, 2) * f(0, 1, 3) * f(0, 2, 3) * f(1, 2, 3) == 0) continue;
    ++generic_points;
    CHECK(rank_at(lifted, p) == 8);

    std::vector<Rational> dup = p;
    dup[1] = dup[0];
    dup[5] = dup[4];
    CHECK(rank_at(lifted, dup) <= 6);
  }
}
