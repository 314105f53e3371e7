#include <random>

#include "doctest.h"
#include "sodelie/polyfield/linalg.hpp"
#include "sodelie/polyfield/polynomial.hpp"
#include "sodelie/polyfield/rational_function.hpp"
#include "sodelie/polyfield/vector_field.hpp"

using namespace sodelie;

namespace {

const Coords& xv() {
  static const Coords c = Coords::intern({"x", "v"});
  return c;
}

Polynomial X() { return Polynomial::variable(xv(), "x"); }
Polynomial V() { return Polynomial::variable(xv(), "v"); }
Polynomial C(const Rational& r) { return Polynomial::constant(xv(), r); }

VectorField field(Polynomial a, Polynomial b) { return VectorField::planar(xv(), std::move(a), std::move(b)); }

// Fields from the sl(3) family used as fixtures.
VectorField x1() { return field(V(), -(C(3) * X() * V() + X().pow(3))); }
VectorField x2() { return field(C(0), C(1)); }
VectorField x3() { return field(C(-1), C(3) * X()); }
VectorField x8() { return field(C(2) * X(), C(4) * V()); }

Polynomial random_poly(std::mt19937& rng, const Coords& coords, unsigned max_degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(0, 4);
  Polynomial p(coords);
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Exponent e(coords.size(), 0);
    unsigned budget = deg(rng);
    for (unsigned b = 0; b < budget; ++b) e[rng() % coords.size()] += 1;
    p.add_term(e, ratio(coef(rng), den(rng)));
  }
  return p;
}

VectorField random_field(std::mt19937& rng, const Coords& coords, unsigned max_degree = 3) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < coords.size(); ++i) comps.push_back(random_poly(rng, coords, max_degree));
  return {coords, std::move(comps)};
}

}  // namespace

TEST_CASE("polynomial arithmetic is exact and canonical") {
  CHECK((X() - X()).is_zero());
  CHECK((X() - X()).terms().empty());
  CHECK((X() + V()) * (X() - V()) == X().pow(2) - V().pow(2));
  CHECK((C(3) * X()) * Rational(4, 3) == C(4) * X());
  CHECK((X() * Rational(0)).is_zero());
  CHECK(C(Rational(1, 3)) + C(Rational(1, 6)) == C(Rational(1, 2)));

  const Coords other = Coords::intern({"y", "w"});
  CHECK_THROWS_AS(X() + Polynomial::variable(other, "y"), CoordinateMismatch);
  CHECK_THROWS_AS(X() * Polynomial::variable(other, "y"), CoordinateMismatch);
}

TEST_CASE("coordinate lists are interned") {
  CHECK(Coords::intern({"x", "v"}) == xv());
  CHECK(Coords::intern({"v", "x"}) != xv());
  CHECK_THROWS_AS(Coords::intern({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(xv().require_index("q"), UnknownCoordinate);
}

TEST_CASE("partial derivatives") {
  CHECK(X().pow(3).diff("x") == C(3) * X().pow(2));
  CHECK(X().pow(3).diff("v").is_zero());
  CHECK((C(3) * X() * V() + X().pow(3)).diff("x") == C(3) * V() + C(3) * X().pow(2));
  CHECK_THROWS_AS(X().diff("q"), UnknownCoordinate);
}

TEST_CASE("polynomial evaluation and printing") {
  const Polynomial p = C(3) * X() * V() + X().pow(3) - C(Rational(1, 2));
  const std::vector<Rational> pt{Rational(2), Rational(-1, 3)};
  CHECK(p.eval(std::span<const Rational>(pt)) == Rational(-2) + 8 - Rational(1, 2));
  const std::vector<double> ptd{2.0, -1.0 / 3.0};
  CHECK(p.eval(std::span<const double>(ptd)) == doctest::Approx(5.5));
  CHECK(p.to_string() == "x^3 + 3*x*v - 1/2");
  CHECK(Polynomial(xv()).to_string() == "0");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("lie bracket reproduces printed relations") {
  CHECK(lie_bracket(x2(), x8()) == Rational(4) * x2());
  CHECK(lie_bracket(x1(), x2()) == x3());
  const Coords other = Coords::intern({"y", "w"});
  CHECK_THROWS_AS(lie_bracket(x1(), VectorField::zero(other)), CoordinateMismatch);
}

TEST_CASE("lie bracket is antisymmetric, bilinear and satisfies Jacobi (randomized)") {
  std::mt19937 rng(20240611);
  const Coords three = Coords::intern({"x", "v", "w"});
  for (int trial = 0; trial < 40; ++trial) {
    const Coords& c = trial % 2 ? three : xv();
    const VectorField a = random_field(rng, c);
    const VectorField b = random_field(rng, c);
    const VectorField d = random_field(rng, c);
    CHECK(lie_bracket(a, a).is_zero());
    CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
    const Rational s = ratio(trial - 7, 3);
    CHECK(lie_bracket(a + s * b, d) == lie_bracket(a, d) + s * lie_bracket(b, d));
    const VectorField jacobi =
        lie_bracket(a, lie_bracket(b, d)) + lie_bracket(b, lie_bracket(d, a)) + lie_bracket(d, lie_bracket(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("diagonal prolongation") {
  const VectorField p2 = prolong(x2(), 5);
  REQUIRE(p2.dim() == 10);
  CHECK(p2.coords().name(0) == "x0");
  CHECK(p2.coords().name(4) == "x4");
  CHECK(p2.coords().name(5) == "v0");
  for (std::size_t a = 0; a < 5; ++a) {
    CHECK(p2.component(a).is_zero());
    CHECK(p2.component(5 + a) == Polynomial::constant(p2.coords(), 1));
  }

  const VectorField single = prolong(x1(), 1);
  const Coords c1 = Coords::intern({"x0", "v0"});
  CHECK(single.coords() == c1);
  CHECK(single.component(0) == Polynomial::variable(c1, "v0"));

  CHECK_THROWS_AS(prolong(x1(), 0), std::invalid_argument);

  std::mt19937 rng(7);
  for (std::size_t m = 2; m <= 4; ++m) {
    CHECK(prolong(lie_bracket(x1(), x2()), m) == lie_bracket(prolong(x1(), m), prolong(x2(), m)));
    const VectorField a = random_field(rng, xv());
    const VectorField b = random_field(rng, xv());
    CHECK(prolong(lie_bracket(a, b), m) == lie_bracket(prolong(a, m), prolong(b, m)));
  }
}

TEST_CASE("derive_along") {
  const VectorField ddx = field(C(1), C(0));
  const RationalFunction f(V(), X());
  const RationalFunction expected(-V(), X().pow(2));
  CHECK(derive_along(ddx, f) == expected);
  CHECK(derive_along(x2(), RationalFunction(X())).is_zero());

  SUBCASE("Leibniz rule, randomized") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      const VectorField a = random_field(rng, xv(), 2);
      Polynomial qf = random_poly(rng, xv(), 2) + C(trial + 1) * X().pow(2);
      Polynomial qg = random_poly(rng, xv(), 2) + C(trial + 2) * V().pow(2) + C(1);
      const RationalFunction F(random_poly(rng, xv(), 3), qf);
      const RationalFunction G(random_poly(rng, xv(), 3), qg);
      CHECK(derive_along(a, F * G) == derive_along(a, F) * G + F * derive_along(a, G));
    }
  }
}

TEST_CASE("rational functions") {
  const RationalFunction f(X(), -V());
  CHECK(f.denominator() == V());
  CHECK(f.numerator() == -X());
  CHECK(RationalFunction(C(2) * X(), C(2) * V()) == RationalFunction(X(), V()));
  CHECK_THROWS_AS(RationalFunction(X(), Polynomial(xv())), std::domain_error);
  const std::vector<Rational> pt{Rational(1), Rational(0)};
  CHECK_THROWS_AS(f.eval(std::span<const Rational>(pt)), std::domain_error);
}

TEST_CASE("exact rank") {
  const std::vector<Rational> pt{Rational(1, 2), Rational(-3, 7)};
  const std::vector<VectorField> zero{VectorField::zero(xv())};
  CHECK(rank_at(zero, pt) == 0);
  const std::vector<VectorField> fields{x1(), x2(), x3()};
  CHECK(rank_at(fields, pt) == 2);
  const std::vector<Rational> wrong{Rational(1)};
  CHECK_THROWS_AS(rank_at(fields, wrong), std::invalid_argument);

  SUBCASE("permutation and rescaling invariance") {
    std::mt19937 rng(5);
    const Coords four = Coords::intern({"a", "b", "c", "d"});
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<VectorField> fs;
      for (int k = 0; k < 5; ++k) fs.push_back(random_field(rng, four, 2));
      if (trial % 3 == 0) fs.push_back(fs[0] + Rational(2) * fs[1]);
      std::vector<Rational> p;
      for (int k = 0; k < 4; ++k) p.push_back(ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
      const std::size_t base = rank_at(fs, p);
      std::shuffle(fs.begin(), fs.end(), rng);
      CHECK(rank_at(fs, p) == base);
      fs[0] = Rational(-7, 3) * fs[0];
      CHECK(rank_at(fs, p) == base);
    }
  }

  SUBCASE("Bareiss agrees with elimination over the rationals") {
    RationalMatrix m(3, 4);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = 3;
    m(1, 0) = 1;
    m(1, 1) = 6;
    m(2, 2) = Rational(5, 9);
    m(2, 3) = -1;
    CHECK(exact_rank(m) == 2);
  }
}

TEST_CASE("in_span") {
  const std::vector<VectorField> basis{x1(), x2(), x3(), x8()};
  auto zero = in_span(VectorField::zero(xv()), basis);
  REQUIRE(zero.has_value());
  for (const auto& c : *zero) CHECK(c == 0);

  auto c = in_span(Rational(2) * x3() - Rational(1, 2) * x8(), basis);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 0);
  CHECK((*c)[2] == 2);
  CHECK((*c)[3] == Rational(-1, 2));

  CHECK_FALSE(in_span(field(X().pow(2), C(0)), basis).has_value());
}
