// Acceptance gate: one PASS/FAIL line per criterion with pinned tolerances.
//
//   acceptance [--expect-fail ID]...
//
// Exits 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "sodelie/cli/commands.hpp"
#include "sodelie/liealgebra/builtin.hpp"
#include "sodelie/liealgebra/verify.hpp"
#include "sodelie/odeint/integrator.hpp"
#include "sodelie/odeint/residual.hpp"
#include "sodelie/riccati/riccati.hpp"
#include "sodelie/superposition/superposition.hpp"

using namespace sodelie;
using ode::State;
using ode::Trajectory;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// ---- 1-5: exact algebra ----

Result exact_table() {
  const lie::TableReport r = lie::verify_paper_table();
  return {r.passed() && r.checks.size() == 28,
          std::to_string(r.matched()) + "/" + std::to_string(r.checks.size()) + " relations reproduce"};
}

Result isomorphism() {
  const lie::IsomorphismReport r = lie::verify_isomorphism();
  return {r.passed() && r.pairs.checks.size() == 28,
          std::to_string(r.pairs.matched()) + "/" + std::to_string(r.pairs.checks.size()) +
              " pairs share structure constants"};
}

Result integrals_annihilated() {
  const sup::ExactIntegrals exact = sup::exact_integrals();
  const auto fields = lie::builtin_fields(lie::FieldFamily::Sl3);
  int zero = 0;
  for (std::size_t a : {0u, 1u}) {
    const VectorField hat = prolong(fields[a], 5);
    zero += derive_along(hat, exact.lambda1).numerator().is_zero();
    zero += derive_along(hat, exact.lambda2).numerator().is_zero();
  }
  return {zero == 4, std::to_string(zero) + "/4 numerators of X^(Lambda_j) are the zero polynomial"};
}

Result scheme() {
  const lie::SchemeReport r = lie::verify_scheme(6);
  bool witnesses = r.witnesses.size() == 6;
  for (const auto& w : r.witnesses) witnesses = witnesses && w.passed();
  return {r.passed() && r.w_abelian && r.brackets.checks.size() == 16 && witnesses,
          std::string("[Y2,Y8]=0 ") + (r.w_abelian ? "yes" : "no") + ", " + std::to_string(r.brackets.matched()) +
              "/16 brackets, ad^k witnesses k=1..6 " + (witnesses ? "ok" : "FAILED")};
}

Result genericity_rank() {
  std::vector<VectorField> hats;
  for (const auto& f : lie::builtin_fields(lie::FieldFamily::Sl3)) hats.push_back(prolong(f, 4));
  const Coords& coords = hats.front().coords();
  auto product = [&](const std::vector<Rational>& p) -> Rational {
    return sup::f_polynomial(coords, 0, 1, 2).eval(p) * sup::f_polynomial(coords, 0, 1, 3).eval(p) *
           sup::f_polynomial(coords, 0, 2, 3).eval(p) * sup::f_polynomial(coords, 1, 2, 3).eval(p);
  };
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  int generic = 0, rank8 = 0, low = 0;
  while (generic < 20) {
    std::vector<Rational> p;
    for (int i = 0; i < 8; ++i) p.push_back(ratio(num(rng), den(rng)));
    if (product(p) == 0) continue;
    ++generic;
    rank8 += rank_at(hats, p) == 8;
    p[2] = p[0];
    p[6] = p[4];
    low += rank_at(hats, p) <= 6;
  }
  return {rank8 == 20 && low == 20, "rank 8 at " + std::to_string(rank8) + "/20 generic points, rank <= 6 at " +
                                        std::to_string(low) + "/20 duplicated points"};
}

// ---- 6: worked example ----

struct Sample {
  double t, l1, l2;
};

std::vector<Sample> worked_example_samples() {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> lam(-1.0, 1.0);
  std::vector<Sample> out;
  for (int i = 0; i < 25; ++i) {
    const double t = 0.5 + 1.5 * i / 24.0;
    for (;;) {
      const double l1 = lam(rng), l2 = lam(rng);
      const double den = t * (-1.0 + l2) + t * t * l1 * (-1.0 + l2) + (-1.0 + l1) * l2;
      if (std::abs(den) > 0.1) {
        out.push_back({t, l1, l2});
        break;
      }
    }
  }
  return out;
}

Result worked_example_formula() {
  int matched = 0, degenerate = 0;
  double worst_unguarded = 0.0;
  sup::Guard unguarded;
  unguarded.genericity = false;
  for (const Sample& s : worked_example_samples()) {
    const auto q = testing::ps_family(s.t);
    const double want = testing::ps_general(s.t, s.l1, s.l2);
    try {
      matched += std::abs(sup::superpose_value(q, {s.l1, s.l2}) - want) <= 1e-9;
    } catch (const sup::Degenerate&) {
      ++degenerate;
    }
    try {
      worst_unguarded = std::max(worst_unguarded, std::abs(sup::superpose_value(q, {s.l1, s.l2}, unguarded) - want));
    } catch (const sup::Degenerate&) {
      worst_unguarded = INFINITY;
    }
  }
  return {matched == 25, std::to_string(matched) + "/25 samples within 1e-9; " + std::to_string(degenerate) +
                             " rejected as non-generic (F123 = 0 on these four solutions); unguarded formula "
                             "deviates by up to " +
                             sci(worst_unguarded)};
}

Result worked_example_solution() {
  // Exact, with t, l1, l2 all symbolic: x'' + 3 x x' + x^3 has a zero numerator.
  const Coords tc = Coords::intern({"t", "l1", "l2"});
  const Polynomial t = Polynomial::variable(tc, "t");
  const Polynomial l1 = Polynomial::variable(tc, "l1");
  const Polynomial l2 = Polynomial::variable(tc, "l2");
  const Polynomial one = Polynomial::constant(tc, 1);
  auto d = [](const RationalFunction& f) {
    const Polynomial& p = f.numerator();
    const Polynomial& q = f.denominator();
    return RationalFunction(p.diff(0) * q - p * q.diff(0), q * q);
  };
  const RationalFunction x((one + Polynomial::constant(tc, 2) * t * l1) * (l2 - one),
                           t * (l2 - one) + t * t * l1 * (l2 - one) + (l1 - one) * l2);
  const RationalFunction dx = d(x);
  const bool exact = (d(dx) + RationalFunction(Polynomial::constant(tc, 3)) * x * dx + x * x * x).is_zero();

  // Finite differences on constants whose poles stay clear of [0.5, 2.5].
  std::mt19937 rng(66);
  std::uniform_real_distribution<double> lam(-1.0, 1.0);
  const auto grid = ode::uniform_grid(1.0, 2.0, 200);
  const ode::MdpiEquation eq{ode::CoeffExpr::constant(0)};
  double worst = 0.0;
  for (int n = 0; n < 25;) {
    const double a = lam(rng), b = lam(rng);
    double clearance = INFINITY;
    for (double s = 0.5; s <= 2.5; s += 1e-3) {
      clearance = std::min(clearance, std::abs(s * (b - 1.0) + s * s * a * (b - 1.0) + (a - 1.0) * b));
    }
    if (clearance < 0.2) continue;
    ++n;
    const Trajectory traj = testing::sample(grid, [&](double s) { return State{testing::ps_general(s, a, b), 0.0}; });
    worst = std::max(worst, ode::residual(eq, traj));
  }
  return {exact && worst <= 1e-6, std::string("symbolic residual in (t, l1, l2) ") + (exact ? "is zero" : "NONZERO") +
                                      "; max FD residual " + sci(worst) + " over 25 constant pairs on [1, 2] (<= 1e-6)"};
}

// ---- 7-9: numerical round trips ----

struct RoundTrip {
  double error = 0.0;
  double drift = 0.0;
};

RoundTrip round_trip(const ode::SodeFamily& eq, unsigned seed, double t0, double t1, const sup::VelocityScale& beta,
                     const ric::RiccatiCoeffs* riccati = nullptr) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> box(-0.5, 0.5);
  const auto grid = ode::uniform_grid(t0, t1, 101);
  const ode::FirstOrderSystem sys = ode::lift_sode(eq);
  ode::IntegratorOptions options;
  options.tolerance = 1e-10;
  std::vector<Trajectory> sols;
  for (int a = 0; a < 5; ++a) {
    const double x = box(rng);
    sols.push_back(ode::integrate(sys, {x, box(rng)}, t0, grid, options));
  }
  const sup::SuperposeProblem problem{{sols[1], sols[2], sols[3], sols[4]}, sols[0].state(0), 0};
  const Trajectory rebuilt = riccati ? ric::superpose_riccati(*riccati, problem).reconstruction.trajectory
                                     : sup::reconstruct(problem).trajectory;
  return {sup::max_abs_error(rebuilt, sols[0]),
          sup::lambda_drift({sols[0], sols[1], sols[2], sols[3], sols[4]}, {}, beta)};
}

Result round_trips(const ode::SodeFamily& eq) {
  RoundTrip worst;
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const RoundTrip r = round_trip(eq, seed, 0.0, 1.0, {});
    worst.error = std::max(worst.error, r.error);
    worst.drift = std::max(worst.drift, r.drift);
  }
  return {worst.error <= 1e-6 && worst.drift <= 1e-8,
          "10 seeds: max error " + sci(worst.error) + " (<= 1e-6), max Lambda drift " + sci(worst.drift) +
              " (<= 1e-8)"};
}

Result riccati_round_trip() {
  using ode::parse_expr;
  const ric::RiccatiCoeffs c = ric::build_riccati(parse_expr("0.1*cos(t)"), parse_expr("0.2"),
                                                  parse_expr("0.1*sin(t)"), parse_expr("(1 + 0.1*sin(t))^2"), 0.0, 0.8);
  auto beta = [&c](double t) { return ric::beta_at(c, t); };
  double error = 0.0;
  for (unsigned seed = 1; seed <= 10; ++seed) error = std::max(error, round_trip(c.equation, seed, 0.0, 0.8, beta, &c).error);
  const double rhs = ric::transformed_rhs_check(c, 100).max_discrepancy;

  // a3 = 1: the time-dependent path must reproduce the autonomous one bit for bit.
  const ric::RiccatiCoeffs flat = ric::build_riccati(parse_expr("0"), parse_expr("0"), parse_expr("0"),
                                                     parse_expr("1"), 0.0, 1.0);
  const auto grid = ode::uniform_grid(0.0, 1.0, 101);
  std::vector<Trajectory> sols;
  const State ics[5] = {{0.1, 0.2}, {-0.3, 0.1}, {0.25, -0.4}, {-0.1, -0.2}, {0.4, 0.35}};
  for (const State& ic : ics) sols.push_back(ode::integrate(flat.system(), ic, 0.0, grid));
  const sup::SuperposeProblem problem{{sols[1], sols[2], sols[3], sols[4]}, sols[0].state(0), 0};
  const bool bitwise = ric::superpose_riccati(flat, problem).reconstruction.trajectory.states() ==
                       sup::reconstruct(problem).trajectory.states();

  return {error <= 1e-6 && rhs <= 1e-10 && bitwise, "10 seeds: max error " + sci(error) +
                                                        " (<= 1e-6); transformed RHS discrepancy " + sci(rhs) +
                                                        " (<= 1e-10); a3 = 1 bit-identical: " +
                                                        (bitwise ? "yes" : "no")};
}

// ---- 10: negative controls ----

Result negative_controls() {
  cli::VerifyOptions mutated;
  mutated.mutate_x5 = true;
  mutated.rank_points = 2;
  const cli::VerifyReport report = cli::run_verification(mutated);
  const bool mutation_fails = !report.passed() && report.sections.front().status == cli::Status::Fail;

  using ode::parse_expr;
  ode::RiccatiBuildOptions dropped;
  dropped.drop_a3_rate_term = true;
  const ric::RiccatiCoeffs broken =
      ric::build_riccati(parse_expr("0.1*cos(t)"), parse_expr("0.2"), parse_expr("0.1*sin(t)"),
                         parse_expr("(1 + 0.1*sin(t))^2"), 0.0, 0.8, dropped);
  const double discrepancy = ric::transformed_rhs_check(broken, 100).max_discrepancy;

  const std::filesystem::path scratch = std::filesystem::temp_directory_path() / "sodelie_acceptance";
  cli::RunConfig config;
  config.equation = {"mdpi", {{"f", "0"}}};
  config.grid_points = 51;
  config.particular = std::array<State, 4>{State{0.3, -0.1}, State{-0.2, 0.4}, State{-0.2, 0.4}, State{0.1, 0.2}};
  config.target = State{0.05, 0.1};
  config.output = {(scratch / "dup.csv").string(), (scratch / "dup.report.json").string()};
  std::ostringstream sink;
  const int code = cli::cmd_superpose(config, sink, sink);

  return {mutation_fails && discrepancy > 1e-3 && code == cli::kDegenerate,
          std::string("mutated X5 -> verify ") + (mutation_fails ? "FAIL" : "pass") +
              "; dropped a3' term -> discrepancy " + sci(discrepancy) + " (> 1e-3); duplicated particular -> exit " +
              std::to_string(code) + " (5)"};
}

struct Criterion {
  std::string id;
  std::string name;
  double seconds_limit;
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail ID]...\n";
      return 2;
    }
  }

  using ode::parse_expr;
  const std::vector<Criterion> criteria = {
      {"1", "exact commutator table", 1.0, exact_table},
      {"2", "matrix isomorphism", 1.0, isomorphism},
      {"3", "first integrals annihilated exactly", 10.0, integrals_annihilated},
      {"4", "quasi-Lie scheme checks", 1.0, scheme},
      {"5", "genericity and rank", 5.0, genericity_rank},
      {"6a", "worked example: formula vs printed general solution", 1.0, worked_example_formula},
      {"6b", "worked example: printed general solution residual", 1.0, worked_example_solution},
      {"7", "autonomous round trip", 10.0,
       [] { return round_trips(ode::MdpiEquation{ode::CoeffExpr::constant(0)}); }},
      {"8", "general-family round trip", 10.0,
       [] { return round_trips(ode::GeneralEquation{parse_expr("sin(t)"), parse_expr("cos(t)"), parse_expr("0.1")}); }},
      {"9", "time-dependent riccati superposition", 10.0, riccati_round_trip},
      {"10", "negative controls", 10.0, negative_controls},
  };

  std::set<std::string> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.seconds_limit;
    const bool pass = r.pass && in_time;
    if (!pass) failed.insert(c.id);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s (<= %g s)", seconds, c.seconds_limit);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << ": " << r.detail << "; " << timing
              << (in_time ? "" : " TOO SLOW") << (!pass && expected.count(c.id) ? "  [expected]" : "") << "\n";
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
  if (failed != expected) {
    for (const auto& id : expected) {
      if (!failed.count(id)) std::cout << "criterion " << id << " was expected to fail but passed\n";
    }
    return 1;
  }
  return 0;
}
