#include "sodelie/riccati/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sodelie/liealgebra/builtin.hpp"

namespace sodelie::ric {

RiccatiCoeffs build_riccati(CoeffExpr a0, CoeffExpr a1, CoeffExpr a2, CoeffExpr a3, double t_begin, double t_end,
                            const ode::RiccatiBuildOptions& options) {
  RiccatiCoeffs c{ode::make_riccati_equation(std::move(a0), std::move(a1), std::move(a2), std::move(a3), t_begin,
                                             t_end, options),
                  t_begin, t_end, CoeffExpr::constant(1), CoeffExpr::constant(0)};
  c.beta = sqrt(c.equation.a3);
  c.beta_rate = c.equation.a3.diff() / (CoeffExpr::constant(2) * c.beta);
  return c;
}

double beta_at(const RiccatiCoeffs& c, double t) {
  const double a3 = c.equation.a3.eval(t);
  if (!(a3 > 0.0)) throw ode::DomainError(t, c.equation.a3.to_string(), "a3(t) <= 0");
  return std::sqrt(a3);
}

State transform_state(const RiccatiCoeffs& c, double t, const State& s) { return {s[0], s[1] / beta_at(c, t)}; }

State inverse_transform_state(const RiccatiCoeffs& c, double t, const State& s) {
  return {s[0], beta_at(c, t) * s[1]};
}

State transformed_rhs(const RiccatiCoeffs& c, double t, const State& s) {
  const auto& e = c.equation;
  const double b = beta_at(c, t);
  const double x = s[0], v = s[1];
  return {b * v, -e.a0.eval(t) / b - b * (3.0 * v * x + x * x * x) - e.a1.eval(t) / b * x -
                     e.a2.eval(t) / b * (v + x * x)};
}

State pushed_forward_rhs(const RiccatiCoeffs& c, double t, const State& s) {
  const double b = beta_at(c, t);
  const State original = inverse_transform_state(c, t, s);
  const double accel = ode::acceleration(c.equation, t, original[0], original[1]);
  return {original[1], accel / b - original[1] * c.beta_rate.eval(t) / (b * b)};
}

State basis_rhs(const RiccatiCoeffs& c, double t, const State& s) {
  static const auto fields = lie::builtin_fields(lie::FieldFamily::Sl3);
  const auto& e = c.equation;
  const double b = beta_at(c, t);
  const std::array<double, 2> point{s[0], s[1]};
  auto at = [&](std::size_t k) {
    const auto v = fields[k - 1].eval(std::span<const double>(point));
    return State{v[0], v[1]};
  };
  const State x1 = at(1), x2 = at(2), x3 = at(3), x4 = at(4), x7 = at(7), x8 = at(8);
  const double c1 = b, c2 = -e.a0.eval(t) / b, c37 = -e.a1.eval(t) / (2.0 * b), c84 = -e.a2.eval(t) / (4.0 * b);
  State out;
  for (std::size_t i = 0; i < 2; ++i) {
    out[i] = c1 * x1[i] + c2 * x2[i] + c37 * (x3[i] + x7[i]) + c84 * (x8[i] - 2.0 * x4[i]);
  }
  return out;
}

namespace {

template <class Rhs>
ConsistencyReport compare(const RiccatiCoeffs& c, std::size_t samples, std::uint64_t seed, Rhs&& candidate) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(c.t_begin, c.t_end);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  ConsistencyReport report;
  report.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = time(rng);
    const double x = box(rng);
    const State s{x, box(rng)};
    const State want = transformed_rhs(c, t, s);
    const State got = candidate(t, s);
    const double d = std::max(std::abs(want[0] - got[0]), std::abs(want[1] - got[1]));
    if (d > report.max_discrepancy || std::isnan(d)) {
      report.max_discrepancy = std::isnan(d) ? INFINITY : d;
      report.worst_time = t;
    }
  }
  return report;
}

}  // namespace

ConsistencyReport transformed_rhs_check(const RiccatiCoeffs& c, std::size_t samples, std::uint64_t seed) {
  return compare(c, samples, seed, [&](double t, const State& s) { return pushed_forward_rhs(c, t, s); });
}

ConsistencyReport span_check(const RiccatiCoeffs& c, std::size_t samples, std::uint64_t seed) {
  return compare(c, samples, seed, [&](double t, const State& s) { return basis_rhs(c, t, s); });
}

RiccatiReconstruction superpose_riccati(const RiccatiCoeffs& c, const sup::SuperposeProblem& problem,
                                        const sup::Guard& guard) {
  RiccatiReconstruction out{sup::reconstruct(problem, guard, [&c](double t) { return beta_at(c, t); }), INFINITY,
                            -INFINITY};
  for (double t : out.reconstruction.trajectory.times()) {
    const double b = beta_at(c, t);
    out.beta_min = std::min(out.beta_min, b);
    out.beta_max = std::max(out.beta_max, b);
  }
  return out;
}

sup::ReconstructionReport make_report(const RiccatiReconstruction& r) {
  sup::ReconstructionReport report = sup::make_report(r.reconstruction);
  report.beta_range = {r.beta_min, r.beta_max};
  return report;
}

}  // namespace sodelie::ric
