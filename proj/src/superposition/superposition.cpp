#include "sodelie/superposition/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sodelie/liealgebra/builtin.hpp"

namespace sodelie::sup {

namespace {

std::string degenerate_message(const std::string& which, const std::optional<double>& t) {
  std::ostringstream msg;
  msg << "degenerate configuration";
  if (t) msg << " at t=" << *t;
  msg << ": " << which;
  return msg.str();
}

void require(double value, double scale, const Guard& guard, const char* which) {
  if (!(std::abs(value) > guard.eps_gen * scale)) throw Degenerate(which);
}

double max_abs(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double raw_f(const State& a, const State& b, const State& c) {
  const double xa = a[0], xb = b[0], xc = c[0];
  return a[1] * (xc - xb) + b[1] * (xa - xc) + c[1] * (xb - xa) + (xa - xb) * (xb - xc) * (xc - xa);
}

Tuple4 scaled(const Tuple4& q, double beta) {
  Tuple4 out = q;
  for (auto& s : out) s[1] /= beta;
  return out;
}

}  // namespace

Degenerate::Degenerate(std::string which, std::optional<double> t)
    : std::runtime_error(degenerate_message(which, t)), which_(std::move(which)), t_(t) {}

double f_abc(const State& a, const State& b, const State& c) {
  std::array<const State*, 3> s{&a, &b, &c};
  int sign = 1;
  // Three-element sort by (x, v); each swap flips the sign.
  auto order = [&](std::size_t i, std::size_t j) {
    if (*s[j] < *s[i]) {
      std::swap(s[i], s[j]);
      sign = -sign;
    }
  };
  order(0, 1);
  order(1, 2);
  order(0, 1);
  if (*s[0] == *s[1] || *s[1] == *s[2]) return 0.0;
  return sign * raw_f(*s[0], *s[1], *s[2]);
}

double g_abcd(const State& a, const State& b, const State& c, const State& d) {
  const double xa = a[0], xb = b[0], xc = c[0], xd = d[0];
  const double va = a[1], vb = b[1], vc = c[1], vd = d[1];
  return xa * ((vd - vc) * xb + (vb - vd) * xc + (xb - xc) * xb * xc + (xc - xb) * xa * xd) +
         xd * ((vc - va) * xb + (va - vb) * xc + (xc - xb) * xb * xc + (xb - xc) * xa * xd);
}

void check_generic(const Tuple4& q, const Guard& guard) {
  const double f123 = f_abc(q[0], q[1], q[2]);
  const double f124 = f_abc(q[0], q[1], q[3]);
  const double f134 = f_abc(q[0], q[2], q[3]);
  const double f234 = f_abc(q[1], q[2], q[3]);
  const double scale = max_abs({f123, f124, f134, f234});
  require(f123, scale, guard, "genericity: F123");
  require(f124, scale, guard, "genericity: F124");
  require(f134, scale, guard, "genericity: F134");
  require(f234, scale, guard, "genericity: F234");
}

Constants lambda_integrals(const Tuple5& p, const Guard& guard) {
  const double f431 = f_abc(p[4], p[3], p[1]);
  const double f210 = f_abc(p[2], p[1], p[0]);
  const double f421 = f_abc(p[4], p[2], p[1]);
  const double f310 = f_abc(p[3], p[1], p[0]);
  const double f420 = f_abc(p[4], p[2], p[0]);
  const double f430 = f_abc(p[4], p[3], p[0]);
  const double scale = max_abs({f431, f210, f421, f310, f420, f430});
  require(f421, scale, guard, "Lambda denominator F421");
  require(f310, scale, guard, "Lambda1 denominator F310");
  require(f430, scale, guard, "Lambda2 denominator F430");
  return {f431 * f210 / (f421 * f310), f431 * f420 / (f421 * f430)};
}

double recover_v0(const Tuple4& q, double x0, double lambda1, const Guard& guard) {
  const double x1 = q[0][0], x2 = q[1][0], x3 = q[2][0];
  const double v1 = q[0][1], v2 = q[1][1], v3 = q[2][1];
  const double f431 = f_abc(q[3], q[2], q[0]);
  const double f421 = f_abc(q[3], q[1], q[0]);
  const double d1 = (x2 - x1) * f431;
  const double d2 = (x1 - x3) * f421 * lambda1;
  const double den = d1 + d2;
  require(den, max_abs({d1, d2}), guard, "v0 denominator");
  const double n1 = (v1 * (x2 - x0) + v2 * (x0 - x1) + (x1 - x0) * (x0 - x2) * (x2 - x1)) * f431;
  const double n2 = (v3 * (x1 - x0) + v1 * (x0 - x3) + (x0 - x1) * (x1 - x3) * (x3 - x0)) * f421 * lambda1;
  return n1 / den + n2 / den;
}

SuperposeTerms superpose_terms(const Tuple4& q, const Constants& c) {
  const State &q1 = q[0], &q2 = q[1], &q3 = q[2], &q4 = q[3];
  const double l1 = c.lambda1, l2 = c.lambda2;
  const double f431 = f_abc(q4, q3, q1);
  const double f421 = f_abc(q4, q2, q1);
  const double g3124 = g_abcd(q3, q1, q2, q4);
  const double g2134 = g_abcd(q2, q1, q3, q4);
  const double t0 = f431;
  const double t1 = (f_abc(q1, q2, q4) - f_abc(q3, q2, q4)) * l1;
  const double t2 = (f_abc(q4, q1, q2) - f_abc(q3, q1, q2)) * l2;
  const double t3 = l1 * l2 * f421;
  SuperposeTerms out;
  out.numerator = q2[0] * f431 - g3124 * l2 - g2134 * l1 + q3[0] * f421 * l1 * l2;
  out.denominator = t0 + t1 + t2 + t3;
  out.denominator_scale = max_abs({t0, t1, t2, t3});
  return out;
}

double superpose_value(const Tuple4& q, const Constants& c, const Guard& guard) {
  if (guard.genericity) check_generic(q, guard);
  const SuperposeTerms terms = superpose_terms(q, c);
  require(terms.denominator, terms.denominator_scale, guard, "superposition denominator");
  return terms.numerator / terms.denominator;
}

Constants fit_constants(const State& target, const Tuple4& q, const Guard& guard) {
  if (guard.genericity) check_generic(q, guard);
  return lambda_integrals({target, q[0], q[1], q[2], q[3]}, guard);
}

Reconstruction reconstruct(const SuperposeProblem& problem, const Guard& guard, const VelocityScale& beta) {
  const auto& grid = problem.particular[0].times();
  for (const auto& traj : problem.particular) {
    if (traj.times() != grid) throw std::invalid_argument("particular solutions must share one time grid");
  }
  auto scale_at = [&](double t) { return beta ? beta(t) : 1.0; };
  auto tuple_at = [&](std::size_t i) {
    Tuple4 q;
    for (std::size_t a = 0; a < 4; ++a) q[a] = problem.particular[a].state(i);
    return scaled(q, scale_at(grid[i]));
  };

  Reconstruction out{Trajectory({grid.front()}, {State{0.0, 0.0}}), {}, INFINITY, grid.front()};
  if (const auto* fixed = std::get_if<Constants>(&problem.constants)) {
    out.constants = *fixed;
  } else {
    const std::size_t k = problem.fit_index;
    if (k >= grid.size()) throw std::invalid_argument("fit index outside the grid");
    State target = std::get<State>(problem.constants);
    target[1] /= scale_at(grid[k]);
    out.fit_time = grid[k];
    try {
      out.constants = fit_constants(target, tuple_at(k), guard);
    } catch (const Degenerate& e) {
      throw e.at(grid[k]);
    }
  }

  std::vector<State> states;
  states.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      const Tuple4 q = tuple_at(i);
      const double x0 = superpose_value(q, out.constants, guard);
      out.min_denominator = std::min(out.min_denominator, std::abs(superpose_terms(q, out.constants).denominator));
      const double v0 = recover_v0(q, x0, out.constants.lambda1, guard);
      states.push_back({x0, scale_at(grid[i]) * v0});
    } catch (const Degenerate& e) {
      throw e.at(grid[i]);
    }
  }
  ode::TrajectoryMeta meta;
  meta.tolerance = problem.particular[0].meta().tolerance;
  meta.status = "reconstructed";
  out.trajectory = Trajectory(grid, std::move(states), std::move(meta));
  return out;
}

double lambda_drift(const std::array<Trajectory, 5>& solutions, const Guard& guard, const VelocityScale& beta) {
  const auto& grid = solutions[0].times();
  for (const auto& traj : solutions) {
    if (traj.times() != grid) throw std::invalid_argument("solutions must share one time grid");
  }
  auto at = [&](std::size_t i) {
    const double b = beta ? beta(grid[i]) : 1.0;
    Tuple5 p;
    for (std::size_t a = 0; a < 5; ++a) p[a] = {solutions[a].x(i), solutions[a].v(i) / b};
    try {
      return lambda_integrals(p, guard);
    } catch (const Degenerate& e) {
      throw e.at(grid[i]);
    }
  };
  const Constants start = at(0);
  auto rel = [](double value, double ref) {
    const double d = std::abs(value - ref);
    return ref == 0.0 ? d : d / std::abs(ref);
  };
  double worst = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const Constants c = at(i);
    worst = std::max({worst, rel(c.lambda1, start.lambda1), rel(c.lambda2, start.lambda2)});
  }
  return worst;
}

ReconstructionReport make_report(const Reconstruction& r) {
  ReconstructionReport report;
  report.constants = r.constants;
  report.fit_time = r.fit_time;
  report.min_denominator = r.min_denominator;
  report.grid_points = r.trajectory.size();
  return report;
}

nlohmann::json to_json(const ReconstructionReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json out = {
      {"constants", {{"lambda1", report.constants.lambda1}, {"lambda2", report.constants.lambda2}}},
      {"fit_time", report.fit_time},
      {"min_denominator", report.min_denominator},
      {"grid_points", report.grid_points},
      {"max_error", opt(report.max_error)},
      {"residual", opt(report.residual)},
      {"lambda_drift", opt(report.lambda_drift)},
  };
  if (report.beta_range) out["beta_range"] = {{"min", report.beta_range->first}, {"max", report.beta_range->second}};
  return out;
}

double max_abs_error(const Trajectory& a, const Trajectory& reference) {
  if (a.times() != reference.times()) throw std::invalid_argument("trajectories must share one time grid");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.x(i) - reference.x(i)));
  return worst;
}

Polynomial f_polynomial(const Coords& prolonged, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t m = prolonged.size() / 2;
  auto x = [&](std::size_t i) { return Polynomial::variable(prolonged, prolonged.name(i)); };
  auto v = [&](std::size_t i) { return Polynomial::variable(prolonged, prolonged.name(m + i)); };
  return v(a) * (x(c) - x(b)) + v(b) * (x(a) - x(c)) + v(c) * (x(b) - x(a)) +
         (x(a) - x(b)) * (x(b) - x(c)) * (x(c) - x(a));
}

Polynomial g_polynomial(const Coords& prolonged, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t m = prolonged.size() / 2;
  auto x = [&](std::size_t i) { return Polynomial::variable(prolonged, prolonged.name(i)); };
  auto v = [&](std::size_t i) { return Polynomial::variable(prolonged, prolonged.name(m + i)); };
  const Polynomial xa = x(a), xb = x(b), xc = x(c), xd = x(d);
  return xa * ((v(d) - v(c)) * xb + (v(b) - v(d)) * xc + (xb - xc) * xb * xc + (xc - xb) * xa * xd) +
         xd * ((v(c) - v(a)) * xb + (v(a) - v(b)) * xc + (xc - xb) * xb * xc + (xb - xc) * xa * xd);
}

ExactIntegrals exact_integrals() {
  const Coords coords = prolonged_coords(lie::phase_coords(), 5);
  auto f = [&](std::size_t a, std::size_t b, std::size_t c) { return f_polynomial(coords, a, b, c); };
  return {coords, RationalFunction(f(4, 3, 1) * f(2, 1, 0), f(4, 2, 1) * f(3, 1, 0)),
          RationalFunction(f(4, 3, 1) * f(4, 2, 0), f(4, 2, 1) * f(4, 3, 0))};
}

}  // namespace sodelie::sup
