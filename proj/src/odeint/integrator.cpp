#include "sodelie/odeint/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sodelie::ode {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
// Difference between the 5th-order weights and the embedded 4th-order ones.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// PI controller constants (Hairer, Norsett & Wanner, Solving ODEs I, II.4).
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 10.0;

bool finite(const State& s) { return std::isfinite(s[0]) && std::isfinite(s[1]); }

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (std::size_t i = 0; i < 2; ++i) {
    double sum = 0.0;
    for (const auto& [coef, k] : terms) sum += coef * (*k)[i];
    out[i] += h * sum;
  }
  return out;
}

double error_norm(const State& err, const State& y0, const State& y1, double tol) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const double scale = tol + tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = err[i] / scale;
    sum += r * r;
  }
  return std::sqrt(sum / 2.0);
}

// Starting step size from the local Lipschitz estimate (Hairer's hinit).
double initial_step(const FirstOrderSystem& f, double t, const State& y, const State& f0, double tol, double hmax) {
  auto norm = [tol, &y](const State& v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double r = v[i] / (tol + tol * std::abs(y[i]));
      sum += r * r;
    }
    return std::sqrt(sum / 2.0);
  };
  const double d0 = norm(y);
  const double d1 = norm(f0);
  double h = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min(h, hmax);
  const State y1 = axpy(y, h, {{1.0, &f0}});
  const State f1 = f(t + h, y1);
  State diff{f1[0] - f0[0], f1[1] - f0[1]};
  const double d2 = finite(f1) ? norm(diff) / h : 1e300;
  const double dmax = std::max(d1, d2);
  const double h1 = dmax <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / dmax, 0.2);
  return std::min({100.0 * h, h1, hmax});
}

}  // namespace

Trajectory integrate(const FirstOrderSystem& f, const State& initial, double t0, std::span<const double> grid,
                     const IntegratorOptions& options) {
  if (grid.empty()) throw std::invalid_argument("integrate: empty grid");
  if (grid.front() != t0) throw std::invalid_argument("integrate: grid must start at t0");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("integrate: grid must be strictly increasing");
  }
  if (!finite(initial)) throw NonFinite("integrate: non-finite initial state", t0);

  const double tol = options.tolerance;
  const double span = grid.back() - t0;
  const double h_min = options.step_underflow * std::max(span, 1e-300);

  TrajectoryMeta meta;
  meta.tolerance = tol;
  std::vector<double> times{t0};
  std::vector<State> states{initial};
  times.reserve(grid.size());
  states.reserve(grid.size());

  double t = t0;
  State y = initial;
  State k1 = f(t, y);
  if (!finite(k1)) throw NonFinite("right-hand side is non-finite", t);
  double h = grid.size() > 1 ? initial_step(f, t, y, k1, tol, span) : 0.0;
  double fac_old = 1e-4;
  bool last_rejected = false;

  auto blow_up = [&](const std::string& why) {
    std::ostringstream msg;
    msg << "solution blows up near t=" << t << " (" << why << ")";
    throw BlowUp(msg.str(), t);
  };

  for (std::size_t next = 1; next < grid.size(); ++next) {
    const double target = grid[next];
    while (t < target) {
      if (meta.accepted_steps + meta.rejected_steps >= options.max_steps) blow_up("step limit reached");
      bool lands = false;
      double step = h;
      if (t + step >= target || target - (t + step) <= 1e-12 * std::abs(target - t)) {
        step = target - t;
        lands = true;
      }

      const State k2 = f(t + c2 * step, axpy(y, step, {{a21, &k1}}));
      const State k3 = f(t + c3 * step, axpy(y, step, {{a31, &k1}, {a32, &k2}}));
      const State k4 = f(t + c4 * step, axpy(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
      const State k5 = f(t + c5 * step, axpy(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
      const State y6 = axpy(y, step, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
      const State k6 = f(t + step, y6);
      const State y_new = axpy(y, step, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
      const double t_new = lands ? target : t + step;
      const State k7 = f(t_new, y_new);

      double err = 1e300;
      if (finite(k2) && finite(k3) && finite(k4) && finite(k5) && finite(k6) && finite(k7) && finite(y_new)) {
        State e;
        for (std::size_t i = 0; i < 2; ++i) {
          e[i] = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        }
        err = error_norm(e, y, y_new, tol);
      }

      const double fac11 = std::pow(err, kExpo);
      if (err <= 1.0) {
        double fac = fac11 / std::pow(fac_old, kBeta);
        fac = std::clamp(fac / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
        double h_new = step / fac;
        if (last_rejected) h_new = std::min(h_new, step);
        fac_old = std::max(err, 1e-4);
        last_rejected = false;
        ++meta.accepted_steps;
        t = t_new;
        y = y_new;
        k1 = k7;
        if (std::max(std::abs(y[0]), std::abs(y[1])) > options.blowup_threshold) blow_up("state exceeds threshold");
        // A clipped step says little about the natural step size; keep h.
        if (!lands || h_new > h) h = h_new;
      } else {
        h = step / std::min(1.0 / kFacMin, fac11 / kSafety);
        last_rejected = true;
        ++meta.rejected_steps;
        if (h < h_min) blow_up("step size underflow");
      }
    }
    times.push_back(t);
    states.push_back(y);
  }
  return Trajectory(std::move(times), std::move(states), std::move(meta));
}

}  // namespace sodelie::ode
