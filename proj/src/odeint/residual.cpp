#include "sodelie/odeint/residual.hpp"

#include <algorithm>
#include <cmath>

namespace sodelie::ode {

double residual(const SodeFamily& family, const Trajectory& trajectory) {
  const std::size_t n = trajectory.size();
  if (n < 7) throw GridTooCoarse("residual needs at least 7 grid points, got " + std::to_string(n));
  const auto& t = trajectory.times();
  const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((t[i] - t[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw std::invalid_argument("residual needs a uniform grid");
    }
  }

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double xm2 = trajectory.x(i - 2), xm1 = trajectory.x(i - 1), x0 = trajectory.x(i);
    const double xp1 = trajectory.x(i + 1), xp2 = trajectory.x(i + 2);
    const double dx = (xm2 - 8.0 * xm1 + 8.0 * xp1 - xp2) / (12.0 * h);
    const double ddx = (-xm2 + 16.0 * xm1 - 30.0 * x0 + 16.0 * xp1 - xp2) / (12.0 * h * h);
    worst = std::max(worst, std::abs(ddx - acceleration(family, t[i], x0, dx)));
  }
  return worst;
}

}  // namespace sodelie::ode
