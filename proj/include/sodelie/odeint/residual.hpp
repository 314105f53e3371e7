#ifndef SODELIE_ODEINT_RESIDUAL_HPP
#define SODELIE_ODEINT_RESIDUAL_HPP

#include <stdexcept>

#include "sodelie/odeint/sode.hpp"
#include "sodelie/odeint/trajectory.hpp"

namespace sodelie::ode {

class GridTooCoarse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Independent solution check using only the x-row of the trajectory.
///
/// x' and x'' are estimated with 5-point central differences on a uniform
/// grid; returns max |x''_fd - acceleration(t, x, x'_fd)| over the points
/// where the full stencil fits. Throws GridTooCoarse for fewer than seven
/// samples and std::invalid_argument for non-uniform grids.
double residual(const SodeFamily& family, const Trajectory& trajectory);

}  // namespace sodelie::ode

#endif
