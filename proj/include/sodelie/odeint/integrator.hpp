#ifndef SODELIE_ODEINT_INTEGRATOR_HPP
#define SODELIE_ODEINT_INTEGRATOR_HPP

#include <span>
#include <stdexcept>

#include "sodelie/odeint/sode.hpp"
#include "sodelie/odeint/trajectory.hpp"

namespace sodelie::ode {

struct IntegratorOptions {
  /// Absolute and relative local error tolerance (atol = rtol = tol).
  double tolerance = 1e-10;
  /// Steps below step_underflow * |interval| are treated as a blow-up.
  double step_underflow = 1e-14;
  /// States with max(|x|, |v|) above this are treated as a blow-up.
  double blowup_threshold = 1e12;
  std::size_t max_steps = 10'000'000;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// The solution left every finite bound near time().
class BlowUp : public IntegrationError {
 public:
  using IntegrationError::IntegrationError;
};

/// The right-hand side returned a non-finite value at an accepted state.
class NonFinite : public IntegrationError {
 public:
  using IntegrationError::IntegrationError;
};

/// Dormand-Prince 5(4) with PI step-size control. Every step that would pass
/// a grid time is clipped to land on it exactly, so the returned states are
/// integrator solutions (no interpolation). grid[0] must equal t0 and the
/// grid must be strictly increasing.
///
/// Throws BlowUp, NonFinite, or DomainError from coefficient evaluation.
Trajectory integrate(const FirstOrderSystem& system, const State& initial, double t0, std::span<const double> grid,
                     const IntegratorOptions& options = {});

}  // namespace sodelie::ode

#endif
