#ifndef SODELIE_RICCATI_RICCATI_HPP
#define SODELIE_RICCATI_RICCATI_HPP

#include <array>
#include <cstdint>

#include "sodelie/odeint/sode.hpp"
#include "sodelie/superposition/superposition.hpp"

namespace sodelie::ric {

using ode::CoeffExpr;
using ode::State;
using ode::Trajectory;

/// x'' + (b0 + b1 x) x' + a0 + a1 x + a2 x^2 + a3 x^3 = 0 on a working
/// interval, with b0 = a2/sqrt(a3) - a3'/(2 a3) and b1 = 3 sqrt(a3).
struct RiccatiCoeffs {
  ode::RiccatiEquation equation;
  double t_begin = 0.0;
  double t_end = 0.0;
  /// beta = sqrt(a3) and its derivative a3'/(2 sqrt(a3)).
  CoeffExpr beta;
  CoeffExpr beta_rate;

  ode::FirstOrderSystem system() const { return ode::lift_sode(equation); }
};

/// Checks a3(0) = 1 and a3 > 0 at options.samples points of [t_begin, t_end].
/// Throws ode::ConstraintViolation.
RiccatiCoeffs build_riccati(CoeffExpr a0, CoeffExpr a1, CoeffExpr a2, CoeffExpr a3, double t_begin, double t_end,
                            const ode::RiccatiBuildOptions& options = {});

/// sqrt(a3(t)); throws ode::DomainError when a3(t) <= 0.
double beta_at(const RiccatiCoeffs& c, double t);

/// (x, v) -> (x, v / sqrt(a3(t))).
State transform_state(const RiccatiCoeffs& c, double t, const State& s);
/// (x', v') -> (x', sqrt(a3(t)) v').
State inverse_transform_state(const RiccatiCoeffs& c, double t, const State& s);

/// Right-hand side of the transformed system:
///   dx'/dt = sqrt(a3) v'
///   dv'/dt = -a0/sqrt(a3) - sqrt(a3)(3 v' x' + x'^3) - a1/sqrt(a3) x' - a2/sqrt(a3)(v' + x'^2).
State transformed_rhs(const RiccatiCoeffs& c, double t, const State& s);

/// The original right-hand side pushed through transform_state with the
/// chain rule: d/dt (v/beta) = v'/beta - v beta'/beta^2.
State pushed_forward_rhs(const RiccatiCoeffs& c, double t, const State& s);

/// The same field assembled from the sl(3) basis:
/// sqrt(a3) X1 - a0/sqrt(a3) X2 - a1/(2 sqrt(a3)) (X3 + X7) - a2/(4 sqrt(a3)) (X8 - 2 X4).
State basis_rhs(const RiccatiCoeffs& c, double t, const State& s);

struct ConsistencyReport {
  std::size_t samples = 0;
  double max_discrepancy = 0.0;
  double worst_time = 0.0;
};

/// Compares pushed_forward_rhs against transformed_rhs at random (t, x', v')
/// with t in the working interval and x', v' in [-1, 1].
ConsistencyReport transformed_rhs_check(const RiccatiCoeffs& c, std::size_t samples, std::uint64_t seed = 1);
/// Compares basis_rhs against transformed_rhs in the same way.
ConsistencyReport span_check(const RiccatiCoeffs& c, std::size_t samples, std::uint64_t seed = 1);

struct RiccatiReconstruction {
  sup::Reconstruction reconstruction;
  double beta_min = 0.0;
  double beta_max = 0.0;
};

/// Transforms the four inputs, fits (if a target is given) and superposes in
/// transformed coordinates, then maps the result back. With a3 = 1 this is
/// sup::reconstruct on the raw inputs.
RiccatiReconstruction superpose_riccati(const RiccatiCoeffs& c, const sup::SuperposeProblem& problem,
                                        const sup::Guard& guard = {});

sup::ReconstructionReport make_report(const RiccatiReconstruction& r);

}  // namespace sodelie::ric

#endif
