#ifndef SODELIE_SUPERPOSITION_SUPERPOSITION_HPP
#define SODELIE_SUPERPOSITION_SUPERPOSITION_HPP

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "sodelie/odeint/trajectory.hpp"
#include "sodelie/polyfield/rational_function.hpp"

namespace sodelie::sup {

using ode::State;
using ode::Trajectory;

/// Slots 1..4: the particular solutions, in user order.
using Tuple4 = std::array<State, 4>;
/// Slot 0 is the target, slots 1..4 the particular solutions.
using Tuple5 = std::array<State, 5>;

/// A guarded quantity fell outside the generic set.
class Degenerate : public std::runtime_error {
 public:
  Degenerate(std::string which, std::optional<double> t = std::nullopt);
  const std::string& which() const { return which_; }
  const std::optional<double>& time() const { return t_; }
  Degenerate at(double t) const { return Degenerate(which_, t); }

 private:
  std::string which_;
  std::optional<double> t_;
};

struct Guard {
  /// A guarded quantity q is degenerate when |q| <= eps_gen * scale, where
  /// scale is the largest magnitude among the F values or summands that make
  /// up the guarded expression.
  double eps_gen = 1e-10;
  /// Check F123 F124 F134 F234 != 0 before using a 4-slot tuple.
  bool genericity = true;
};

struct Constants {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  bool operator==(const Constants&) const = default;
};

/// v_a(x_c - x_b) + v_b(x_a - x_c) + v_c(x_b - x_a) + (x_a - x_b)(x_b - x_c)(x_c - x_a).
///
/// Evaluated on a canonical ordering of the three states and multiplied by the
/// permutation sign, so all slot permutations agree exactly up to sign.
double f_abc(const State& a, const State& b, const State& c);

/// G_abcd = x_a((v_d - v_c)x_b + (v_b - v_d)x_c + (x_b - x_c)x_b x_c + (x_c - x_b)x_a x_d)
///        + x_d((v_c - v_a)x_b + (v_a - v_b)x_c + (x_c - x_b)x_b x_c + (x_b - x_c)x_a x_d).
double g_abcd(const State& a, const State& b, const State& c, const State& d);

/// Throws Degenerate("genericity: F_abc") when one factor of
/// F123 F124 F134 F234 vanishes relative to the largest of the four.
void check_generic(const Tuple4& q, const Guard& guard = {});

/// (Lambda1, Lambda2) = (F431 F210 / (F421 F310), F431 F420 / (F421 F430)).
Constants lambda_integrals(const Tuple5& p, const Guard& guard = {});

/// v0 from x0, slots 1..4 and Lambda1 (inversion of Lambda1 for v0).
double recover_v0(const Tuple4& q, double x0, double lambda1, const Guard& guard = {});

/// Numerator and denominator of the superposition formula.
struct SuperposeTerms {
  double numerator = 0.0;
  double denominator = 0.0;
  /// Largest summand magnitude of the denominator.
  double denominator_scale = 0.0;
};
SuperposeTerms superpose_terms(const Tuple4& q, const Constants& c);

/// x0 = (x2 F431 - G3124 l2 - G2134 l1 + x3 F421 l1 l2)
///    / (F431 + (F124 - F324) l1 + (F412 - F312) l2 + l1 l2 F421).
double superpose_value(const Tuple4& q, const Constants& c, const Guard& guard = {});

/// lambda_integrals of the tuple (target, q1, ..., q4).
Constants fit_constants(const State& target, const Tuple4& q, const Guard& guard = {});

/// Scale applied to the velocity row before the superposition formula:
/// v' = v / beta(t), and the reconstructed velocity is beta(t) v0'. An empty
/// function means beta = 1.
using VelocityScale = std::function<double(double)>;

struct SuperposeProblem {
  std::array<Trajectory, 4> particular;
  /// Either fixed constants or the target state (x, dx/dt) at the fit time.
  std::variant<Constants, State> constants;
  /// Grid index where a target state is fitted.
  std::size_t fit_index = 0;
};

struct Reconstruction {
  Trajectory trajectory;
  Constants constants;
  /// Smallest |denominator| of the superposition formula over the grid.
  double min_denominator = 0.0;
  double fit_time = 0.0;
};

/// Applies the formula at every grid time with fixed constants; the velocity
/// row comes from recover_v0. Throws Degenerate pinpointing the first failing
/// grid time and std::invalid_argument when the grids differ.
Reconstruction reconstruct(const SuperposeProblem& problem, const Guard& guard = {},
                           const VelocityScale& beta = {});

/// Largest drift of Lambda1, Lambda2 along five trajectories on one grid,
/// relative to the values at the first grid time (absolute where that value
/// is zero).
double lambda_drift(const std::array<Trajectory, 5>& solutions, const Guard& guard = {},
                    const VelocityScale& beta = {});

struct ReconstructionReport {
  Constants constants;
  double fit_time = 0.0;
  double min_denominator = 0.0;
  std::size_t grid_points = 0;
  std::optional<double> max_error;
  std::optional<double> residual;
  std::optional<double> lambda_drift;
  /// (min, max) of beta(t) over the window, for time-dependent rules.
  std::optional<std::pair<double, double>> beta_range;
};

ReconstructionReport make_report(const Reconstruction& r);
nlohmann::json to_json(const ReconstructionReport& report);

/// Largest |x - x_ref| over a shared grid.
double max_abs_error(const Trajectory& a, const Trajectory& reference);

/// Exact first integrals on the prolonged coordinates (x0..x4, v0..v4).
struct ExactIntegrals {
  Coords coords;
  RationalFunction lambda1;
  RationalFunction lambda2;
};
Polynomial f_polynomial(const Coords& prolonged, std::size_t a, std::size_t b, std::size_t c);
Polynomial g_polynomial(const Coords& prolonged, std::size_t a, std::size_t b, std::size_t c, std::size_t d);
ExactIntegrals exact_integrals();

}  // namespace sodelie::sup

#endif
