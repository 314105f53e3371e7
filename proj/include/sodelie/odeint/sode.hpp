#ifndef SODELIE_ODEINT_SODE_HPP
#define SODELIE_ODEINT_SODE_HPP

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

#include "sodelie/odeint/coeff_expr.hpp"

namespace sodelie::ode {

/// Phase-space point (x, v) with v = dx/dt.
using State = std::array<double, 2>;

/// x'' + 3 x x' + x^3 = f(t).
struct MdpiEquation {
  CoeffExpr f;
};

/// x'' + 3 x x' + x^3 + lambda x = 0.
struct Exam2Equation {
  Rational lambda;
};

/// x'' + 3 x x' + x^3 + f(t)(x' + x^2) + g(t) x + h(t) = 0.
struct GeneralEquation {
  CoeffExpr f;
  CoeffExpr g;
  CoeffExpr h;
};

/// x'' + (b0 + b1 x) x' + a0 + a1 x + a2 x^2 + a3 x^3 = 0 with
/// b0 = a2/sqrt(a3) - a3'/(2 a3) and b1 = 3 sqrt(a3). Build with
/// make_riccati_equation so the constraints are checked.
struct RiccatiEquation {
  CoeffExpr a0;
  CoeffExpr a1;
  CoeffExpr a2;
  CoeffExpr a3;
  CoeffExpr b0;
  CoeffExpr b1;
};

using SodeFamily = std::variant<MdpiEquation, Exam2Equation, GeneralEquation, RiccatiEquation>;

/// A coefficient constraint failed (a3(0) != 1 or a3 <= 0 at a sample).
class ConstraintViolation : public std::invalid_argument {
 public:
  ConstraintViolation(std::string constraint, double t);

  const std::string& constraint() const { return constraint_; }
  double time() const { return t_; }

 private:
  std::string constraint_;
  double t_;
};

struct RiccatiBuildOptions {
  /// Constraint sample count over [t_begin, t_end], endpoints included.
  std::size_t samples = 64;
  /// Builds b0 without the -a3'/(2 a3) term. Only for negative controls.
  bool drop_a3_rate_term = false;
};

/// Derives b0, b1 from a2, a3 and checks a3(0) = 1 (within 1e-12) and
/// a3 > 0 on the sampled interval. Throws ConstraintViolation.
RiccatiEquation make_riccati_equation(CoeffExpr a0, CoeffExpr a1, CoeffExpr a2, CoeffExpr a3, double t_begin,
                                      double t_end, const RiccatiBuildOptions& options = {});

/// v' of the selected family at (t, x, v).
double acceleration(const SodeFamily& family, double t, double x, double v);

/// Short family name: "mdpi", "exam2", "general" or "riccati".
std::string family_name(const SodeFamily& family);

/// First-order system dx/dt = v, dv/dt = acceleration(t, x, v).
class FirstOrderSystem {
 public:
  using Rhs = std::function<State(double, const State&)>;

  static constexpr std::size_t dimension = 2;

  explicit FirstOrderSystem(Rhs rhs) : rhs_(std::move(rhs)) {}

  State operator()(double t, const State& y) const { return rhs_(t, y); }

 private:
  Rhs rhs_;
};

FirstOrderSystem lift_sode(SodeFamily family);

}  // namespace sodelie::ode

#endif
