#include "sodelie/odeint/sode.hpp"

#include <cmath>
#include <sstream>

namespace sodelie::ode {

ConstraintViolation::ConstraintViolation(std::string constraint, double t)
    : std::invalid_argument([&] {
        std::ostringstream out;
        out << "constraint violated: " << constraint << " (t=" << t << ")";
        return out.str();
      }()),
      constraint_(std::move(constraint)),
      t_(t) {}

RiccatiEquation make_riccati_equation(CoeffExpr a0, CoeffExpr a1, CoeffExpr a2, CoeffExpr a3, double t_begin,
                                      double t_end, const RiccatiBuildOptions& options) {
  if (!(t_end > t_begin)) throw std::invalid_argument("riccati: empty interval");
  if (options.samples < 2) throw std::invalid_argument("riccati: need at least two samples");

  auto eval_checked = [](const CoeffExpr& e, double t, const char* what) {
    try {
      return e.eval(t);
    } catch (const DomainError& err) {
      throw ConstraintViolation(std::string(what) + " undefined: " + err.what(), t);
    }
  };

  const double at_zero = eval_checked(a3, 0.0, "a3(0)");
  if (std::abs(at_zero - 1.0) > 1e-12) throw ConstraintViolation("a3(0) = 1", 0.0);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const double t = t_begin + (t_end - t_begin) * static_cast<double>(i) / static_cast<double>(options.samples - 1);
    if (!(eval_checked(a3, t, "a3") > 0.0)) throw ConstraintViolation("a3(t) > 0", t);
  }

  const CoeffExpr root = sqrt(a3);
  CoeffExpr b0 = a2 / root;
  if (!options.drop_a3_rate_term) b0 = b0 - a3.diff() / (CoeffExpr::constant(2) * a3);
  CoeffExpr b1 = CoeffExpr::constant(3) * root;
  return {std::move(a0), std::move(a1), std::move(a2), std::move(a3), std::move(b0), std::move(b1)};
}

namespace {

struct Accel {
  double t;
  double x;
  double v;

  double operator()(const MdpiEquation& e) const { return -3.0 * x * v - x * x * x + e.f.eval(t); }

  double operator()(const Exam2Equation& e) const { return -3.0 * x * v - x * x * x - e.lambda.get_d() * x; }

  double operator()(const GeneralEquation& e) const {
    return -3.0 * x * v - x * x * x - e.f.eval(t) * (v + x * x) - e.g.eval(t) * x - e.h.eval(t);
  }

  double operator()(const RiccatiEquation& e) const {
    return -(e.b0.eval(t) + e.b1.eval(t) * x) * v - e.a0.eval(t) - e.a1.eval(t) * x - e.a2.eval(t) * x * x -
           e.a3.eval(t) * x * x * x;
  }
};

struct Name {
  std::string operator()(const MdpiEquation&) const { return "mdpi"; }
  std::string operator()(const Exam2Equation&) const { return "exam2"; }
  std::string operator()(const GeneralEquation&) const { return "general"; }
  std::string operator()(const RiccatiEquation&) const { return "riccati"; }
};

}  // namespace

double acceleration(const SodeFamily& family, double t, double x, double v) {
  return std::visit(Accel{t, x, v}, family);
}

std::string family_name(const SodeFamily& family) { return std::visit(Name{}, family); }

FirstOrderSystem lift_sode(SodeFamily family) {
  return FirstOrderSystem([family = std::move(family)](double t, const State& y) {
    return State{y[1], acceleration(family, t, y[0], y[1])};
  });
}

}  // namespace sodelie::ode
