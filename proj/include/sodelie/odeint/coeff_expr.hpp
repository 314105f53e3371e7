#ifndef SODELIE_ODEINT_COEFF_EXPR_HPP
#define SODELIE_ODEINT_COEFF_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sodelie/polyfield/rational.hpp"

namespace sodelie::ode {

/// Raised when an expression is evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  DomainError(double t, std::string subexpression, const std::string& reason);

  double time() const { return t_; }
  const std::string& subexpression() const { return subexpression_; }

 private:
  double t_;
  std::string subexpression_;
};

/// Immutable expression tree in the time variable t.
///
/// Node set: rational constant, t, + - * /, unary minus, integer power,
/// sin, cos, exp, sqrt. Builders fold constants and drop neutral elements,
/// so derivative trees stay small. Copies share structure.
class CoeffExpr {
 public:
  enum class Kind { Constant, Time, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Exp, Sqrt };

  /// The constant 0.
  CoeffExpr();
  static CoeffExpr constant(const Rational& value);
  static CoeffExpr time();

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::Constant; }
  /// Precondition: is_constant().
  const Rational& value() const;
  /// Precondition: kind() == Kind::Pow.
  int exponent() const;
  const std::vector<CoeffExpr>& children() const;

  /// Throws DomainError on division by zero, sqrt of a negative number or a
  /// non-finite intermediate result.
  double eval(double t) const;

  /// Symbolic d/dt.
  CoeffExpr diff() const;

  /// Infix text accepted by parse_expr.
  std::string to_string() const;

  friend CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator/(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a);
  friend CoeffExpr pow(const CoeffExpr& base, int exponent);
  friend CoeffExpr sin(const CoeffExpr& a);
  friend CoeffExpr cos(const CoeffExpr& a);
  friend CoeffExpr exp(const CoeffExpr& a);
  friend CoeffExpr sqrt(const CoeffExpr& a);

  struct Node;

 private:
  explicit CoeffExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static CoeffExpr make(Kind kind, std::vector<CoeffExpr> children, int exponent = 0);

  std::shared_ptr<const Node> node_;
};

inline double expr_eval(const CoeffExpr& e, double t) { return e.eval(t); }
inline CoeffExpr expr_diff(const CoeffExpr& e) { return e.diff(); }

/// Raised by parse_expr; position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message, std::string_view input);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses infix text: numbers (integers, decimals, p/q via division), t,
/// + - * /, unary minus, ^ with an integer exponent, and the functions sin,
/// cos, exp, sqrt. Whitespace is ignored.
CoeffExpr parse_expr(std::string_view text);

}  // namespace sodelie::ode

#endif
