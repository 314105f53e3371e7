#include "sodelie/odeint/coeff_expr.hpp"

#include <cctype>
#include <cmath>

namespace sodelie::ode {

struct CoeffExpr::Node {
  Kind kind = Kind::Constant;
  Rational value;
  double numeric = 0.0;
  int exponent = 0;
  std::vector<CoeffExpr> children;
};

DomainError::DomainError(double t, std::string subexpression, const std::string& reason)
    : std::domain_error(reason + " in '" + subexpression + "' at t=" + std::to_string(t)),
      t_(t),
      subexpression_(std::move(subexpression)) {}

CoeffExpr::CoeffExpr() : CoeffExpr(constant(0)) {}

CoeffExpr CoeffExpr::constant(const Rational& value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = value;
  node->numeric = value.get_d();
  return CoeffExpr(std::move(node));
}

CoeffExpr CoeffExpr::time() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Time;
  return CoeffExpr(std::move(node));
}

CoeffExpr CoeffExpr::make(Kind kind, std::vector<CoeffExpr> children, int exponent) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->exponent = exponent;
  node->children = std::move(children);
  return CoeffExpr(std::move(node));
}

CoeffExpr::Kind CoeffExpr::kind() const { return node_->kind; }
const Rational& CoeffExpr::value() const { return node_->value; }
int CoeffExpr::exponent() const { return node_->exponent; }
const std::vector<CoeffExpr>& CoeffExpr::children() const { return node_->children; }

namespace {

bool is_value(const CoeffExpr& e, long v) { return e.is_constant() && e.value() == v; }

}  // namespace

CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b) {
  if (a.is_constant() && b.is_constant()) return CoeffExpr::constant(a.value() + b.value());
  if (is_value(a, 0)) return b;
  if (is_value(b, 0)) return a;
  return CoeffExpr::make(CoeffExpr::Kind::Add, {a, b});
}

CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b) {
  if (a.is_constant() && b.is_constant()) return CoeffExpr::constant(a.value() - b.value());
  if (is_value(b, 0)) return a;
  if (is_value(a, 0)) return -b;
  return CoeffExpr::make(CoeffExpr::Kind::Sub, {a, b});
}

CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
  if (a.is_constant() && b.is_constant()) return CoeffExpr::constant(a.value() * b.value());
  if (is_value(a, 0) || is_value(b, 0)) return CoeffExpr::constant(0);
  if (is_value(a, 1)) return b;
  if (is_value(b, 1)) return a;
  if (is_value(a, -1)) return -b;
  if (is_value(b, -1)) return -a;
  return CoeffExpr::make(CoeffExpr::Kind::Mul, {a, b});
}

CoeffExpr operator/(const CoeffExpr& a, const CoeffExpr& b) {
  if (a.is_constant() && b.is_constant() && b.value() != 0) return CoeffExpr::constant(a.value() / b.value());
  if (is_value(b, 1)) return a;
  if (is_value(a, 0) && !is_value(b, 0)) return CoeffExpr::constant(0);
  return CoeffExpr::make(CoeffExpr::Kind::Div, {a, b});
}

CoeffExpr operator-(const CoeffExpr& a) {
  if (a.is_constant()) return CoeffExpr::constant(-a.value());
  if (a.kind() == CoeffExpr::Kind::Neg) return a.children()[0];
  return CoeffExpr::make(CoeffExpr::Kind::Neg, {a});
}

CoeffExpr pow(const CoeffExpr& base, int exponent) {
  if (exponent == 0) return CoeffExpr::constant(1);
  if (exponent == 1) return base;
  if (base.is_constant() && (base.value() != 0 || exponent > 0)) {
    Rational r;
    const unsigned n = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(r.get_num_mpz_t(), base.value().get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.value().get_den_mpz_t(), n);
    return CoeffExpr::constant(exponent < 0 ? Rational(1 / r) : r);
  }
  return CoeffExpr::make(CoeffExpr::Kind::Pow, {base}, exponent);
}

CoeffExpr sin(const CoeffExpr& a) {
  if (is_value(a, 0)) return CoeffExpr::constant(0);
  return CoeffExpr::make(CoeffExpr::Kind::Sin, {a});
}

CoeffExpr cos(const CoeffExpr& a) {
  if (is_value(a, 0)) return CoeffExpr::constant(1);
  return CoeffExpr::make(CoeffExpr::Kind::Cos, {a});
}

CoeffExpr exp(const CoeffExpr& a) {
  if (is_value(a, 0)) return CoeffExpr::constant(1);
  return CoeffExpr::make(CoeffExpr::Kind::Exp, {a});
}

CoeffExpr sqrt(const CoeffExpr& a) {
  if (is_value(a, 0) || is_value(a, 1)) return a;
  return CoeffExpr::make(CoeffExpr::Kind::Sqrt, {a});
}

double CoeffExpr::eval(double t) const {
  const auto& c = node_->children;
  double result = 0.0;
  switch (node_->kind) {
    case Kind::Constant:
      return node_->numeric;
    case Kind::Time:
      return t;
    case Kind::Add:
      result = c[0].eval(t) + c[1].eval(t);
      break;
    case Kind::Sub:
      result = c[0].eval(t) - c[1].eval(t);
      break;
    case Kind::Mul:
      result = c[0].eval(t) * c[1].eval(t);
      break;
    case Kind::Div: {
      const double den = c[1].eval(t);
      if (den == 0.0) throw DomainError(t, to_string(), "division by zero");
      result = c[0].eval(t) / den;
      break;
    }
    case Kind::Neg:
      return -c[0].eval(t);
    case Kind::Pow: {
      const double base = c[0].eval(t);
      if (base == 0.0 && node_->exponent < 0) throw DomainError(t, to_string(), "negative power of zero");
      result = std::pow(base, node_->exponent);
      break;
    }
    case Kind::Sin:
      result = std::sin(c[0].eval(t));
      break;
    case Kind::Cos:
      result = std::cos(c[0].eval(t));
      break;
    case Kind::Exp:
      result = std::exp(c[0].eval(t));
      break;
    case Kind::Sqrt: {
      const double arg = c[0].eval(t);
      if (arg < 0.0) throw DomainError(t, to_string(), "square root of a negative number");
      result = std::sqrt(arg);
      break;
    }
  }
  if (!std::isfinite(result)) throw DomainError(t, to_string(), "non-finite value");
  return result;
}

CoeffExpr CoeffExpr::diff() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::Constant:
      return constant(0);
    case Kind::Time:
      return constant(1);
    case Kind::Add:
      return c[0].diff() + c[1].diff();
    case Kind::Sub:
      return c[0].diff() - c[1].diff();
    case Kind::Mul:
      return c[0].diff() * c[1] + c[0] * c[1].diff();
    case Kind::Div:
      return (c[0].diff() * c[1] - c[0] * c[1].diff()) / pow(c[1], 2);
    case Kind::Neg:
      return -c[0].diff();
    case Kind::Pow: {
      const int n = node_->exponent;
      return constant(n) * pow(c[0], n - 1) * c[0].diff();
    }
    case Kind::Sin:
      return cos(c[0]) * c[0].diff();
    case Kind::Cos:
      return -(sin(c[0]) * c[0].diff());
    case Kind::Exp:
      return *this * c[0].diff();
    case Kind::Sqrt:
      return c[0].diff() / (constant(2) * *this);
  }
  return constant(0);
}

namespace {

// Binding strength used to decide parenthesization when printing.
int precedence(const CoeffExpr& e) {
  using K = CoeffExpr::Kind;
  switch (e.kind()) {
    case K::Constant:
      if (e.value() < 0) return 3;
      return e.value().get_den() == 1 ? 5 : 2;
    case K::Add:
    case K::Sub:
      return 1;
    case K::Mul:
    case K::Div:
      return 2;
    case K::Neg:
      return 3;
    case K::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const CoeffExpr& e, int required) {
  std::string s = e.to_string();
  return precedence(e) < required ? "(" + s + ")" : s;
}

}  // namespace

std::string CoeffExpr::to_string() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::Constant:
      return node_->value.get_str();
    case Kind::Time:
      return "t";
    case Kind::Add:
      return wrap(c[0], 1) + " + " + wrap(c[1], 1);
    case Kind::Sub:
      return wrap(c[0], 1) + " - " + wrap(c[1], 2);
    case Kind::Mul:
      return wrap(c[0], 2) + "*" + wrap(c[1], 3);
    case Kind::Div:
      return wrap(c[0], 2) + "/" + wrap(c[1], 3);
    case Kind::Neg:
      return "-" + wrap(c[0], 3);
    case Kind::Pow: {
      const int n = node_->exponent;
      return wrap(c[0], 5) + "^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
    }
    case Kind::Sin:
      return "sin(" + c[0].to_string() + ")";
    case Kind::Cos:
      return "cos(" + c[0].to_string() + ")";
    case Kind::Exp:
      return "exp(" + c[0].to_string() + ")";
    case Kind::Sqrt:
      return "sqrt(" + c[0].to_string() + ")";
  }
  return "?";
}

ParseError::ParseError(std::size_t position, const std::string& message, std::string_view input)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message + "\n  " +
                            std::string(input) + "\n  " + std::string(position, ' ') + "^"),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CoeffExpr parse() {
    CoeffExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message, text_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  CoeffExpr expression() {
    CoeffExpr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  CoeffExpr term() {
    CoeffExpr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = lhs * unary();
      } else if (accept('/')) {
        lhs = lhs / unary();
      } else {
        return lhs;
      }
    }
  }

  CoeffExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  CoeffExpr power() {
    CoeffExpr base = primary();
    if (!accept('^')) return base;
    const bool parenthesized = accept('(');
    const bool negative = accept('-');
    if (!negative) accept('+');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (parenthesized) expect(')');
    return pow(base, negative ? -n : n);
  }

  CoeffExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      CoeffExpr inner = expression();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") return CoeffExpr::time();
      CoeffExpr (*fn)(const CoeffExpr&) = nullptr;
      if (name == "sin") fn = &sin;
      if (name == "cos") fn = &cos;
      if (name == "exp") fn = &exp;
      if (name == "sqrt") fn = &sqrt;
      if (fn == nullptr) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      expect('(');
      CoeffExpr arg = expression();
      expect(')');
      return fn(arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  CoeffExpr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    try {
      return CoeffExpr::constant(parse_rational(text_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CoeffExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace sodelie::ode
