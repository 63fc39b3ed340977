#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "parageo/errors.hpp"

namespace parageo {

// Carrier hooks. Plain doubles are the trivial carrier; jet types overload
// these in their own header and are picked up through ADL.
inline double scalar_part(double v) { return v; }
inline double lift_like(double v, double) { return v; }

namespace expr {

enum class UnaryOp { Neg, Cosh, Sinh, Cos, Sin, Exp, Ln, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree. Nodes are shared and never mutated after
/// construction, so expressions may be evaluated concurrently.
class Expr {
public:
  enum class Kind { Number, Symbol, Unary, Binary, Power };

  static ExprPtr number(double value);
  static ExprPtr symbol(std::string name);
  static ExprPtr unary(UnaryOp op, ExprPtr operand);
  static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr power(ExprPtr base, int exponent);

  Kind kind() const { return kind_; }
  double number_value() const { return number_; }
  const std::string& symbol_name() const { return symbol_; }
  UnaryOp unary_op() const { return unary_; }
  BinaryOp binary_op() const { return binary_; }
  int exponent() const { return exponent_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }

private:
  Expr() = default;

  Kind kind_ = Kind::Number;
  double number_ = 0.0;
  std::string symbol_;
  UnaryOp unary_ = UnaryOp::Neg;
  BinaryOp binary_ = BinaryOp::Add;
  int exponent_ = 0;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

/// Recursive-descent parser for the scenario expression grammar.
/// Precedence: ^  >  unary -  >  * /  >  + -.  Function application
/// requires parentheses; exponents are integer literals.
ExprPtr parse(std::string_view text);

std::string to_string(const Expr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

std::set<std::string> free_vars(const Expr& e);
inline std::set<std::string> free_vars(const ExprPtr& e) {
  return free_vars(*e);
}

bool structurally_equal(const Expr& a, const Expr& b);

// ---------------------------------------------------------------------------
// Evaluation, generic over the numeric carrier.

namespace detail {

template <class C>
C int_pow(const C& base, int exponent, const C& one) {
  if (exponent < 0 && scalar_part(base) == 0.0)
    throw DomainError("zero base raised to a negative exponent");
  C result = one;
  C acc = base;
  unsigned n = exponent < 0 ? static_cast<unsigned>(-(long long)exponent)
                            : static_cast<unsigned>(exponent);
  while (n != 0) {
    if (n & 1u) result = result * acc;
    n >>= 1u;
    if (n != 0) acc = acc * acc;
  }
  if (exponent < 0) {
    if (scalar_part(result) == 0.0)
      throw DomainError("division by zero in negative power");
    result = one / result;
  }
  return result;
}

}  // namespace detail

/// lookup(name) returns a pointer to the binding or nullptr (unbound);
/// lift(double) injects literals into the carrier.
template <class C, class Lookup, class Lift>
C evaluate(const Expr& e, Lookup&& lookup, Lift&& lift) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  using parageo::scalar_part;

  switch (e.kind()) {
    case Expr::Kind::Number:
      return lift(e.number_value());
    case Expr::Kind::Symbol: {
      const C* bound = lookup(e.symbol_name());
      if (!bound) throw UnboundVariable(e.symbol_name());
      return *bound;
    }
    case Expr::Kind::Unary: {
      C a = evaluate<C>(*e.lhs(), lookup, lift);
      switch (e.unary_op()) {
        case UnaryOp::Neg:
          return lift(0.0) - a;
        case UnaryOp::Cosh:
          return cosh(a);
        case UnaryOp::Sinh:
          return sinh(a);
        case UnaryOp::Cos:
          return cos(a);
        case UnaryOp::Sin:
          return sin(a);
        case UnaryOp::Exp:
          return exp(a);
        case UnaryOp::Ln:
          if (scalar_part(a) <= 0.0)
            throw DomainError("ln of a non-positive value");
          return log(a);
        case UnaryOp::Sqrt:
          if (scalar_part(a) < 0.0)
            throw DomainError("sqrt of a negative value");
          return sqrt(a);
      }
      throw Error("unreachable unary op");
    }
    case Expr::Kind::Binary: {
      C a = evaluate<C>(*e.lhs(), lookup, lift);
      C b = evaluate<C>(*e.rhs(), lookup, lift);
      switch (e.binary_op()) {
        case BinaryOp::Add:
          return a + b;
        case BinaryOp::Sub:
          return a - b;
        case BinaryOp::Mul:
          return a * b;
        case BinaryOp::Div:
          if (scalar_part(b) == 0.0)
            throw DomainError("division by a value with zero scalar part");
          return a / b;
      }
      throw Error("unreachable binary op");
    }
    case Expr::Kind::Power: {
      C base = evaluate<C>(*e.lhs(), lookup, lift);
      return detail::int_pow(base, e.exponent(), lift(1.0));
    }
  }
  throw Error("unreachable expression kind");
}

template <class C>
C evaluate(const Expr& e, const std::map<std::string, C, std::less<>>& bindings,
           const C& exemplar) {
  return evaluate<C>(
      e,
      [&bindings](const std::string& name) -> const C* {
        auto it = bindings.find(name);
        return it == bindings.end() ? nullptr : &it->second;
      },
      [&exemplar](double v) {
        using parageo::lift_like;
        return lift_like(v, exemplar);
      });
}

inline double evaluate(const Expr& e,
                       const std::map<std::string, double, std::less<>>& b) {
  return evaluate<double>(e, b, 0.0);
}

}  // namespace expr
}  // namespace parageo
