#include "parageo/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace parageo::expr {

ExprPtr Expr::number(double value) {
  if (!std::isfinite(value)) throw Error("non-finite literal");
  if (value < 0.0) return unary(UnaryOp::Neg, number(-value));
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Number;
  e->number_ = value;
  return e;
}

ExprPtr Expr::symbol(std::string name) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Symbol;
  e->symbol_ = std::move(name);
  return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr operand) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Unary;
  e->unary_ = op;
  e->lhs_ = std::move(operand);
  return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Binary;
  e->binary_ = op;
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

ExprPtr Expr::power(ExprPtr base, int exponent) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Power;
  e->exponent_ = exponent;
  e->lhs_ = std::move(base);
  return e;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos, expected);
  }

  ExprPtr parse_expression() {
    ExprPtr left = parse_term();
    for (;;) {
      if (accept('+'))
        left = Expr::binary(BinaryOp::Add, left, parse_term());
      else if (accept('-'))
        left = Expr::binary(BinaryOp::Sub, left, parse_term());
      else
        return left;
    }
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    for (;;) {
      if (accept('*'))
        left = Expr::binary(BinaryOp::Mul, left, parse_factor());
      else if (accept('/'))
        left = Expr::binary(BinaryOp::Div, left, parse_factor());
      else
        return left;
    }
  }

  ExprPtr parse_factor() {
    if (accept('-')) return Expr::unary(UnaryOp::Neg, parse_factor());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (accept('^')) return Expr::power(base, parse_exponent());
    return base;
  }

  int parse_exponent() {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("integer exponent");
    long value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc{} || value > 64) fail("integer exponent in range");
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("number, name or '('");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_expression();
      if (!accept(')')) fail("')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_name();
    fail("number, name or '('");
  }

  ExprPtr parse_number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::size_t frac = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == frac) fail("digits after '.'");
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      std::size_t mark = pos;
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == digits) pos = mark;  // not an exponent suffix after all
    }
    std::string token(text.substr(start, pos - start));
    if (!token.empty() && token.front() == '.') token.insert(token.begin(), '0');
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
      fail("numeric literal");
    return Expr::number(value);
  }

  ExprPtr parse_name() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (peek() == '(') {
      UnaryOp op;
      if (name == "cosh")
        op = UnaryOp::Cosh;
      else if (name == "sinh")
        op = UnaryOp::Sinh;
      else if (name == "cos")
        op = UnaryOp::Cos;
      else if (name == "sin")
        op = UnaryOp::Sin;
      else if (name == "exp")
        op = UnaryOp::Exp;
      else if (name == "ln")
        op = UnaryOp::Ln;
      else if (name == "sqrt")
        op = UnaryOp::Sqrt;
      else
        throw UnknownFunction(start, name);
      ++pos;  // consume '('
      ExprPtr arg = parse_expression();
      if (!accept(')')) fail("')'");
      return Expr::unary(op, arg);
    }
    return Expr::symbol(std::move(name));
  }
};

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol:
      return 5;
    case Expr::Kind::Power:
      return 4;
    case Expr::Kind::Unary:
      return e.unary_op() == UnaryOp::Neg ? 3 : 5;  // functions print atom-like
    case Expr::Kind::Binary:
      switch (e.binary_op()) {
        case BinaryOp::Mul:
        case BinaryOp::Div:
          return 2;
        case BinaryOp::Add:
        case BinaryOp::Sub:
          return 1;
      }
  }
  return 0;
}

const char* function_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Cosh: return "cosh";
    case UnaryOp::Sinh: return "sinh";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Neg: break;
  }
  return "";
}

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (e.kind()) {
    case Expr::Kind::Number:
      out += format_number(e.number_value());
      return;
    case Expr::Kind::Symbol:
      out += e.symbol_name();
      return;
    case Expr::Kind::Unary:
      if (e.unary_op() == UnaryOp::Neg) {
        out += '-';
        child(*e.lhs(), precedence(*e.lhs()) < 3);
      } else {
        out += function_name(e.unary_op());
        out += '(';
        print(*e.lhs(), out);
        out += ')';
      }
      return;
    case Expr::Kind::Binary: {
      const int prec = precedence(e);
      char op = '?';
      switch (e.binary_op()) {
        case BinaryOp::Add: op = '+'; break;
        case BinaryOp::Sub: op = '-'; break;
        case BinaryOp::Mul: op = '*'; break;
        case BinaryOp::Div: op = '/'; break;
      }
      child(*e.lhs(), precedence(*e.lhs()) < prec);
      out += op;
      // right operand parenthesized on equal precedence: canonical form is
      // left-associative, so a+(b+c) keeps its parentheses.
      child(*e.rhs(), precedence(*e.rhs()) <= prec);
      return;
    }
    case Expr::Kind::Power:
      child(*e.lhs(), precedence(*e.lhs()) < 5);
      out += '^';
      out += std::to_string(e.exponent());
      return;
  }
}

void collect_vars(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Number:
      return;
    case Expr::Kind::Symbol:
      out.insert(e.symbol_name());
      return;
    case Expr::Kind::Unary:
    case Expr::Kind::Power:
      collect_vars(*e.lhs(), out);
      return;
    case Expr::Kind::Binary:
      collect_vars(*e.lhs(), out);
      collect_vars(*e.rhs(), out);
      return;
  }
}

}  // namespace

ExprPtr parse(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expression();
  if (!p.eof()) p.fail("end of input");
  return e;
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> out;
  collect_vars(e, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Number:
      return a.number_value() == b.number_value();
    case Expr::Kind::Symbol:
      return a.symbol_name() == b.symbol_name();
    case Expr::Kind::Unary:
      return a.unary_op() == b.unary_op() &&
             structurally_equal(*a.lhs(), *b.lhs());
    case Expr::Kind::Binary:
      return a.binary_op() == b.binary_op() &&
             structurally_equal(*a.lhs(), *b.lhs()) &&
             structurally_equal(*a.rhs(), *b.rhs());
    case Expr::Kind::Power:
      return a.exponent() == b.exponent() &&
             structurally_equal(*a.lhs(), *b.lhs());
  }
  return false;
}

}  // namespace parageo::expr
