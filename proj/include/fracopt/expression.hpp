#pragma once

// Arithmetic expressions over t, x, y for config-supplied fields.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 't' | 'x' | 'y' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | exp | sqrt

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracopt {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Expression {
 public:
  static Expression parse(const std::string& text) {
    Parser parser{text, 0};
    Expression e;
    e.text_ = text;
    e.root_ = parser.parse_expr();
    parser.skip_space();
    if (parser.pos != text.size()) parser.fail("unexpected '" + std::string(1, text[parser.pos]) + "'");
    return e;
  }

  double operator()(double t, double x, double y = 0.0) const { return eval(*root_, t, x, y); }
  const std::string& text() const { return text_; }

  /// True when the expression does not mention t.
  bool time_independent() const { return !mentions(*root_, Op::VarT); }

 private:
  enum class Op { Num, VarT, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Sqrt };

  struct Node {
    Op op;
    double value = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  static NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
    return std::make_shared<const Node>(Node{op, value, std::move(lhs), std::move(rhs)});
  }

  struct Parser {
    const std::string& s;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError("expression '" + s + "': " + what + " at position " + std::to_string(pos));
    }

    void skip_space() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool accept(char c) {
      skip_space();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    NodePtr parse_expr() {
      NodePtr lhs = parse_term();
      for (;;) {
        if (accept('+')) lhs = make(Op::Add, lhs, parse_term());
        else if (accept('-')) lhs = make(Op::Sub, lhs, parse_term());
        else return lhs;
      }
    }

    NodePtr parse_term() {
      NodePtr lhs = parse_unary();
      for (;;) {
        if (accept('*')) lhs = make(Op::Mul, lhs, parse_unary());
        else if (accept('/')) lhs = make(Op::Div, lhs, parse_unary());
        else return lhs;
      }
    }

    NodePtr parse_unary() {
      if (accept('-')) return make(Op::Neg, parse_unary());
      if (accept('+')) return parse_unary();
      return parse_power();
    }

    NodePtr parse_power() {
      NodePtr base = parse_primary();
      if (accept('^')) return make(Op::Pow, base, parse_unary());
      return base;
    }

    NodePtr parse_primary() {
      skip_space();
      if (pos >= s.size()) fail("unexpected end of input");
      if (accept('(')) {
        NodePtr inner = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return inner;
      }
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const char* begin = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("bad number");
        pos += static_cast<std::size_t>(end - begin);
        return make(Op::Num, nullptr, nullptr, v);
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        const std::string name = s.substr(start, pos - start);
        if (name == "t") return make(Op::VarT);
        if (name == "x") return make(Op::VarX);
        if (name == "y") return make(Op::VarY);
        if (name == "pi") return make(Op::Num, nullptr, nullptr, std::numbers::pi);
        Op op;
        if (name == "sin") op = Op::Sin;
        else if (name == "cos") op = Op::Cos;
        else if (name == "exp") op = Op::Exp;
        else if (name == "sqrt") op = Op::Sqrt;
        else fail("unknown identifier '" + name + "'");
        if (!accept('(')) fail("expected '(' after " + name);
        NodePtr arg = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return make(op, arg);
      }
      fail("unexpected '" + std::string(1, c) + "'");
    }
  };

  static double eval(const Node& n, double t, double x, double y) {
    switch (n.op) {
      case Op::Num: return n.value;
      case Op::VarT: return t;
      case Op::VarX: return x;
      case Op::VarY: return y;
      case Op::Add: return eval(*n.lhs, t, x, y) + eval(*n.rhs, t, x, y);
      case Op::Sub: return eval(*n.lhs, t, x, y) - eval(*n.rhs, t, x, y);
      case Op::Mul: return eval(*n.lhs, t, x, y) * eval(*n.rhs, t, x, y);
      case Op::Div: return eval(*n.lhs, t, x, y) / eval(*n.rhs, t, x, y);
      case Op::Pow: return std::pow(eval(*n.lhs, t, x, y), eval(*n.rhs, t, x, y));
      case Op::Neg: return -eval(*n.lhs, t, x, y);
      case Op::Sin: return std::sin(eval(*n.lhs, t, x, y));
      case Op::Cos: return std::cos(eval(*n.lhs, t, x, y));
      case Op::Exp: return std::exp(eval(*n.lhs, t, x, y));
      case Op::Sqrt: return std::sqrt(eval(*n.lhs, t, x, y));
    }
    return 0.0;
  }

  static bool mentions(const Node& n, Op op) {
    if (n.op == op) return true;
    return (n.lhs && mentions(*n.lhs, op)) || (n.rhs && mentions(*n.rhs, op));
  }

  std::string text_;
  NodePtr root_;
};

}  // namespace fracopt
