#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hydra {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic expression over integers and named variables, e.g.
// "(1-gamma) - (1-alpha)*beta" or "alpha^2/(alpha-1)".
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  mpz_class number;
  std::string name;
  int exponent = 0;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Accepts + - * / ^ (integer exponent, possibly negative), parentheses,
// integers, ASCII identifiers and the Greek letters α β γ as aliases for
// alpha beta gamma.
ExprPtr parse_expr(std::string_view text);

std::string expr_to_string(const Expr& e);

// Evaluates over any ring type T supporting + - * / and unary minus, with a
// member `pow(int)`. `leaf` maps a variable name to T; `num` maps integers.
template <class T, class Leaf, class Num>
T eval_expr(const Expr& e, const Leaf& leaf, const Num& num) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return num(e.number);
    case Expr::Kind::Variable:
      return leaf(e.name);
    case Expr::Kind::Neg:
      return -eval_expr<T>(*e.args[0], leaf, num);
    case Expr::Kind::Add:
      return eval_expr<T>(*e.args[0], leaf, num) + eval_expr<T>(*e.args[1], leaf, num);
    case Expr::Kind::Sub:
      return eval_expr<T>(*e.args[0], leaf, num) - eval_expr<T>(*e.args[1], leaf, num);
    case Expr::Kind::Mul:
      return eval_expr<T>(*e.args[0], leaf, num) * eval_expr<T>(*e.args[1], leaf, num);
    case Expr::Kind::Div:
      return eval_expr<T>(*e.args[0], leaf, num) / eval_expr<T>(*e.args[1], leaf, num);
    case Expr::Kind::Pow:
      return eval_expr<T>(*e.args[0], leaf, num).pow(e.exponent);
  }
  throw std::logic_error("eval_expr: bad node");
}

}  // namespace hydra
