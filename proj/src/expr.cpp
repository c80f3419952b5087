#include "hydra/expr.hpp"

#include <cctype>

namespace hydra {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

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

  static ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expression() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, {lhs, term()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::Sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = node(Expr::Kind::Mul, {lhs, unary()});
      } else if (accept('/')) {
        lhs = node(Expr::Kind::Div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return node(Expr::Kind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative) e->exponent = -e->exponent;
    e->args = {base};
    return e;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      ExprPtr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    static constexpr std::pair<std::string_view, std::string_view> kGreek[] = {
        {"\xce\xb1", "alpha"}, {"\xce\xb2", "beta"}, {"\xce\xb3", "gamma"}};
    for (const auto& [utf8, ascii] : kGreek) {
      if (text_.substr(pos_, utf8.size()) == utf8) {
        pos_ += utf8.size();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Variable;
        e->name = std::string(ascii);
        return e;
      }
    }
    char c = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->number = mpz_class(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Variable;
      e->name = std::string(text_.substr(start, pos_ - start));
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = expr_to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string expr_to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number.get_str();
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Neg:
      return "-" + wrap(*e.args[0], 3);
    case Expr::Kind::Add:
      return wrap(*e.args[0], 1) + "+" + wrap(*e.args[1], 2);
    case Expr::Kind::Sub:
      return wrap(*e.args[0], 1) + "-" + wrap(*e.args[1], 2);
    case Expr::Kind::Mul:
      return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case Expr::Kind::Div:
      return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case Expr::Kind::Pow:
      return wrap(*e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

}  // namespace hydra
