#include "hydra/ratfunc.hpp"

#include "hydra/modular.hpp"

#include <stdexcept>

namespace hydra {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("ratfunc: zero denominator");
  if (num_.arity() != den_.arity()) throw std::invalid_argument("ratfunc: arity mismatch");
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("ratfunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("ratfunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n >= 0) return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  return inverse().pow(-n);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.arity() != b.arity()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) { return a == b; }

std::optional<std::uint64_t> RatFunc::eval_mod(std::uint64_t p,
                                               std::span<const std::uint64_t> residues) const {
  std::uint64_t d = den_.eval_mod(p, residues);
  if (d == 0) return std::nullopt;
  return mulmod(num_.eval_mod(p, residues), invmod(d, p), p);
}

RatFunc RatFunc::substitute(std::span<const RatFunc> images) const {
  return num_.substitute(images) / den_.substitute(images);
}

namespace {

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) g = gcd(g, t.coeff);
  return g;
}

Poly divide_content(const Poly& p, const mpz_class& g) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.mono, t.coeff / g});
  return Poly::from_terms(p.arity(), std::move(terms));
}

}  // namespace

RatFunc RatFunc::simplified(std::span<const Poly> candidates) const {
  Poly n = num_;
  Poly d = den_;
  if (n.is_zero()) return RatFunc(n, Poly(n.arity(), 1));
  for (const auto& c : candidates) {
    if (c.is_constant()) continue;
    for (;;) {
      auto qn = n.divide_exact(c);
      if (!qn) break;
      auto qd = d.divide_exact(c);
      if (!qd) break;
      n = std::move(*qn);
      d = std::move(*qd);
    }
  }
  if (auto q = n.divide_exact(d)) return RatFunc(*q);
  mpz_class g = gcd(content(n), content(d));
  if (d.leading().coeff < 0) g = -g;
  return RatFunc(divide_content(n, g), divide_content(d, g));
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(names);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace hydra
