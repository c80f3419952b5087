#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hydra {

class RatFunc;

// Monomials in up to three variables packed into one word: total degree in the
// top 16 bits, then one 16-bit exponent per variable. Integer order on the
// packed word is graded lexicographic order with the first variable largest.
using Monomial = std::uint64_t;

constexpr int kMaxVariables = 3;

Monomial make_monomial(std::span<const int> exps);
int monomial_exp(Monomial m, int var);
int monomial_degree(Monomial m);
Monomial monomial_mul(Monomial a, Monomial b);
bool monomial_divides(Monomial a, Monomial b);
Monomial monomial_div(Monomial a, Monomial b);

struct Term {
  Monomial mono;
  mpz_class coeff;
};

// Sparse integer polynomial, terms sorted with the leading (largest) monomial
// first and no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int arity) : arity_(arity) {}
  Poly(int arity, const mpz_class& c);

  static Poly variable(int arity, int var);
  static Poly from_terms(int arity, std::vector<Term> terms);

  int arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_value() const;
  int degree_in(int var) const;
  int total_degree() const;
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpz_class& c) const;
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Quotient when `divisor` divides this polynomial exactly over Z.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Value modulo p at the given variable residues.
  std::uint64_t eval_mod(std::uint64_t p, std::span<const std::uint64_t> residues) const;

  // Image under variable -> rational function substitution, with one common
  // denominator built from the per-variable maximal degrees.
  RatFunc substitute(std::span<const RatFunc> images) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize();

  int arity_ = 0;
  std::vector<Term> terms_;
};

}  // namespace hydra
