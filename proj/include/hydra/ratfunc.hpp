#pragma once

#include "hydra/poly.hpp"

#include <optional>

namespace hydra {

// Quotient of two integer polynomials. Never reduced; equality is decided by
// cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(int arity) : num_(arity), den_(arity, 1) {}
  RatFunc(int arity, const mpz_class& c) : num_(arity, c), den_(arity, 1) {}
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(num_.arity(), 1) {}
  RatFunc(Poly num, Poly den);

  int arity() const { return num_.arity(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  RatFunc pow(int n) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // Nullopt when the denominator vanishes at the residues.
  std::optional<std::uint64_t> eval_mod(std::uint64_t p,
                                        std::span<const std::uint64_t> residues) const;

  RatFunc substitute(std::span<const RatFunc> images) const;

  // Cancels common polynomial factors drawn from `candidates` and makes the
  // leading denominator coefficient positive. Only used for printing.
  RatFunc simplified(std::span<const Poly> candidates) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  Poly num_;
  Poly den_;
};

bool ratfunc_eq(const RatFunc& a, const RatFunc& b);

}  // namespace hydra
