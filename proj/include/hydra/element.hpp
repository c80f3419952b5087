#pragma once

#include "hydra/gauss_dyadic.hpp"
#include "hydra/ratfunc.hpp"

#include <variant>

namespace hydra {

// A value of a partial field's ground ring: a rational function for H3-H5 or
// a Gaussian-dyadic number for H2.
class Element {
 public:
  Element() = default;
  Element(RatFunc r) : v_(std::move(r)) {}      // NOLINT(google-explicit-constructor)
  Element(GaussDyadic g) : v_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

  bool is_gauss() const { return std::holds_alternative<GaussDyadic>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
  const GaussDyadic& gauss() const { return std::get<GaussDyadic>(v_); }

  bool is_zero() const;
  // Same ground ring, given value.
  Element constant(const mpz_class& c) const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element pow(int n) const;
  Element inverse() const;

  friend bool operator==(const Element& a, const Element& b);

  // Residue at the given variable residues; for Gaussian values the single
  // residue is the image of i. Nullopt when a denominator vanishes.
  std::optional<std::uint64_t> eval_mod(std::uint64_t p, std::span<const std::uint64_t> residues) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::variant<RatFunc, GaussDyadic> v_;
};

}  // namespace hydra
