#include "hydra/element.hpp"

#include <stdexcept>

namespace hydra {

namespace {

template <class F>
Element binary(const Element& a, const Element& b, F f) {
  if (a.is_gauss() != b.is_gauss()) throw std::invalid_argument("element: ground ring mismatch");
  if (a.is_gauss()) return Element(f(a.gauss(), b.gauss()));
  return Element(f(a.ratfunc(), b.ratfunc()));
}

}  // namespace

bool Element::is_zero() const { return is_gauss() ? gauss().is_zero() : ratfunc().is_zero(); }

Element Element::constant(const mpz_class& c) const {
  if (is_gauss()) return Element(GaussDyadic(c, 0));
  return Element(RatFunc(ratfunc().arity(), c));
}

Element Element::operator-() const {
  if (is_gauss()) return Element(-gauss());
  return Element(-ratfunc());
}

Element operator+(const Element& a, const Element& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Element operator-(const Element& a, const Element& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Element operator*(const Element& a, const Element& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Element operator/(const Element& a, const Element& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Element Element::pow(int n) const {
  if (is_gauss()) return Element(gauss().pow(n));
  return Element(ratfunc().pow(n));
}

Element Element::inverse() const {
  if (is_gauss()) return Element(gauss().inverse());
  return Element(ratfunc().inverse());
}

bool operator==(const Element& a, const Element& b) {
  if (a.is_gauss() != b.is_gauss()) return false;
  if (a.is_gauss()) return a.gauss() == b.gauss();
  return a.ratfunc() == b.ratfunc();
}

std::optional<std::uint64_t> Element::eval_mod(std::uint64_t p, std::span<const std::uint64_t> residues) const {
  if (is_gauss()) {
    if (residues.empty()) throw std::invalid_argument("element: missing residue for i");
    return gauss().eval_mod(p, residues[0]);
  }
  return ratfunc().eval_mod(p, residues);
}

std::string Element::to_string(std::span<const std::string> names) const {
  if (is_gauss()) return gauss().to_string();
  return ratfunc().to_string(names);
}

}  // namespace hydra
