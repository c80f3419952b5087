#include "hydra/gf5.hpp"

#include <stdexcept>

namespace hydra {

namespace {

int norm5(int x) { return ((x % 5) + 5) % 5; }

void check_width(const GFTuple& a, const GFTuple& b) {
  if (a.width() != b.width()) throw std::invalid_argument("GFTuple: width mismatch");
}

}  // namespace

int gf5_inverse(int x) {
  static constexpr int kInverse[5] = {0, 1, 3, 2, 4};
  x = norm5(x);
  if (x == 0) throw std::domain_error("GF(5): inverse of zero");
  return kInverse[x];
}

GFTuple::GFTuple(std::size_t width, int value) : c_(width, static_cast<std::uint8_t>(norm5(value))) {}

GFTuple::GFTuple(std::initializer_list<int> coords) {
  for (int x : coords) c_.push_back(static_cast<std::uint8_t>(norm5(x)));
}

GFTuple::GFTuple(const std::vector<int>& coords) {
  for (int x : coords) c_.push_back(static_cast<std::uint8_t>(norm5(x)));
}

bool GFTuple::is_unit() const {
  for (auto x : c_) {
    if (x == 0) return false;
  }
  return true;
}

bool GFTuple::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

GFTuple GFTuple::operator-() const {
  GFTuple r = *this;
  for (auto& x : r.c_) x = static_cast<std::uint8_t>(norm5(-x));
  return r;
}

GFTuple operator+(const GFTuple& a, const GFTuple& b) {
  check_width(a, b);
  GFTuple r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<std::uint8_t>((a.c_[i] + b.c_[i]) % 5);
  return r;
}

GFTuple operator-(const GFTuple& a, const GFTuple& b) { return a + (-b); }

GFTuple operator*(const GFTuple& a, const GFTuple& b) {
  check_width(a, b);
  GFTuple r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<std::uint8_t>((a.c_[i] * b.c_[i]) % 5);
  return r;
}

GFTuple operator/(const GFTuple& a, const GFTuple& b) { return a * b.inverse(); }

GFTuple GFTuple::inverse() const {
  GFTuple r = *this;
  for (auto& x : r.c_) x = static_cast<std::uint8_t>(gf5_inverse(x));
  return r;
}

GFTuple GFTuple::pow(int n) const {
  GFTuple base = n < 0 ? inverse() : *this;
  unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
  GFTuple r(width(), 1);
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

GFTuple GFTuple::truncated(std::size_t width) const {
  if (width > c_.size()) throw std::invalid_argument("GFTuple: truncation wider than tuple");
  GFTuple r;
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(width));
  return r;
}

std::string GFTuple::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "}";
}

std::size_t GFTupleHash::operator()(const GFTuple& t) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : t.coords()) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace hydra
