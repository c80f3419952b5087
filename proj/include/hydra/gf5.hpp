#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hydra {

// Element of GF(5)^m with coordinatewise arithmetic.
class GFTuple {
 public:
  GFTuple() = default;
  GFTuple(std::size_t width, int value);
  GFTuple(std::initializer_list<int> coords);
  explicit GFTuple(const std::vector<int>& coords);

  std::size_t width() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<std::uint8_t>& coords() const { return c_; }

  bool is_unit() const;
  bool is_zero() const;

  GFTuple operator-() const;
  friend GFTuple operator+(const GFTuple& a, const GFTuple& b);
  friend GFTuple operator-(const GFTuple& a, const GFTuple& b);
  friend GFTuple operator*(const GFTuple& a, const GFTuple& b);
  friend GFTuple operator/(const GFTuple& a, const GFTuple& b);
  GFTuple inverse() const;
  GFTuple pow(int n) const;

  // Keeps the first `width` coordinates.
  GFTuple truncated(std::size_t width) const;

  friend bool operator==(const GFTuple& a, const GFTuple& b) = default;
  friend auto operator<=>(const GFTuple& a, const GFTuple& b) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> c_;
};

struct GFTupleHash {
  std::size_t operator()(const GFTuple& t) const;
};

int gf5_inverse(int x);

}  // namespace hydra
