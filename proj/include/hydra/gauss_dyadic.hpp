#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hydra {

// Element (re + im*i) / 2^two_exp of Z[i, 1/2], stored in lowest terms.
class GaussDyadic {
 public:
  GaussDyadic() = default;
  GaussDyadic(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussDyadic(mpz_class re, mpz_class im, unsigned two_exp = 0);

  static GaussDyadic i() { return GaussDyadic(0, 1); }

  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }
  unsigned two_exp() const { return two_exp_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussDyadic operator-() const;
  friend GaussDyadic operator+(const GaussDyadic& a, const GaussDyadic& b);
  friend GaussDyadic operator-(const GaussDyadic& a, const GaussDyadic& b);
  friend GaussDyadic operator*(const GaussDyadic& a, const GaussDyadic& b);
  friend GaussDyadic operator/(const GaussDyadic& a, const GaussDyadic& b);
  GaussDyadic conj() const;
  GaussDyadic pow(int n) const;

  // Units are the elements whose norm is a power of two.
  bool is_unit() const;
  GaussDyadic inverse() const;
  // log2 |x|^2 for a unit.
  int log2_norm() const;

  // By real part, then absolute imaginary part, then imaginary part.
  friend bool operator<(const GaussDyadic& a, const GaussDyadic& b);
  friend bool operator==(const GaussDyadic& a, const GaussDyadic& b) = default;

  mpq_class real_part() const;
  mpq_class imag_part() const;

  // Residue with i sent to a square root of -1 modulo p.
  std::uint64_t eval_mod(std::uint64_t p, std::uint64_t i_residue) const;

  std::string to_string() const;

 private:
  void canonicalize();

  mpz_class re_ = 0;
  mpz_class im_ = 0;
  unsigned two_exp_ = 0;
};

// A unit written as i^k * 2^y * (1-i)^v with k in 0..3 and v in {0,1}.
struct GaussUnitFactors {
  int i_exp;
  int two_exp;
  int one_minus_i_exp;
};

std::optional<GaussUnitFactors> factor_gauss_unit(const GaussDyadic& x);

}  // namespace hydra
