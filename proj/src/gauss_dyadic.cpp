#include "hydra/gauss_dyadic.hpp"

#include "hydra/modular.hpp"

#include <sstream>
#include <stdexcept>

namespace hydra {

namespace {

mpz_class shl(const mpz_class& x, unsigned k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

// Exponent k with x = 2^k, or -1.
int exact_log2(const mpz_class& x) {
  if (x <= 0) return -1;
  std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (mpz_scan1(x.get_mpz_t(), 0) != bits - 1) return -1;
  return static_cast<int>(bits - 1);
}

}  // namespace

GaussDyadic::GaussDyadic(mpz_class re, mpz_class im, unsigned two_exp)
    : re_(std::move(re)), im_(std::move(im)), two_exp_(two_exp) {
  canonicalize();
}

void GaussDyadic::canonicalize() {
  if (is_zero()) {
    two_exp_ = 0;
    return;
  }
  while (two_exp_ > 0 && mpz_even_p(re_.get_mpz_t()) && mpz_even_p(im_.get_mpz_t())) {
    mpz_tdiv_q_2exp(re_.get_mpz_t(), re_.get_mpz_t(), 1);
    mpz_tdiv_q_2exp(im_.get_mpz_t(), im_.get_mpz_t(), 1);
    --two_exp_;
  }
}

GaussDyadic GaussDyadic::operator-() const { return GaussDyadic(-re_, -im_, two_exp_); }

GaussDyadic operator+(const GaussDyadic& a, const GaussDyadic& b) {
  unsigned e = std::max(a.two_exp_, b.two_exp_);
  return GaussDyadic(shl(a.re_, e - a.two_exp_) + shl(b.re_, e - b.two_exp_),
                     shl(a.im_, e - a.two_exp_) + shl(b.im_, e - b.two_exp_), e);
}

GaussDyadic operator-(const GaussDyadic& a, const GaussDyadic& b) { return a + (-b); }

GaussDyadic operator*(const GaussDyadic& a, const GaussDyadic& b) {
  return GaussDyadic(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_,
                     a.two_exp_ + b.two_exp_);
}

GaussDyadic operator/(const GaussDyadic& a, const GaussDyadic& b) { return a * b.inverse(); }

GaussDyadic GaussDyadic::conj() const { return GaussDyadic(re_, -im_, two_exp_); }

GaussDyadic GaussDyadic::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  GaussDyadic result(1);
  GaussDyadic base = *this;
  auto k = static_cast<unsigned>(n);
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool GaussDyadic::is_unit() const { return exact_log2(re_ * re_ + im_ * im_) >= 0; }

int GaussDyadic::log2_norm() const {
  int k = exact_log2(re_ * re_ + im_ * im_);
  if (k < 0) throw std::domain_error("GaussDyadic: not a unit");
  return k - 2 * static_cast<int>(two_exp_);
}

GaussDyadic GaussDyadic::inverse() const {
  // x = z / 2^e with |z|^2 = 2^k, so 1/x = conj(z) * 2^(e - k).
  int k = exact_log2(re_ * re_ + im_ * im_);
  if (k < 0) throw std::domain_error("GaussDyadic: inverse of a non-unit");
  int shift = static_cast<int>(two_exp_) - k;
  if (shift >= 0) {
    return GaussDyadic(shl(re_, static_cast<unsigned>(shift)), shl(-im_, static_cast<unsigned>(shift)), 0);
  }
  return GaussDyadic(re_, -im_, static_cast<unsigned>(-shift));
}

mpq_class GaussDyadic::real_part() const {
  mpq_class q(re_, shl(mpz_class(1), two_exp_));
  q.canonicalize();
  return q;
}

mpq_class GaussDyadic::imag_part() const {
  mpq_class q(im_, shl(mpz_class(1), two_exp_));
  q.canonicalize();
  return q;
}

bool operator<(const GaussDyadic& a, const GaussDyadic& b) {
  mpq_class ar = a.real_part();
  mpq_class br = b.real_part();
  if (ar != br) return ar < br;
  mpq_class ai = a.imag_part();
  mpq_class bi = b.imag_part();
  if (abs(ai) != abs(bi)) return abs(ai) < abs(bi);
  return ai < bi;
}

std::uint64_t GaussDyadic::eval_mod(std::uint64_t p, std::uint64_t i_residue) const {
  std::uint64_t v = addmod(mpz_mod_u64(re_, p), mulmod(mpz_mod_u64(im_, p), i_residue % p, p), p);
  return mulmod(v, powmod(invmod(2, p), two_exp_, p), p);
}

std::string GaussDyadic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  std::string imag;
  if (im_ != 0) {
    mpz_class a = abs(im_);
    imag = (a == 1 ? std::string() : a.get_str()) + "i";
  }
  std::string body;
  if (re_ != 0) {
    body = re_.get_str();
    if (im_ != 0) body += (im_ < 0 ? "-" : "+") + imag;
  } else {
    body = (im_ < 0 ? "-" : "") + imag;
  }
  if (two_exp_ == 0) return body;
  bool compound = re_ != 0 && im_ != 0;
  std::string den = shl(mpz_class(1), two_exp_).get_str();
  return (compound ? "(" + body + ")" : body) + "/" + den;
}

std::optional<GaussUnitFactors> factor_gauss_unit(const GaussDyadic& x) {
  if (x.is_zero() || !x.is_unit()) return std::nullopt;
  int val = x.log2_norm();  // valuation at (1-i)
  int v = ((val % 2) + 2) % 2;
  int y = (val - v) / 2;
  GaussDyadic rest = x / (GaussDyadic(2).pow(y) * GaussDyadic(1, -1).pow(v));
  const GaussDyadic powers[4] = {GaussDyadic(1), GaussDyadic::i(), GaussDyadic(-1), GaussDyadic(0, -1)};
  for (int k = 0; k < 4; ++k) {
    if (rest == powers[k]) return GaussUnitFactors{k, y, v};
  }
  return std::nullopt;
}

}  // namespace hydra
