#include "hydra/modular.hpp"

#include <stdexcept>

namespace hydra {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

std::uint64_t mpz_mod_u64(const mpz_class& a, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime_u64(c)) {
    if (c == UINT64_MAX) throw std::overflow_error("next_prime: out of range");
    ++c;
  }
  return c;
}

ModMap::ModMap(std::uint64_t prime, std::vector<std::uint64_t> gen_residues)
    : prime_(prime), residues_(std::move(gen_residues)) {
  if (prime_ < 3 || prime_ >= (std::uint64_t{1} << 63) || !is_prime_u64(prime_)) {
    throw std::invalid_argument("ModMap: modulus must be an odd prime below 2^63");
  }
  inverses_.resize(residues_.size());
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    residues_[i] %= prime_;
    inverses_[i] = residues_[i] == 0 ? 0 : invmod(residues_[i], prime_);
  }
}

std::optional<std::uint64_t> ModMap::eval(int sign, std::span<const int> exps) const {
  if (exps.size() != residues_.size()) throw std::invalid_argument("ModMap: exponent width mismatch");
  if (sign == 0) return 0;
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    int e = exps[i];
    if (e == 0) continue;
    if (e < 0) {
      if (residues_[i] == 0) return std::nullopt;
      acc = mulmod(acc, powmod(inverses_[i], static_cast<std::uint64_t>(-e), prime_), prime_);
    } else {
      acc = mulmod(acc, powmod(residues_[i], static_cast<std::uint64_t>(e), prime_), prime_);
    }
  }
  return sign < 0 ? submod(0, acc, prime_) : acc;
}

int to_gf5(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  long den = static_cast<long>(mpz_fdiv_ui(c.get_den_mpz_t(), 5));
  if (den == 0) throw std::domain_error("to_gf5: denominator divisible by 5");
  long num = static_cast<long>(mpz_fdiv_ui(c.get_num_mpz_t(), 5));
  long inv = 1;
  while ((den * inv) % 5 != 1) ++inv;
  return static_cast<int>((num * inv) % 5);
}

}  // namespace hydra
