#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hydra {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
std::uint64_t mpz_mod_u64(const mpz_class& a, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);

// Image of an element given by sign and generator exponents under generator
// residues modulo a prime.
class ModMap {
 public:
  ModMap() = default;
  ModMap(std::uint64_t prime, std::vector<std::uint64_t> gen_residues);

  std::uint64_t prime() const { return prime_; }
  const std::vector<std::uint64_t>& gen_residues() const { return residues_; }

  // Fails when a generator with a negative exponent maps to zero.
  std::optional<std::uint64_t> eval(int sign, std::span<const int> exps) const;

 private:
  std::uint64_t prime_ = 0;
  std::vector<std::uint64_t> residues_;
  std::vector<std::uint64_t> inverses_;
};

// Residue of a rational number modulo 5; throws when 5 divides the denominator.
int to_gf5(const mpq_class& q);

}  // namespace hydra
