#pragma once

#include "hydra/fourier_motzkin.hpp"
#include "hydra/pfield.hpp"

#include <functional>

namespace hydra {

// log2-norms of the generators under one homomorphism into H2; every
// fundamental's exponent vector e satisfies -1 <= coeffs . e <= 1.
struct ConstraintRow {
  std::vector<mpq_class> coeffs;  // one per generator slot
};

// Integer range per generator slot. The slot of the -1 generator holds the
// sign bit (0 for +, 1 for -).
struct CandidateBox {
  std::vector<int> lo;
  std::vector<int> hi;
  std::size_t count() const;
};

struct ExponentBounds {
  std::vector<Interval> real;  // LP range per slot, before rounding
  CandidateBox box;
};

std::vector<ConstraintRow> lognorm_rows(const PartialFieldSpec& spec);

// Box containing every exponent vector that satisfies the rows and the extra
// bounds. In integer mode the extremes are taken over lattice points only.
ExponentBounds bound_exponents(const std::vector<ConstraintRow>& rows, const std::vector<ExtraBound>& extra,
                               std::size_t sign_slot, LpMode mode);
ExponentBounds bound_exponents(const PartialFieldSpec& spec);

// Full Cartesian enumeration, first slot outermost and last slot fastest.
std::vector<std::vector<int>> enumerate_candidates(const CandidateBox& box);
FactoredElement candidate_factored(const PartialFieldSpec& spec, const std::vector<int>& candidate);

struct SieveSurvivor {
  std::uint64_t fingerprint = 0;
  std::optional<std::size_t> candidate;  // none for zero
};

struct SieveResult {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> generator_residues;
  std::vector<std::uint64_t> rejected_primes;
  bool exact = false;                  // Gaussian ground, sieved without a prime
  std::size_t candidate_count = 0;
  std::size_t distinct_values = 0;     // including zero
  std::vector<std::uint64_t> residues;  // per candidate
  std::vector<SieveSurvivor> survivors;
};

// Keeps the candidates c with 1-c also a candidate or zero. For rational
// grounds the fingerprint map must be injective on candidates and zero; on
// failure the next prime is tried. `prime_start` replaces the spec's prime.
SieveResult fingerprint_sieve(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates,
                              std::optional<std::uint64_t> prime_start = std::nullopt);

struct SurvivorCheck {
  bool ok = true;
  std::size_t exact_checks = 0;
  std::vector<std::string> failures;
};

// Survivor count equals the table size, 1-s is exactly a candidate for every
// survivor s, and survivors match table entries one to one by fingerprint.
SurvivorCheck verify_survivors(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates,
                               const SieveResult& sieve, const FundamentalTable& table);

}  // namespace hydra
