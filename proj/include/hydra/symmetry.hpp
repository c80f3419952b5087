#pragma once

#include "hydra/pfield.hpp"

#include <functional>

namespace hydra {

// Images of the variables, as indices into the fundamental table.
struct AutCandidate {
  std::vector<std::size_t> images;
};

// Coordinate permutation of GF(5)^m: (P t)[c] = t[perm[c]].
using Permutation = std::vector<std::size_t>;

struct Automorphism {
  std::vector<std::size_t> images;
  Permutation perm;
};

struct AutGroup {
  std::vector<Automorphism> members;  // sorted by images
  std::size_t candidates = 0;
  std::size_t prefilter_passed = 0;
  std::optional<std::size_t> find(const std::vector<std::size_t>& images) const;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Precomputed data for the modular prefilter.
class Prefilter {
 public:
  Prefilter(const PartialFieldSpec& spec, const FundamentalTable& table);
  // Every nonzero-one fundamental maps to a fundamental under the
  // substitution, compared by fingerprint.
  bool operator()(const AutCandidate& cand) const;

 private:
  const PartialFieldSpec& spec_;
  const FundamentalTable& table_;
  std::vector<std::vector<int>> exps_;  // nonzero-one entries
  std::vector<int> signs_;
  std::vector<std::uint64_t> sorted_fps_;
  int max_exp_ = 0;
};

bool prefilter(const PartialFieldSpec& spec, const FundamentalTable& table, const AutCandidate& cand);

// Every seed fundamental maps to a fundamental, checked exactly.
bool confirm(const PartialFieldSpec& spec, const FundamentalTable& table, const AutCandidate& cand);
bool confirm(const PartialFieldSpec& spec, const FundamentalTable& table, std::span<const Element> images);

// The permutation P with hom_gf5(sigma(g)) = P hom_gf5(g) for every generator
// g; throws std::runtime_error if none exists.
Permutation induced_permutation(const PartialFieldSpec& spec, const FundamentalTable& table,
                                const AutCandidate& cand);

// Table indices of sigma(tau(v)) for each variable v, or nullopt if some
// image is not fundamental.
std::optional<std::vector<std::size_t>> compose(const PartialFieldSpec& spec, const FundamentalTable& table,
                                                const std::vector<std::size_t>& sigma,
                                                const std::vector<std::size_t>& tau);

// a after b: (a o b)[c] = a[b[c]].
Permutation compose_perm(const Permutation& a, const Permutation& b);
Permutation inverse_perm(const Permutation& p);

AutGroup compute_automorphisms(const PartialFieldSpec& spec, const FundamentalTable& table, unsigned workers = 1,
                               const ProgressFn& progress = {});

struct GroupCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  bool perms_distinct = false;
  bool full_symmetric_group = false;
  std::vector<std::string> failures;
};

// Closure and inverses under exact composition, and the homomorphism
// property perm(s o t) = perm(t) o perm(s). Exhaustive when the group has at
// most `exhaustive_limit` members; otherwise `sample_pairs` random pairs.
GroupCheck check_group(const PartialFieldSpec& spec, const FundamentalTable& table, const AutGroup& group,
                       std::size_t exhaustive_limit = 24, std::size_t sample_pairs = 200, std::uint64_t seed = 1);

}  // namespace hydra
