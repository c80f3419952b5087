#pragma once

#include "hydra/pfield.hpp"

#include <set>
#include <unordered_map>

namespace hydra {

// Normalized U_{2,5} representation [[1,1,1],[1,p,q]] over a Hydra field:
// p, q, p/q fundamental, p != q, neither 0 nor 1. Stored as table indices.
struct U25Pair {
  std::size_t p;
  std::size_t q;
  friend auto operator<=>(const U25Pair&, const U25Pair&) = default;
};

struct GFPair {
  GFTuple p;
  GFTuple q;
  friend bool operator==(const GFPair&, const GFPair&) = default;
};

// Ordered pairs in table order, p outer and q inner.
std::vector<U25Pair> enumerate_u25(const PartialFieldSpec& spec, const FundamentalTable& table);

// Ordered selections of `width` distinct GF(5) representations of U_{2,5},
// transposed into a p-tuple and a q-tuple.
std::vector<GFPair> gf5_u25_tuples(std::size_t width);

struct InequivalenceViolation {
  std::size_t pair;  // index into the checked list
  std::size_t i;
  std::size_t j;
};

// Coordinate pairs i < j on which two projections give the same
// representation (p[i], q[i]) == (p[j], q[j]).
std::vector<InequivalenceViolation> check_inequivalence(const std::vector<GFPair>& pairs);

struct CrossRatioDomain {
  std::size_t width = 0;
  std::vector<GFTuple> members;  // sorted
  bool contains(const GFTuple& t) const;
};

// All-zero and all-one tuples plus the tuples over {2,3,4} in which no value
// occurs three or more times.
CrossRatioDomain build_domain(std::size_t width);

class LiftingFn {
 public:
  std::size_t width() const { return width_; }
  std::optional<std::size_t> lift(const GFTuple& t) const;
  std::size_t size() const { return table_.size(); }

 private:
  friend struct LiftingBuild build_lifting_fn(const PartialFieldSpec&, const FundamentalTable&,
                                              const CrossRatioDomain&);
  std::size_t width_ = 0;
  std::unordered_map<GFTuple, std::size_t, GFTupleHash> table_;
};

struct LiftingBuild {
  LiftingFn fn;
  bool bijective = true;
  std::vector<std::string> failures;
};

// Inverse of the homomorphism truncated to the spec's lift width, restricted
// to the fundamentals.
LiftingBuild build_lifting_fn(const PartialFieldSpec& spec, const FundamentalTable& table,
                              const CrossRatioDomain& domain);

struct LocalLiftResult {
  std::vector<std::string> domain_violations;
  std::vector<std::string> lift_violations;
  std::set<U25Pair> lifted;
  bool ok() const { return domain_violations.empty() && lift_violations.empty(); }
};

// Lifts each tuple pair and requires the ratio of the lifts to be fundamental.
LocalLiftResult local_lift_check(const PartialFieldSpec& spec, const FundamentalTable& table, const LiftingFn& fn,
                                 const CrossRatioDomain& domain, const std::vector<GFPair>& pairs);

}  // namespace hydra
