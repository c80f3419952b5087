#include "hydra/lift.hpp"

#include <algorithm>
#include <array>

namespace hydra {

std::vector<U25Pair> enumerate_u25(const PartialFieldSpec& spec, const FundamentalTable& table) {
  std::vector<U25Pair> out;
  auto pool = table.nonzero_one();
  for (auto p : pool) {
    for (auto q : pool) {
      if (p == q) continue;
      if (table.find_factored(spec.divide(table[p].factored, table[q].factored))) out.push_back({p, q});
    }
  }
  return out;
}

std::vector<GFPair> gf5_u25_tuples(std::size_t width) {
  static constexpr std::array<std::array<int, 2>, 6> kReps = {{{2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 2}, {4, 3}}};
  if (width < 1 || width > kReps.size()) throw std::invalid_argument("gf5_u25_tuples: width out of range");
  std::vector<GFPair> out;
  std::vector<std::size_t> pick;
  std::vector<bool> used(kReps.size(), false);
  auto rec = [&](auto&& self) -> void {
    if (pick.size() == width) {
      std::vector<int> p;
      std::vector<int> q;
      for (auto r : pick) {
        p.push_back(kReps[r][0]);
        q.push_back(kReps[r][1]);
      }
      out.push_back({GFTuple(p), GFTuple(q)});
      return;
    }
    for (std::size_t r = 0; r < kReps.size(); ++r) {
      if (used[r]) continue;
      used[r] = true;
      pick.push_back(r);
      self(self);
      pick.pop_back();
      used[r] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<InequivalenceViolation> check_inequivalence(const std::vector<GFPair>& pairs) {
  std::vector<InequivalenceViolation> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [p, q] = pairs[k];
    for (std::size_t i = 0; i < p.width(); ++i) {
      for (std::size_t j = i + 1; j < p.width(); ++j) {
        if (p[i] == p[j] && q[i] == q[j]) out.push_back({k, i, j});
      }
    }
  }
  return out;
}

bool CrossRatioDomain::contains(const GFTuple& t) const {
  return std::binary_search(members.begin(), members.end(), t);
}

CrossRatioDomain build_domain(std::size_t width) {
  if (width < 1) throw std::invalid_argument("build_domain: width must be positive");
  CrossRatioDomain d;
  d.width = width;
  d.members.push_back(GFTuple(width, 0));
  d.members.push_back(GFTuple(width, 1));
  std::vector<int> t(width, 2);
  for (;;) {
    int counts[5] = {0, 0, 0, 0, 0};
    for (int x : t) ++counts[x];
    if (counts[2] < 3 && counts[3] < 3 && counts[4] < 3) d.members.push_back(GFTuple(t));
    std::size_t v = width;
    while (v > 0 && t[v - 1] == 4) t[--v] = 2;
    if (v == 0) break;
    ++t[v - 1];
  }
  std::sort(d.members.begin(), d.members.end());
  return d;
}

std::optional<std::size_t> LiftingFn::lift(const GFTuple& t) const {
  auto it = table_.find(t);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

LiftingBuild build_lifting_fn(const PartialFieldSpec& spec, const FundamentalTable& table,
                              const CrossRatioDomain& domain) {
  LiftingBuild out;
  out.fn.width_ = spec.lift_width;
  auto fail = [&](std::string msg) {
    out.bijective = false;
    out.failures.push_back(std::move(msg));
  };
  if (domain.width != spec.lift_width) fail("domain width differs from the lift width");
  for (std::size_t i = 0; i < table.size(); ++i) {
    GFTuple t = table[i].image.truncated(spec.lift_width);
    if (!domain.contains(t)) fail("image " + t.to_string() + " of " + spec.format(table[i].value) + " is outside the domain");
    auto [it, inserted] = out.fn.table_.emplace(t, i);
    if (!inserted) {
      fail("fundamentals " + spec.format(table[it->second].value) + " and " + spec.format(table[i].value) +
           " share the image " + t.to_string());
    }
  }
  for (const auto& t : domain.members) {
    if (!out.fn.table_.count(t)) fail("domain member " + t.to_string() + " has no preimage");
  }
  return out;
}

LocalLiftResult local_lift_check(const PartialFieldSpec& spec, const FundamentalTable& table, const LiftingFn& fn,
                                 const CrossRatioDomain& domain, const std::vector<GFPair>& pairs) {
  LocalLiftResult out;
  for (const auto& [p, q] : pairs) {
    std::string label = "(" + p.to_string() + ", " + q.to_string() + ")";
    if (!domain.contains(p) || !domain.contains(q)) {
      out.domain_violations.push_back(label + " leaves the cross-ratio domain");
      continue;
    }
    auto lp = fn.lift(p);
    auto lq = fn.lift(q);
    if (!lp || !lq) {
      out.domain_violations.push_back(label + " has no lift");
      continue;
    }
    FactoredElement ratio = spec.divide(table[*lp].factored, table[*lq].factored);
    if (!table.find_factored(ratio)) {
      out.lift_violations.push_back(label + " lifts to (" + spec.format(table[*lp].value) + ", " +
                                    spec.format(table[*lq].value) + ") whose ratio " + spec.format(ratio) +
                                    " is not fundamental");
      continue;
    }
    out.lifted.insert({*lp, *lq});
  }
  return out;
}

}  // namespace hydra
