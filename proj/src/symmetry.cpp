#include "hydra/symmetry.hpp"

#include "hydra/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace hydra {

std::optional<std::size_t> AutGroup::find(const std::vector<std::size_t>& images) const {
  auto it = std::lower_bound(members.begin(), members.end(), images,
                             [](const Automorphism& a, const std::vector<std::size_t>& b) { return a.images < b; });
  if (it == members.end() || it->images != images) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

std::vector<Element> image_values(const FundamentalTable& table, const std::vector<std::size_t>& images) {
  std::vector<Element> out;
  for (auto i : images) out.push_back(table[i].value);
  return out;
}

// In-place batch inversion of nonzero residues.
void invert_all(std::vector<std::uint64_t>& xs, std::uint64_t p) {
  std::vector<std::uint64_t> prefix(xs.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc = mulmod(acc, xs[i], p);
  }
  std::uint64_t inv = invmod(acc, p);
  for (std::size_t i = xs.size(); i-- > 0;) {
    std::uint64_t x = xs[i];
    xs[i] = mulmod(inv, prefix[i], p);
    inv = mulmod(inv, x, p);
  }
}

}  // namespace

Prefilter::Prefilter(const PartialFieldSpec& spec, const FundamentalTable& table) : spec_(spec), table_(table) {
  for (auto i : table.nonzero_one()) {
    exps_.push_back(table[i].factored.exps);
    signs_.push_back(table[i].factored.sign);
    sorted_fps_.push_back(table[i].fingerprint);
    for (int e : table[i].factored.exps) max_exp_ = std::max(max_exp_, std::abs(e));
  }
  std::sort(sorted_fps_.begin(), sorted_fps_.end());
}

bool Prefilter::operator()(const AutCandidate& cand) const {
  if (spec_.ground == Ground::GaussianDyadic) {
    const GaussDyadic& x = table_[cand.images.at(0)].value.gauss();
    return x * x == GaussDyadic(-1);
  }
  const std::uint64_t p = table_.prime();
  std::vector<std::uint64_t> residues;
  for (auto i : cand.images) residues.push_back(table_[i].fingerprint);
  const std::size_t ng = spec_.generator_count();
  std::vector<std::uint64_t> gens(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    gens[g] = spec_.generators[g].ratfunc().num().eval_mod(p, residues);
    if (gens[g] == 0) return false;
  }
  std::vector<std::uint64_t> inv = gens;
  invert_all(inv, p);
  // pw[g][e + max_exp] = gens[g]^e
  const int width = 2 * max_exp_ + 1;
  std::vector<std::uint64_t> pw(ng * static_cast<std::size_t>(width));
  for (std::size_t g = 0; g < ng; ++g) {
    std::uint64_t* row = &pw[g * static_cast<std::size_t>(width)];
    row[max_exp_] = 1;
    for (int e = 1; e <= max_exp_; ++e) {
      row[max_exp_ + e] = mulmod(row[max_exp_ + e - 1], gens[g], p);
      row[max_exp_ - e] = mulmod(row[max_exp_ - e + 1], inv[g], p);
    }
  }
  std::vector<std::uint64_t> mapped;
  mapped.reserve(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    std::uint64_t v = 1;
    const auto& ex = exps_[k];
    for (std::size_t g = 0; g < ng; ++g) {
      if (ex[g] != 0) v = mulmod(v, pw[g * static_cast<std::size_t>(width) + static_cast<std::size_t>(ex[g] + max_exp_)], p);
    }
    if (signs_[k] < 0) v = submod(0, v, p);
    if (!std::binary_search(sorted_fps_.begin(), sorted_fps_.end(), v)) return false;
    mapped.push_back(v);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == sorted_fps_;
}

bool prefilter(const PartialFieldSpec& spec, const FundamentalTable& table, const AutCandidate& cand) {
  return Prefilter(spec, table)(cand);
}

bool confirm(const PartialFieldSpec& spec, const FundamentalTable& table, std::span<const Element> images) {
  for (const auto& seed : spec.seed_expr) {
    try {
      if (!is_fundamental_exact(spec, table, spec.evaluate(*seed, images))) return false;
    } catch (const std::domain_error&) {
      return false;
    }
  }
  return true;
}

bool confirm(const PartialFieldSpec& spec, const FundamentalTable& table, const AutCandidate& cand) {
  auto values = image_values(table, cand.images);
  return confirm(spec, table, values);
}

Permutation induced_permutation(const PartialFieldSpec& spec, const FundamentalTable& table,
                                const AutCandidate& cand) {
  std::vector<GFTuple> var_images;
  for (auto i : cand.images) var_images.push_back(table[i].image);
  const std::size_t m = spec.gf5_width();
  std::vector<GFTuple> moved;
  for (const auto& g : spec.generator_expr) moved.push_back(spec.evaluate_gf5(*g, var_images));
  const auto& base = spec.gf5_generator_images;
  Permutation perm(m);
  std::vector<bool> used(m, false);
  for (std::size_t c = 0; c < m; ++c) {
    std::optional<std::size_t> match;
    for (std::size_t d = 0; d < m; ++d) {
      bool same = true;
      for (std::size_t g = 0; g < base.size() && same; ++g) same = moved[g][c] == base[g][d];
      if (!same) continue;
      if (match) throw std::runtime_error("induced_permutation: coordinate " + std::to_string(c) + " is ambiguous");
      match = d;
    }
    if (!match || used[*match]) {
      throw std::runtime_error("induced_permutation: no coordinate permutation matches coordinate " +
                               std::to_string(c));
    }
    used[*match] = true;
    perm[c] = *match;
  }
  return perm;
}

std::optional<std::vector<std::size_t>> compose(const PartialFieldSpec& spec, const FundamentalTable& table,
                                                const std::vector<std::size_t>& sigma,
                                                const std::vector<std::size_t>& tau) {
  auto sigma_values = image_values(table, sigma);
  std::vector<std::size_t> out;
  for (auto t : tau) {
    try {
      auto idx = find_fundamental(spec, table, spec.substitute(table[t].factored, sigma_values));
      if (!idx) return std::nullopt;
      out.push_back(*idx);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }
  return out;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t c = 0; c < b.size(); ++c) r[c] = a[b[c]];
  return r;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) r[p[c]] = c;
  return r;
}

AutGroup compute_automorphisms(const PartialFieldSpec& spec, const FundamentalTable& table, unsigned workers,
                               const ProgressFn& progress) {
  const auto pool = table.nonzero_one();
  const std::size_t n = pool.size();
  const std::size_t k = spec.variables.size();
  if (k == 0 || k > n) throw std::invalid_argument("compute_automorphisms: bad arity");
  Prefilter filter(spec, table);

  AutGroup group;
  group.candidates = 1;
  for (std::size_t i = 0; i < k; ++i) group.candidates *= n - i;

  std::vector<std::vector<std::vector<std::size_t>>> passed(n);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  parallel_for(n, workers, [&](std::size_t first) {
    std::vector<std::size_t> tuple{pool[first]};
    std::vector<bool> taken(n, false);
    taken[first] = true;
    auto& out = passed[first];
    // Depth-first over the remaining positions.
    auto rec = [&](auto&& self) -> void {
      if (tuple.size() == k) {
        if (filter(AutCandidate{tuple})) out.push_back(tuple);
        return;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (taken[j]) continue;
        taken[j] = true;
        tuple.push_back(pool[j]);
        self(self);
        tuple.pop_back();
        taken[j] = false;
      }
    };
    rec(rec);
    std::size_t d = ++done;
    if (progress) {
      std::lock_guard<std::mutex> lock(progress_mu);
      progress(d, n);
    }
  });

  std::vector<std::vector<std::size_t>> survivors;
  for (auto& p : passed) {
    for (auto& t : p) survivors.push_back(std::move(t));
  }
  group.prefilter_passed = survivors.size();
  std::vector<char> confirmed(survivors.size(), 0);
  parallel_for(survivors.size(), workers,
               [&](std::size_t i) { confirmed[i] = confirm(spec, table, AutCandidate{survivors[i]}) ? 1 : 0; });
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (!confirmed[i]) continue;
    AutCandidate cand{survivors[i]};
    group.members.push_back({survivors[i], induced_permutation(spec, table, cand)});
  }
  std::sort(group.members.begin(), group.members.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.images < b.images; });
  return group;
}

GroupCheck check_group(const PartialFieldSpec& spec, const FundamentalTable& table, const AutGroup& group,
                       std::size_t exhaustive_limit, std::size_t sample_pairs, std::uint64_t seed) {
  GroupCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    if (out.failures.size() < 20) out.failures.push_back(std::move(msg));
  };
  auto label = [&](const std::vector<std::size_t>& images) {
    std::string s = "(";
    for (std::size_t v = 0; v < images.size(); ++v) {
      s += (v ? ", " : "") + spec.variables[v] + " -> " + spec.format(table[images[v]].value);
    }
    return s + ")";
  };
  const std::size_t n = group.members.size();
  if (n == 0) {
    fail("automorphism group is empty");
    return out;
  }

  std::vector<std::size_t> identity;
  for (const auto& v : spec.variable_elements()) {
    auto idx = find_fundamental(spec, table, v);
    if (!idx) {
      fail("variable is not a fundamental element");
      return out;
    }
    identity.push_back(*idx);
  }
  if (!group.find(identity)) fail("identity is not among the automorphisms");

  std::set<Permutation> perms;
  std::map<Permutation, std::size_t> by_perm;
  for (std::size_t i = 0; i < n; ++i) {
    perms.insert(group.members[i].perm);
    by_perm.emplace(group.members[i].perm, i);
  }
  out.perms_distinct = perms.size() == n;
  std::size_t factorial = 1;
  for (std::size_t c = 2; c <= spec.gf5_width(); ++c) factorial *= c;
  out.full_symmetric_group = out.perms_distinct && n == factorial;
  if (!out.perms_distinct) fail("two automorphisms induce the same coordinate permutation");

  auto check_pair = [&](std::size_t a, std::size_t b) {
    const auto& s = group.members[a];
    const auto& t = group.members[b];
    ++out.pairs_checked;
    auto c = compose(spec, table, s.images, t.images);
    if (!c) {
      fail("composition of " + label(s.images) + " and " + label(t.images) + " leaves the fundamentals");
      return;
    }
    auto idx = group.find(*c);
    if (!idx) {
      fail("composition of " + label(s.images) + " and " + label(t.images) + " is " + label(*c) +
           ", not an automorphism");
      return;
    }
    if (group.members[*idx].perm != compose_perm(t.perm, s.perm)) {
      fail("permutation of " + label(*c) + " is not the product of its factors' permutations");
    }
  };
  if (n <= exhaustive_limit) {
    out.exhaustive = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < sample_pairs; ++i) check_pair(pick(rng), pick(rng));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& s = group.members[a];
    auto it = by_perm.find(inverse_perm(s.perm));
    if (it == by_perm.end()) {
      fail("no automorphism induces the inverse permutation of " + label(s.images));
      continue;
    }
    auto c = compose(spec, table, s.images, group.members[it->second].images);
    if (!c || *c != identity) fail("automorphism " + label(s.images) + " has no inverse in the group");
  }
  return out;
}

}  // namespace hydra
