#include "hydra/sieve.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace hydra {

std::size_t CandidateBox::count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return n;
}

std::vector<ConstraintRow> lognorm_rows(const PartialFieldSpec& spec) {
  std::vector<ConstraintRow> rows;
  for (std::size_t h = 0; h < spec.h2_homs.size(); ++h) {
    const auto& images = spec.h2_homs[h];
    ConstraintRow row;
    for (std::size_t g = 0; g < spec.generator_count(); ++g) {
      GaussDyadic v = eval_expr<GaussDyadic>(
          *spec.generator_expr[g],
          [&](const std::string& name) {
            for (std::size_t i = 0; i < spec.variables.size(); ++i) {
              if (spec.variables[i] == name) return images[i];
            }
            throw SpecError("unknown variable " + name);
          },
          [](const mpz_class& n) { return GaussDyadic(n, 0); });
      if (v.is_zero() || !v.is_unit()) {
        throw SpecError("spec " + spec.name + ": h2 homomorphism " + std::to_string(h + 1) + " sends generator " +
                        spec.generator_text[g] + " to " + v.to_string() + ", which is not a unit of H2");
      }
      row.coeffs.emplace_back(v.log2_norm(), 2);
      row.coeffs.back().canonicalize();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Next point in odometer order, last coordinate fastest; false after the last.
bool advance(std::vector<int>& x, const std::vector<int>& lo, const std::vector<int>& hi) {
  for (std::size_t v = x.size(); v > 0; --v) {
    if (x[v - 1] < hi[v - 1]) {
      ++x[v - 1];
      return true;
    }
    x[v - 1] = lo[v - 1];
  }
  return false;
}

mpz_class lcm_of_denominators(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  return l;
}

}  // namespace

ExponentBounds bound_exponents(const std::vector<ConstraintRow>& rows, const std::vector<ExtraBound>& extra,
                               std::size_t sign_slot, LpMode mode) {
  if (rows.empty()) throw std::invalid_argument("bound_exponents: no constraint rows");
  std::size_t slots = rows[0].coeffs.size();
  // LP variables are the generator slots other than the sign slot.
  std::vector<std::size_t> var_slot;
  for (std::size_t s = 0; s < slots; ++s) {
    if (s != sign_slot) var_slot.push_back(s);
  }
  std::size_t n = var_slot.size();
  std::vector<LinearInequality> system;
  for (const auto& r : rows) {
    if (r.coeffs.size() != slots) throw std::invalid_argument("bound_exponents: ragged rows");
    LinearInequality up;
    LinearInequality down;
    for (std::size_t v = 0; v < n; ++v) {
      up.coeffs.push_back(r.coeffs[var_slot[v]]);
      down.coeffs.push_back(-r.coeffs[var_slot[v]]);
    }
    up.bound = 1;
    down.bound = 1;
    system.push_back(std::move(up));
    system.push_back(std::move(down));
  }
  for (const auto& b : extra) {
    auto it = std::find(var_slot.begin(), var_slot.end(), b.generator);
    if (it == var_slot.end()) throw std::invalid_argument("bound_exponents: extra bound on the sign slot");
    auto v = static_cast<std::size_t>(it - var_slot.begin());
    LinearInequality up{std::vector<mpq_class>(n, 0), b.hi};
    LinearInequality down{std::vector<mpq_class>(n, 0), -b.lo};
    up.coeffs[v] = 1;
    down.coeffs[v] = -1;
    system.push_back(std::move(up));
    system.push_back(std::move(down));
  }

  ExponentBounds out;
  out.real.resize(slots);
  out.box.lo.assign(slots, 0);
  out.box.hi.assign(slots, 0);
  out.real[sign_slot] = Interval{mpq_class(0), mpq_class(1)};
  out.box.hi[sign_slot] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    Interval iv = fm_project(system, v);
    if (!iv.lo || !iv.hi) {
      throw std::runtime_error("bound_exponents: exponent slot " + std::to_string(var_slot[v]) + " is unbounded");
    }
    out.real[var_slot[v]] = iv;
    mpz_class lo;
    mpz_class hi;
    mpz_cdiv_q(lo.get_mpz_t(), iv.lo->get_num_mpz_t(), iv.lo->get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), iv.hi->get_num_mpz_t(), iv.hi->get_den_mpz_t());
    out.box.lo[var_slot[v]] = static_cast<int>(lo.get_si());
    out.box.hi[var_slot[v]] = static_cast<int>(hi.get_si());
  }
  if (mode == LpMode::Reals) return out;

  // Integer mode: scan lattice points of the real box and keep the extremes
  // attained by feasible points.
  constexpr std::size_t kMaxLattice = 50'000'000;
  std::size_t volume = 1;
  for (std::size_t v = 0; v < n; ++v) {
    volume *= static_cast<std::size_t>(out.box.hi[var_slot[v]] - out.box.lo[var_slot[v]] + 1);
    if (volume > kMaxLattice) throw std::runtime_error("bound_exponents: lattice box too large for integer mode");
  }
  std::vector<std::vector<long>> a;
  std::vector<long> b;
  for (const auto& ineq : system) {
    mpz_class l = lcm_of_denominators(ineq.coeffs);
    l = lcm(l, mpz_class(ineq.bound.get_den()));
    std::vector<long> row;
    for (const auto& c : ineq.coeffs) row.push_back(mpz_class(c * l).get_si());
    a.push_back(std::move(row));
    b.push_back(mpz_class(ineq.bound * l).get_si());
  }
  std::vector<int> lattice_lo(n);
  std::vector<int> lattice_hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    lattice_lo[v] = out.box.lo[var_slot[v]];
    lattice_hi[v] = out.box.hi[var_slot[v]];
  }
  std::vector<int> x = lattice_lo;
  std::vector<int> best_lo(n, INT32_MAX);
  std::vector<int> best_hi(n, INT32_MIN);
  bool any = false;
  for (;;) {
    bool feasible = true;
    for (std::size_t r = 0; r < a.size() && feasible; ++r) {
      long s = 0;
      for (std::size_t v = 0; v < n; ++v) s += a[r][v] * x[v];
      feasible = s <= b[r];
    }
    if (feasible) {
      any = true;
      for (std::size_t v = 0; v < n; ++v) {
        best_lo[v] = std::min(best_lo[v], x[v]);
        best_hi[v] = std::max(best_hi[v], x[v]);
      }
    }
    if (!advance(x, lattice_lo, lattice_hi)) break;
  }
  if (!any) throw InfeasibleSystem("bound_exponents: no lattice point satisfies the constraints");
  for (std::size_t v = 0; v < n; ++v) {
    out.box.lo[var_slot[v]] = best_lo[v];
    out.box.hi[var_slot[v]] = best_hi[v];
  }
  return out;
}

ExponentBounds bound_exponents(const PartialFieldSpec& spec) {
  return bound_exponents(lognorm_rows(spec), spec.extra_bounds, spec.minus_one_index, spec.lp_mode);
}

std::vector<std::vector<int>> enumerate_candidates(const CandidateBox& box) {
  std::vector<std::vector<int>> out;
  std::size_t n = box.lo.size();
  if (n == 0) return out;
  out.reserve(box.count());
  std::vector<int> x = box.lo;
  do {
    out.push_back(x);
  } while (advance(x, box.lo, box.hi));
  return out;
}

FactoredElement candidate_factored(const PartialFieldSpec& spec, const std::vector<int>& candidate) {
  FactoredElement f{1, candidate};
  if (f.exps[spec.minus_one_index] != 0) f.sign = -1;
  f.exps[spec.minus_one_index] = 0;
  if (spec.ground == Ground::GaussianDyadic) return spec.normalize(std::move(f));
  return f;
}

namespace {

SieveResult sieve_exact(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates) {
  SieveResult r;
  r.exact = true;
  r.prime = spec.prime;
  r.generator_residues = spec.generator_residues(spec.prime);
  r.candidate_count = candidates.size();
  std::map<GaussDyadic, std::size_t> first;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    GaussDyadic v = spec.expand(candidate_factored(spec, candidates[c])).gauss();
    r.residues.push_back(v.eval_mod(spec.prime, spec.variable_residues[0]));
    first.emplace(v, c);
  }
  r.distinct_values = first.size() + (first.count(GaussDyadic(0)) ? 0 : 1);
  auto present = [&](const GaussDyadic& v) { return v.is_zero() || first.count(v) > 0; };
  if (present(GaussDyadic(1))) r.survivors.push_back({0, std::nullopt});
  for (const auto& [v, c] : first) {
    if (present(GaussDyadic(1) - v)) r.survivors.push_back({v.eval_mod(spec.prime, spec.variable_residues[0]), c});
  }
  // Table order for the Gaussian ground ring is by value.
  std::sort(r.survivors.begin(), r.survivors.end(), [&](const SieveSurvivor& a, const SieveSurvivor& b) {
    auto value = [&](const SieveSurvivor& s) {
      return s.candidate ? spec.expand(candidate_factored(spec, candidates[*s.candidate])).gauss() : GaussDyadic(0);
    };
    return value(a) < value(b);
  });
  return r;
}

}  // namespace

SieveResult fingerprint_sieve(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates,
                              std::optional<std::uint64_t> prime_start) {
  if (spec.ground == Ground::GaussianDyadic) return sieve_exact(spec, candidates);
  constexpr int kMaxPrimes = 64;
  std::uint64_t p = prime_start.value_or(spec.prime);
  if (!is_prime_u64(p)) p = next_prime_u64(p);
  SieveResult r;
  r.candidate_count = candidates.size();
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt, p = next_prime_u64(p)) {
    std::vector<std::uint64_t> gens;
    try {
      gens = spec.generator_residues(p);
    } catch (const SpecError&) {
      r.rejected_primes.push_back(p);
      continue;
    }
    if (std::count(gens.begin(), gens.end(), 0u) > 0) {
      r.rejected_primes.push_back(p);
      continue;
    }
    ModMap map(p, gens);
    std::vector<std::uint64_t> residues(candidates.size());
    std::unordered_set<std::uint64_t> image;
    image.reserve(candidates.size() * 2);
    image.insert(0);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      FactoredElement f = candidate_factored(spec, candidates[c]);
      residues[c] = *map.eval(f.sign, f.exps);
      image.insert(residues[c]);
    }
    if (image.size() != candidates.size() + 1) {
      r.rejected_primes.push_back(p);
      continue;
    }
    r.prime = p;
    r.generator_residues = std::move(gens);
    r.distinct_values = image.size();
    r.residues = std::move(residues);
    r.survivors.push_back({0, std::nullopt});
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::uint64_t partner = submod(1, r.residues[c], p);
      if (image.count(partner)) r.survivors.push_back({r.residues[c], c});
    }
    std::sort(r.survivors.begin(), r.survivors.end(),
              [](const SieveSurvivor& a, const SieveSurvivor& b) { return a.fingerprint < b.fingerprint; });
    if (image.count(1) == 0) r.survivors.erase(r.survivors.begin());
    return r;
  }
  throw std::runtime_error("fingerprint_sieve: no injective prime found after " + std::to_string(kMaxPrimes) +
                           " attempts starting at " + std::to_string(prime_start.value_or(spec.prime)));
}

namespace {

std::string describe_candidate(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates,
                               std::optional<std::size_t> c) {
  if (!c) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < candidates[*c].size(); ++i) s += (i ? "," : "") + std::to_string(candidates[*c][i]);
  return s + ") = " + spec.format(candidate_factored(spec, candidates[*c]));
}

}  // namespace

SurvivorCheck verify_survivors(const PartialFieldSpec& spec, const std::vector<std::vector<int>>& candidates,
                               const SieveResult& sieve, const FundamentalTable& table) {
  SurvivorCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.failures.push_back(std::move(msg));
  };
  if (sieve.survivors.size() != table.size()) {
    fail("survivor count " + std::to_string(sieve.survivors.size()) + " differs from fundamental table size " +
         std::to_string(table.size()));
  }
  std::uint64_t p = sieve.prime;
  auto value_of = [&](std::optional<std::size_t> c) {
    return c ? spec.expand(candidate_factored(spec, candidates[*c])) : spec.zero();
  };

  // Partner lookup: residue -> candidate. For the exact sieve values are
  // compared directly.
  std::unordered_map<std::uint64_t, std::size_t> by_residue;
  if (!sieve.exact) {
    for (std::size_t c = 0; c < sieve.residues.size(); ++c) by_residue.emplace(sieve.residues[c], c);
  }
  const Element one = spec.one();
  for (const auto& s : sieve.survivors) {
    Element v = value_of(s.candidate);
    Element complement = one - v;
    ++out.exact_checks;
    if (sieve.exact) {
      if (!complement.is_zero() && !spec.factor(complement)) {
        fail("1 - " + describe_candidate(spec, candidates, s.candidate) + " is not a unit");
      }
      continue;
    }
    std::uint64_t partner_fp = submod(1, s.fingerprint, p);
    std::optional<std::size_t> partner;
    if (partner_fp != 0) {
      auto it = by_residue.find(partner_fp);
      if (it == by_residue.end()) {
        fail("survivor with fingerprint " + std::to_string(s.fingerprint) + " (" +
             describe_candidate(spec, candidates, s.candidate) + ") has no candidate at fingerprint " +
             std::to_string(partner_fp));
        continue;
      }
      partner = it->second;
    }
    if (!(complement == value_of(partner))) {
      fail("modular coincidence: 1 - " + describe_candidate(spec, candidates, s.candidate) +
           " differs from candidate " + describe_candidate(spec, candidates, partner) + " sharing fingerprint " +
           std::to_string(partner_fp));
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> survivor_at;
  for (std::size_t i = 0; i < sieve.survivors.size(); ++i) survivor_at.emplace(sieve.survivors[i].fingerprint, i);
  std::unordered_set<std::uint64_t> matched;
  for (std::size_t t = 0; t < table.size(); ++t) {
    auto fp = spec.fingerprint(table[t].value, p);
    auto it = fp ? survivor_at.find(*fp) : survivor_at.end();
    if (it == survivor_at.end()) {
      fail("table entry " + spec.format(table[t].value) + " has no surviving candidate");
      continue;
    }
    matched.insert(*fp);
    if (!(value_of(sieve.survivors[it->second].candidate) == table[t].value)) {
      fail("table entry " + spec.format(table[t].value) + " and survivor " +
           describe_candidate(spec, candidates, sieve.survivors[it->second].candidate) +
           " share a fingerprint but differ");
    }
  }
  for (const auto& s : sieve.survivors) {
    if (!matched.count(s.fingerprint)) {
      fail("survivor " + describe_candidate(spec, candidates, s.candidate) + " with fingerprint " +
           std::to_string(s.fingerprint) + " matches no table entry");
    }
  }
  return out;
}

}  // namespace hydra
