#pragma once

// Brute-force reference computations that share no code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = (static_cast<std::uint64_t>(z) & kP) + static_cast<std::uint64_t>(z >> 61);
  return r >= kP ? r - kP : r;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % kP; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kP - b) % kP; }
inline std::uint64_t pw(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mul(b, b)) {
    if (e & 1) r = mul(r, b);
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pw(a, kP - 2); }

// Values at two evaluation points identify a rational function with high
// probability.
using Key = std::pair<std::uint64_t, std::uint64_t>;
using Gens = std::vector<std::function<std::uint64_t(const std::vector<std::uint64_t>&)>>;

struct Field {
  Gens gens;                                  // every generator except -1
  std::array<std::vector<std::uint64_t>, 2> points;
  std::vector<int> bound;                      // enumerate exponents in [-bound, bound]
};

struct Unit {
  int sign;
  std::vector<int> exps;
};

inline Key key_of(const std::array<std::vector<std::uint64_t>, 2>& gen_vals, const Unit& u) {
  std::array<std::uint64_t, 2> k{};
  for (int t = 0; t < 2; ++t) {
    std::uint64_t v = u.sign < 0 ? kP - 1 : 1;
    for (std::size_t g = 0; g < u.exps.size(); ++g) {
      int e = u.exps[g];
      std::uint64_t b = e >= 0 ? gen_vals[t][g] : inv(gen_vals[t][g]);
      v = mul(v, pw(b, static_cast<std::uint64_t>(std::abs(e))));
    }
    k[t] = v;
  }
  return {k[0], k[1]};
}

inline std::array<std::vector<std::uint64_t>, 2> gen_values(const Field& f,
                                                            const std::array<std::vector<std::uint64_t>, 2>& pts) {
  std::array<std::vector<std::uint64_t>, 2> out;
  for (int t = 0; t < 2; ++t) {
    for (const auto& g : f.gens) out[t].push_back(g(pts[t]));
  }
  return out;
}

struct Fundamentals {
  std::size_t candidates = 0;     // units enumerated in the box
  bool injective = true;          // no two units share a key
  std::vector<Unit> units;        // fundamentals other than 0
  std::set<Key> keys;             // fundamental keys, including 0
};

// Every unit in the box whose complement is a unit in the box or zero.
inline Fundamentals fundamentals(const Field& f) {
  auto vals = gen_values(f, f.points);
  std::size_t n = f.gens.size();
  // powers[t][g][e + bound] = gens[g]^e at point t
  std::array<std::vector<std::vector<std::uint64_t>>, 2> powers;
  for (int t = 0; t < 2; ++t) {
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::uint64_t> row;
      for (int e = -f.bound[g]; e <= f.bound[g]; ++e) {
        row.push_back(pw(e >= 0 ? vals[t][g] : inv(vals[t][g]), static_cast<std::uint64_t>(std::abs(e))));
      }
      powers[t].push_back(std::move(row));
    }
  }
  std::vector<Key> all;
  std::vector<int> e(n);
  for (std::size_t g = 0; g < n; ++g) e[g] = -f.bound[g];
  for (;;) {
    std::uint64_t k0 = 1;
    std::uint64_t k1 = 1;
    for (std::size_t g = 0; g < n; ++g) {
      k0 = mul(k0, powers[0][g][e[g] + f.bound[g]]);
      k1 = mul(k1, powers[1][g][e[g] + f.bound[g]]);
    }
    all.push_back({k0, k1});
    all.push_back({kP - k0, kP - k1});
    std::size_t g = n;
    while (g > 0 && e[g - 1] == f.bound[g - 1]) {
      e[g - 1] = -f.bound[g - 1];
      --g;
    }
    if (g == 0) break;
    ++e[g - 1];
  }
  Fundamentals out;
  out.candidates = all.size();
  std::vector<Key> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  auto present = [&](const Key& k) { return k == Key{0, 0} || std::binary_search(sorted.begin(), sorted.end(), k); };
  out.keys.insert({0, 0});
  // Decode each fundamental's exponents from its position in enumeration order.
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const Key& k = all[idx];
    if (!present({sub(1, k.first), sub(1, k.second)})) continue;
    Unit u{idx % 2 == 0 ? 1 : -1, std::vector<int>(n)};
    std::size_t code = idx / 2;
    for (std::size_t g = n; g-- > 0;) {
      std::size_t width = 2 * f.bound[g] + 1;
      u.exps[g] = static_cast<int>(code % width) - f.bound[g];
      code /= width;
    }
    out.units.push_back(std::move(u));
    out.keys.insert(k);
  }
  return out;
}

// Ordered pairs (p, q) of distinct fundamentals other than 0 and 1 with p/q
// fundamental.
inline std::size_t u25_count(const std::set<Key>& keys) {
  std::vector<Key> pool;
  for (const auto& k : keys) {
    if (k != Key{0, 0} && k != Key{1, 1}) pool.push_back(k);
  }
  std::size_t n = 0;
  for (const auto& p : pool) {
    for (const auto& q : pool) {
      if (p == q) continue;
      if (keys.count({mul(p.first, inv(q.first)), mul(p.second, inv(q.second))})) ++n;
    }
  }
  return n;
}

// Substitutions sending each variable to a fundamental other than 0 and 1
// under which every fundamental maps to a fundamental.
inline std::size_t automorphism_count(const Field& f, const Fundamentals& funs) {
  std::vector<Key> pool;
  for (const auto& k : funs.keys) {
    if (k != Key{0, 0} && k != Key{1, 1}) pool.push_back(k);
  }
  std::size_t nvars = f.points[0].size();
  std::vector<std::size_t> pick(nvars, 0);
  std::size_t count = 0;
  for (;;) {
    std::array<std::vector<std::uint64_t>, 2> pts;
    for (int t = 0; t < 2; ++t) {
      for (auto idx : pick) pts[t].push_back(t == 0 ? pool[idx].first : pool[idx].second);
    }
    auto vals = gen_values(f, pts);
    bool ok = true;
    for (int t = 0; t < 2 && ok; ++t) {
      for (auto v : vals[t]) ok = ok && v != 0;
    }
    for (std::size_t i = 0; ok && i < funs.units.size(); ++i) ok = funs.keys.count(key_of(vals, funs.units[i])) > 0;
    count += ok;
    std::size_t v = nvars;
    while (v > 0 && pick[v - 1] + 1 == pool.size()) pick[--v] = 0;
    if (v == 0) break;
    ++pick[v - 1];
  }
  return count;
}

inline Field h3() {
  return {{[](const auto& x) { return x[0]; },
           [](const auto& x) { return sub(1, x[0]); },
           [](const auto& x) { return add(sub(mul(x[0], x[0]), x[0]), 1); }},
          {{{1234567}, {987654321}}},
          {4, 4, 4}};
}

inline Field h4() {
  return {{[](const auto& x) { return x[0]; },
           [](const auto& x) { return x[1]; },
           [](const auto& x) { return sub(1, x[0]); },
           [](const auto& x) { return sub(1, x[1]); },
           [](const auto& x) { return sub(mul(x[0], x[1]), 1); },
           [](const auto& x) { return sub(add(x[0], x[1]), mul(2, mul(x[0], x[1]))); }},
          {{{1234567, 7654321}, {987654321, 123123123}}},
          {3, 3, 3, 3, 3, 3}};
}

inline Field h5() {
  return {{[](const auto& x) { return x[0]; },
           [](const auto& x) { return x[1]; },
           [](const auto& x) { return x[2]; },
           [](const auto& x) { return sub(1, x[0]); },
           [](const auto& x) { return sub(1, x[1]); },
           [](const auto& x) { return sub(1, x[2]); },
           [](const auto& x) { return sub(x[0], x[2]); },
           [](const auto& x) { return sub(x[2], mul(x[0], x[1])); },
           [](const auto& x) { return sub(sub(1, x[2]), mul(sub(1, x[0]), x[1])); }},
          {{{1234567, 7654321, 55555333}, {987654321, 123123123, 31415926}}},
          {2, 2, 2, 2, 2, 2, 2, 2, 2}};
}

// Gaussian dyadic numbers held exactly in doubles (small exponents only).
using C = std::complex<double>;

inline bool is_gauss_unit(C z) {
  double n = z.real() * z.real() + z.imag() * z.imag();
  if (n == 0) return false;
  int e;
  return std::frexp(n, &e) == 0.5;
}

inline C divide(C a, C b) {
  double n = b.real() * b.real() + b.imag() * b.imag();
  C num = a * std::conj(b);
  return {num.real() / n, num.imag() / n};
}

// Units u of Z[1/2, i] with 1 - u a unit or zero, plus 0.
inline std::vector<C> h2_fundamentals() {
  std::set<std::pair<double, double>> seen;
  std::vector<C> out{C(0, 0)};
  const C units[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  for (const auto& u : units) {
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) {
        C z = u * std::ldexp(1.0, a);
        for (int k = 0; k < std::abs(b); ++k) z = b > 0 ? z * C(1, 1) : divide(z, C(1, 1));
        C w = C(1, 0) - z;
        if ((w == C(0, 0) || is_gauss_unit(w)) && seen.insert({z.real(), z.imag()}).second) out.push_back(z);
      }
    }
  }
  return out;
}

inline std::size_t h2_u25_count(const std::vector<C>& funs) {
  auto member = [&](C z) { return std::find(funs.begin(), funs.end(), z) != funs.end(); };
  std::size_t n = 0;
  for (C p : funs) {
    for (C q : funs) {
      if (p == q || p == C(0, 0) || q == C(0, 0) || p == C(1, 0) || q == C(1, 0)) continue;
      if (member(divide(p, q))) ++n;
    }
  }
  return n;
}

// Tuples over {2,3,4} of length m with no value three or more times, plus
// the constant 0 and 1 tuples, counted by brute force.
inline std::size_t domain_size(std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  std::size_t n = 2;
  for (std::size_t code = 0; code < total; ++code) {
    int counts[3] = {0, 0, 0};
    for (std::size_t c = code, i = 0; i < m; ++i, c /= 3) ++counts[c % 3];
    if (counts[0] < 3 && counts[1] < 3 && counts[2] < 3) ++n;
  }
  return n;
}

// Falling factorial 6 (6-1) ... (6-m+1).
inline std::size_t arrangements_of_six(std::size_t m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) n *= 6 - i;
  return n;
}

}  // namespace oracle
