#include "hydra/fourier_motzkin.hpp"

#include <bit>
#include <map>

namespace hydra {

namespace {

// Set of original inequalities a derived row was combined from.
class History {
 public:
  explicit History(std::size_t words = 0) : w_(words, 0) {}
  static History single(std::size_t words, std::size_t index) {
    History h(words);
    h.w_[index / 64] |= std::uint64_t{1} << (index % 64);
    return h;
  }
  History operator|(const History& o) const {
    History h = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) h.w_[i] |= o.w_[i];
    return h;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto x : w_) n += static_cast<std::size_t>(std::popcount(x));
    return n;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Bound {
  mpq_class rhs;
  History history;
};

using RowSet = std::map<std::vector<mpq_class>, Bound>;

// Scales the row so its largest coefficient has absolute value one and keeps
// the tighter of two parallel rows.
void insert_row(RowSet& rows, std::vector<mpq_class> a, mpq_class b, History h) {
  mpq_class m = 0;
  for (const auto& x : a) m = std::max(m, mpq_class(abs(x)));
  if (m == 0) {
    if (b < 0) throw InfeasibleSystem("linear system is infeasible");
    return;
  }
  for (auto& x : a) x /= m;
  b /= m;
  auto it = rows.find(a);
  if (it == rows.end()) {
    rows.emplace(std::move(a), Bound{std::move(b), std::move(h)});
  } else if (b < it->second.rhs || (b == it->second.rhs && h.count() < it->second.history.count())) {
    it->second = Bound{std::move(b), std::move(h)};
  }
}

RowSet eliminate(const RowSet& rows, std::size_t var, std::size_t eliminated) {
  RowSet out;
  std::vector<RowSet::const_iterator> pos;
  std::vector<RowSet::const_iterator> neg;
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    int s = sgn(it->first[var]);
    if (s > 0) {
      pos.push_back(it);
    } else if (s < 0) {
      neg.push_back(it);
    } else {
      out.emplace(it->first, it->second);
    }
  }
  for (auto p : pos) {
    for (auto n : neg) {
      History h = p->second.history | n->second.history;
      if (h.count() > eliminated + 1) continue;
      mpq_class lp = -n->first[var];
      mpq_class ln = p->first[var];
      std::vector<mpq_class> a(p->first.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = p->first[i] * lp + n->first[i] * ln;
      a[var] = 0;
      insert_row(out, std::move(a), p->second.rhs * lp + n->second.rhs * ln, std::move(h));
    }
  }
  return out;
}

}  // namespace

Interval fm_project(const std::vector<LinearInequality>& system, std::size_t target) {
  if (system.empty()) return {};
  std::size_t n = system[0].coeffs.size();
  if (target >= n) throw std::out_of_range("fm_project: target out of range");
  std::size_t words = (system.size() + 63) / 64;
  RowSet rows;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].coeffs.size() != n) throw std::invalid_argument("fm_project: ragged system");
    insert_row(rows, system[i].coeffs, system[i].bound, History::single(words, i));
  }
  std::size_t eliminated = 0;
  for (std::size_t var = 0; var < n; ++var) {
    if (var == target) continue;
    rows = eliminate(rows, var, ++eliminated);
  }
  Interval result;
  for (const auto& [a, bound] : rows) {
    const mpq_class& c = a[target];
    if (c > 0) {
      mpq_class v = bound.rhs / c;
      if (!result.hi || v < *result.hi) result.hi = v;
    } else if (c < 0) {
      mpq_class v = bound.rhs / c;
      if (!result.lo || v > *result.lo) result.lo = v;
    }
  }
  if (result.lo && result.hi && *result.lo > *result.hi) throw InfeasibleSystem("linear system is infeasible");
  return result;
}

}  // namespace hydra
