#include "hydra/poly.hpp"

#include "hydra/modular.hpp"
#include "hydra/ratfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hydra {

namespace {

constexpr int kFieldBits = 16;
constexpr std::uint64_t kFieldMask = 0xffff;

int field_shift(int var) { return kFieldBits * (kMaxVariables - 1 - var); }

}  // namespace

Monomial make_monomial(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::invalid_argument("monomial: too many variables");
  }
  std::uint64_t total = 0;
  Monomial m = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] < 0 || exps[v] > static_cast<int>(kFieldMask)) {
      throw std::overflow_error("monomial: exponent out of range");
    }
    total += static_cast<std::uint64_t>(exps[v]);
    m |= static_cast<std::uint64_t>(exps[v]) << field_shift(static_cast<int>(v));
  }
  if (total > kFieldMask) throw std::overflow_error("monomial: degree out of range");
  return m | (total << (kFieldBits * kMaxVariables));
}

int monomial_exp(Monomial m, int var) {
  return static_cast<int>((m >> field_shift(var)) & kFieldMask);
}

int monomial_degree(Monomial m) {
  return static_cast<int>(m >> (kFieldBits * kMaxVariables));
}

Monomial monomial_mul(Monomial a, Monomial b) {
  if (monomial_degree(a) + monomial_degree(b) > static_cast<int>(kFieldMask)) {
    throw std::overflow_error("monomial: degree out of range");
  }
  return a + b;
}

bool monomial_divides(Monomial a, Monomial b) {
  for (int v = 0; v < kMaxVariables; ++v) {
    if (monomial_exp(a, v) > monomial_exp(b, v)) return false;
  }
  return true;
}

Monomial monomial_div(Monomial a, Monomial b) { return a - b; }

Poly::Poly(int arity, const mpz_class& c) : arity_(arity) {
  if (c != 0) terms_.push_back({0, c});
}

Poly Poly::variable(int arity, int var) {
  if (var < 0 || var >= arity || arity > kMaxVariables) {
    throw std::out_of_range("poly: variable index out of range");
  }
  std::vector<int> exps(static_cast<std::size_t>(arity), 0);
  exps[static_cast<std::size_t>(var)] = 1;
  Poly p(arity);
  p.terms_.push_back({make_monomial(exps), 1});
  return p;
}

Poly Poly::from_terms(int arity, std::vector<Term> terms) {
  Poly p(arity);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0);
}

mpz_class Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("poly: not a constant");
  return terms_.empty() ? mpz_class(0) : terms_[0].coeff;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, monomial_exp(t.mono, var));
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : monomial_degree(terms_[0].mono); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, negate_b ? mpz_class(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      mpz_class c = negate_b ? mpz_class(a[i].coeff - b[j].coeff) : mpz_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_arity(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("poly: arity mismatch");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_arity(a, b);
  Poly r(a.arity_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      r.terms_.push_back({monomial_mul(s.mono, t.mono), s.coeff * t.coeff});
    }
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return Poly(arity_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(arity_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  check_arity(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("poly: division by zero");
  Poly rem = *this;
  Poly quot(arity_);
  const Term& lead = divisor.leading();
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!monomial_divides(lead.mono, r.mono)) return std::nullopt;
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Term q{monomial_div(r.mono, lead.mono), r.coeff / lead.coeff};
    Poly step = Poly::from_terms(arity_, {q});
    rem -= step * divisor;
    quot.terms_.push_back(std::move(q));
  }
  quot.normalize();
  return quot;
}

std::uint64_t Poly::eval_mod(std::uint64_t p, std::span<const std::uint64_t> residues) const {
  if (residues.size() < static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("poly: too few residues");
  }
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = mpz_mod_u64(t.coeff, p);
    for (int var = 0; var < arity_; ++var) {
      int e = monomial_exp(t.mono, var);
      if (e > 0) v = mulmod(v, powmod(residues[static_cast<std::size_t>(var)], static_cast<std::uint64_t>(e), p), p);
    }
    acc = addmod(acc, v, p);
  }
  return acc;
}

RatFunc Poly::substitute(std::span<const RatFunc> images) const {
  if (images.size() != static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("poly: substitution arity mismatch");
  }
  int out_arity = images.empty() ? 0 : images[0].arity();
  std::vector<int> max_deg(static_cast<std::size_t>(arity_));
  for (int v = 0; v < arity_; ++v) max_deg[static_cast<std::size_t>(v)] = degree_in(v);

  // Powers of each image numerator and denominator up to the needed degree.
  std::vector<std::vector<Poly>> num_pows(images.size());
  std::vector<std::vector<Poly>> den_pows(images.size());
  for (std::size_t v = 0; v < images.size(); ++v) {
    num_pows[v].push_back(Poly(out_arity, 1));
    den_pows[v].push_back(Poly(out_arity, 1));
    for (int d = 1; d <= max_deg[v]; ++d) {
      num_pows[v].push_back(num_pows[v].back() * images[v].num());
      den_pows[v].push_back(den_pows[v].back() * images[v].den());
    }
  }
  Poly num(out_arity);
  for (const auto& t : terms_) {
    Poly term(out_arity, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      int e = monomial_exp(t.mono, static_cast<int>(v));
      term *= num_pows[v][static_cast<std::size_t>(e)];
      term *= den_pows[v][static_cast<std::size_t>(max_deg[v] - e)];
    }
    num += term;
  }
  Poly den(out_arity, 1);
  for (std::size_t v = 0; v < images.size(); ++v) den *= den_pows[v][static_cast<std::size_t>(max_deg[v])];
  return RatFunc(std::move(num), std::move(den));
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.mono == 0) {
      os << c.get_str();
      printed = true;
    }
    for (int v = 0; v < arity_; ++v) {
      int e = monomial_exp(t.mono, v);
      if (e == 0) continue;
      if (printed) os << "*";
      os << names[static_cast<std::size_t>(v)];
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace hydra
