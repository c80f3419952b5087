#include "hydra/pfield.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

namespace hydra {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::string t = trim(s.substr(start, i - start));
      if (!t.empty()) out.push_back(t);
      start = i + 1;
    }
  }
  return out;
}

template <class Int>
Int parse_int(const std::string& s, const std::string& what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw SpecError("bad integer for " + what + ": '" + s + "'");
  return v;
}

// Splits "name = value" into its two halves.
std::pair<std::string, std::string> split_binding(const std::string& s, const std::string& what) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw SpecError(what + ": expected 'name = value', got '" + s + "'");
  return {trim(std::string_view(s).substr(0, eq)), trim(std::string_view(s).substr(eq + 1))};
}

}  // namespace

PartialFieldSpec parse_spec(std::string_view text) {
  PartialFieldSpec spec;
  std::map<std::string, GFTuple> gf5;
  std::map<std::string, std::uint64_t> residues;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    auto where = "line " + std::to_string(line_no) + " (" + key + ")";
    try {
      if (key == "name") {
        spec.name = rest;
      } else if (key == "ground") {
        if (rest == "rational") {
          spec.ground = Ground::RationalFunction;
        } else if (rest == "gaussian") {
          spec.ground = Ground::GaussianDyadic;
        } else {
          throw SpecError("unknown ground ring '" + rest + "'");
        }
      } else if (key == "variables") {
        spec.variables = split(rest, ' ');
      } else if (key == "generators") {
        spec.generator_text = split(rest, ';');
      } else if (key == "seeds") {
        spec.seed_text = split(rest, ';');
      } else if (key == "gf5") {
        auto [var, coords] = split_binding(rest, "gf5");
        std::vector<int> values;
        for (const auto& c : split(coords, ',')) values.push_back(parse_int<int>(c, "gf5 coordinate"));
        gf5[var] = GFTuple(values);
      } else if (key == "lift_width") {
        spec.lift_width = parse_int<std::size_t>(rest, "lift_width");
      } else if (key == "h2") {
        std::map<std::string, std::string> row;
        for (const auto& b : split(rest, ';')) row.insert(split_binding(b, "h2"));
        std::vector<std::string> ordered;
        for (const auto& v : spec.variables) {
          auto it = row.find(v);
          if (it == row.end()) throw SpecError("h2 row misses variable " + v);
          ordered.push_back(it->second);
        }
        if (row.size() != spec.variables.size()) throw SpecError("h2 row names an unknown variable");
        spec.h2_hom_text.push_back(std::move(ordered));
      } else if (key == "bound") {
        auto parts = split(rest, ' ');
        if (parts.size() != 3) throw SpecError("bound expects: generator lo hi");
        spec.extra_bounds.push_back({parse_int<std::size_t>(parts[0], "bound generator"),
                                     parse_int<int>(parts[1], "bound lo"), parse_int<int>(parts[2], "bound hi")});
      } else if (key == "lp") {
        if (rest == "reals") {
          spec.lp_mode = LpMode::Reals;
        } else if (rest == "integers") {
          spec.lp_mode = LpMode::Integers;
        } else {
          throw SpecError("unknown lp mode '" + rest + "'");
        }
      } else if (key == "prime") {
        spec.prime = parse_int<std::uint64_t>(rest, "prime");
      } else if (key == "residue") {
        auto [var, value] = split_binding(rest, "residue");
        residues[var] = parse_int<std::uint64_t>(value, "residue");
      } else if (key == "expect") {
        auto parts = split(rest, ' ');
        if (parts.size() != 2) throw SpecError("expect expects: key count");
        auto n = parse_int<std::size_t>(parts[1], "expect");
        auto& e = spec.expect;
        if (parts[0] == "fundamentals") {
          e.fundamentals = n;
        } else if (parts[0] == "automorphisms") {
          e.automorphisms = n;
        } else if (parts[0] == "u25_pairs") {
          e.u25_pairs = n;
        } else if (parts[0] == "domain") {
          e.domain = n;
        } else if (parts[0] == "candidates") {
          e.candidates = n;
        } else if (parts[0] == "distinct_residues") {
          e.distinct_residues = n;
        } else {
          throw SpecError("unknown expectation '" + parts[0] + "'");
        }
      } else {
        throw SpecError("unknown key");
      }
    } catch (const SpecError& e) {
      throw SpecError("spec " + where + ": " + e.what());
    }
  }
  for (const auto& v : spec.variables) {
    auto g = gf5.find(v);
    if (g == gf5.end()) throw SpecError("spec: no gf5 image for variable " + v);
    spec.gf5_variable_images.push_back(g->second);
    auto r = residues.find(v);
    if (r == residues.end()) throw SpecError("spec: no residue for variable " + v);
    spec.variable_residues.push_back(r->second);
  }
  if (gf5.size() != spec.variables.size() || residues.size() != spec.variables.size()) {
    throw SpecError("spec: gf5 or residue entry names an unknown variable");
  }
  spec.compile();
  return spec;
}

std::size_t PartialFieldSpec::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  throw SpecError("spec " + this->name + ": unknown variable '" + name + "'");
}

Element PartialFieldSpec::constant(const mpz_class& c) const {
  if (ground == Ground::GaussianDyadic) return Element(GaussDyadic(c, 0));
  return Element(RatFunc(arity(), c));
}

Element PartialFieldSpec::variable_element(std::size_t var) const {
  if (ground == Ground::GaussianDyadic) return Element(GaussDyadic::i());
  return Element(RatFunc(Poly::variable(arity(), static_cast<int>(var))));
}

std::vector<Element> PartialFieldSpec::variable_elements() const {
  std::vector<Element> out;
  for (std::size_t v = 0; v < variables.size(); ++v) out.push_back(variable_element(v));
  return out;
}

Element PartialFieldSpec::evaluate(const Expr& e, std::span<const Element> images) const {
  return eval_expr<Element>(
      e, [&](const std::string& name) { return images[variable_index(name)]; },
      [&](const mpz_class& n) { return constant(n); });
}

GFTuple PartialFieldSpec::evaluate_gf5(const Expr& e, std::span<const GFTuple> images) const {
  std::size_t width = images.empty() ? gf5_width() : images[0].width();
  return eval_expr<GFTuple>(
      e, [&](const std::string& name) { return images[variable_index(name)]; },
      [&](const mpz_class& n) { return GFTuple(width, static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 5))); });
}

void PartialFieldSpec::compile() {
  auto fail = [&](const std::string& msg) { throw SpecError("spec " + name + ": " + msg); };
  if (name.empty()) throw SpecError("spec: missing name");
  if (variables.empty()) fail("no variables");
  if (ground == Ground::RationalFunction && variables.size() > static_cast<std::size_t>(kMaxVariables)) {
    fail("at most three variables are supported");
  }
  if (ground == Ground::GaussianDyadic && (variables.size() != 1 || variables[0] != "i")) {
    fail("the Gaussian ground ring has the single symbol i");
  }
  if (generator_text.empty()) fail("no generators");
  if (seed_text.empty()) fail("no seed fundamentals");
  if (prime == 0) fail("no prime");

  generator_expr.clear();
  seed_expr.clear();
  try {
    for (const auto& t : generator_text) generator_expr.push_back(parse_expr(t));
    for (const auto& t : seed_text) seed_expr.push_back(parse_expr(t));
  } catch (const ParseError& e) {
    fail(e.what());
  }

  auto vars = variable_elements();
  generators.clear();
  generator_polys_.clear();
  for (std::size_t g = 0; g < generator_expr.size(); ++g) {
    Element value;
    try {
      value = evaluate(*generator_expr[g], vars);
    } catch (const std::domain_error& e) {
      fail("generator " + generator_text[g] + ": " + e.what());
    }
    if (value.is_zero()) fail("generator " + generator_text[g] + " is zero");
    if (!value.is_gauss()) {
      const RatFunc& r = value.ratfunc();
      auto q = r.num().divide_exact(r.den());
      if (!q) fail("generator " + generator_text[g] + " is not a polynomial");
      value = Element(RatFunc(*q));
      generator_polys_.push_back(*q);
    }
    generators.push_back(std::move(value));
  }

  auto minus_one = constant(-1);
  auto it = std::find(generators.begin(), generators.end(), minus_one);
  if (it == generators.end()) fail("-1 is not among the generators");
  minus_one_index = static_cast<std::size_t>(it - generators.begin());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (g == minus_one_index) continue;
    if (ground == Ground::RationalFunction && generator_polys_[g].is_constant()) {
      fail("generator " + generator_text[g] + " is a constant other than -1");
    }
  }
  if (ground == Ground::GaussianDyadic) {
    // The canonical unit factorization needs exactly -1, 2, i and 1-i.
    const GaussDyadic expected[] = {GaussDyadic(-1), GaussDyadic(2), GaussDyadic::i(), GaussDyadic(1, -1)};
    if (generators.size() != 4) fail("the Gaussian ground ring needs generators -1, 2, i, 1-i");
    for (const auto& e : expected) {
      if (std::find(generators.begin(), generators.end(), Element(e)) == generators.end()) {
        fail("the Gaussian ground ring needs generators -1, 2, i, 1-i");
      }
    }
  }

  seeds.clear();
  for (std::size_t s = 0; s < seed_expr.size(); ++s) {
    try {
      seeds.push_back(evaluate(*seed_expr[s], vars));
    } catch (const std::domain_error& e) {
      fail("seed " + seed_text[s] + ": " + e.what());
    }
  }

  if (gf5_variable_images.size() != variables.size()) fail("one gf5 image per variable is required");
  std::size_t width = gf5_width();
  if (width == 0) fail("empty gf5 image");
  for (const auto& t : gf5_variable_images) {
    if (t.width() != width) fail("gf5 images differ in width");
  }
  if (lift_width == 0 || lift_width > width) fail("lift_width must lie in 1..gf5 width");
  gf5_generator_images.clear();
  for (std::size_t g = 0; g < generator_expr.size(); ++g) {
    GFTuple img;
    try {
      img = evaluate_gf5(*generator_expr[g], gf5_variable_images);
    } catch (const std::domain_error&) {
      fail("gf5 image of generator " + generator_text[g] + " is undefined");
    }
    if (!img.is_unit()) fail("gf5 image " + img.to_string() + " of generator " + generator_text[g] + " is not a unit");
    gf5_generator_images.push_back(img);
  }

  h2_homs.clear();
  for (const auto& row : h2_hom_text) {
    std::vector<GaussDyadic> images;
    for (const auto& t : row) {
      ExprPtr e;
      try {
        e = parse_expr(t);
      } catch (const ParseError& err) {
        fail(err.what());
      }
      images.push_back(eval_expr<GaussDyadic>(
          *e,
          [&](const std::string& n) {
            if (n != "i") fail("h2 image '" + t + "' uses symbol " + n);
            return GaussDyadic::i();
          },
          [](const mpz_class& n) { return GaussDyadic(n, 0); }));
    }
    h2_homs.push_back(std::move(images));
  }

  for (const auto& b : extra_bounds) {
    if (b.generator >= generators.size() || b.generator == minus_one_index) fail("bound names an invalid generator");
    if (b.lo > b.hi) fail("bound with lo > hi");
  }
  if (variable_residues.size() != variables.size()) fail("one residue per variable is required");
  if (!is_prime_u64(prime) || prime < 3 || prime >= (std::uint64_t{1} << 63)) fail("prime is not an odd prime below 2^63");
  if (ground == Ground::GaussianDyadic && powmod(variable_residues[0], 2, prime) != prime - 1) {
    fail("residue of i is not a square root of -1");
  }
}

FactoredElement PartialFieldSpec::unit() const { return FactoredElement{1, std::vector<int>(generator_count(), 0)}; }

FactoredElement PartialFieldSpec::zero_factored() const {
  return FactoredElement{0, std::vector<int>(generator_count(), 0)};
}

FactoredElement PartialFieldSpec::normalize(FactoredElement f) const {
  if (f.sign == 0) return zero_factored();
  if (ground == Ground::GaussianDyadic) {
    auto canon = factor(expand(f));
    if (!canon) throw std::logic_error("normalize: unit failed to refactor");
    return *canon;
  }
  int& m = f.exps[minus_one_index];
  if (m % 2 != 0) f.sign = -f.sign;
  m = 0;
  return f;
}

FactoredElement PartialFieldSpec::multiply(const FactoredElement& a, const FactoredElement& b) const {
  if (a.is_zero() || b.is_zero()) return zero_factored();
  FactoredElement r{a.sign * b.sign, a.exps};
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return normalize(std::move(r));
}

FactoredElement PartialFieldSpec::divide(const FactoredElement& a, const FactoredElement& b) const {
  if (b.is_zero()) throw std::domain_error("divide: zero divisor");
  if (a.is_zero()) return zero_factored();
  FactoredElement r{a.sign * b.sign, a.exps};
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
  return normalize(std::move(r));
}

Element PartialFieldSpec::expand(const FactoredElement& f) const {
  if (f.is_zero()) return zero();
  if (ground == Ground::GaussianDyadic) {
    GaussDyadic v(f.sign);
    for (std::size_t g = 0; g < f.exps.size(); ++g) {
      if (f.exps[g] != 0) v = v * generators[g].gauss().pow(f.exps[g]);
    }
    return Element(v);
  }
  Poly num(arity(), f.sign);
  Poly den(arity(), 1);
  for (std::size_t g = 0; g < f.exps.size(); ++g) {
    int e = f.exps[g];
    if (e > 0) num *= generator_polys_[g].pow(static_cast<unsigned>(e));
    if (e < 0) den *= generator_polys_[g].pow(static_cast<unsigned>(-e));
  }
  return Element(RatFunc(std::move(num), std::move(den)));
}

Element PartialFieldSpec::substitute(const FactoredElement& f, std::span<const Element> images) const {
  if (f.is_zero()) return zero();
  Element v = constant(f.sign);
  for (std::size_t g = 0; g < f.exps.size(); ++g) {
    if (f.exps[g] != 0) v = v * evaluate(*generator_expr[g], images).pow(f.exps[g]);
  }
  return v;
}

std::optional<FactoredElement> PartialFieldSpec::factor(const Element& x) const {
  if (x.is_zero()) return zero_factored();
  FactoredElement f = unit();
  if (ground == Ground::GaussianDyadic) {
    auto u = factor_gauss_unit(x.gauss());
    if (!u) return std::nullopt;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const GaussDyadic& v = generators[g].gauss();
      if (v == GaussDyadic(2)) f.exps[g] = u->two_exp;
      if (v == GaussDyadic::i()) f.exps[g] = u->i_exp;
      if (v == GaussDyadic(1, -1)) f.exps[g] = u->one_minus_i_exp;
    }
    return f;
  }
  Poly num = x.ratfunc().num();
  Poly den = x.ratfunc().den();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (g == minus_one_index) continue;
    const Poly& p = generator_polys_[g];
    while (auto q = num.divide_exact(p)) {
      num = std::move(*q);
      ++f.exps[g];
    }
    while (auto q = den.divide_exact(p)) {
      den = std::move(*q);
      --f.exps[g];
    }
  }
  if (!num.is_constant() || !den.is_constant()) return std::nullopt;
  mpz_class n = num.constant_value();
  mpz_class d = den.constant_value();
  if (n == d) return f;
  if (n == -d) {
    f.sign = -1;
    return f;
  }
  return std::nullopt;
}

GFTuple PartialFieldSpec::hom_gf5(const FactoredElement& f) const {
  std::size_t width = gf5_width();
  if (f.is_zero()) return GFTuple(width, 0);
  GFTuple r(width, f.sign);
  for (std::size_t g = 0; g < f.exps.size(); ++g) {
    if (f.exps[g] != 0) r = r * gf5_generator_images[g].pow(f.exps[g]);
  }
  return r;
}

std::vector<std::uint64_t> PartialFieldSpec::generator_residues(std::uint64_t p) const {
  std::vector<std::uint64_t> out;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    auto r = generators[g].eval_mod(p, variable_residues);
    if (!r) throw SpecError("spec " + name + ": generator " + generator_text[g] + " has no residue mod " + std::to_string(p));
    out.push_back(*r);
  }
  return out;
}

std::optional<std::uint64_t> PartialFieldSpec::fingerprint(const Element& x, std::uint64_t p) const {
  return x.eval_mod(p, variable_residues);
}

std::string PartialFieldSpec::format(const Element& x) const {
  if (x.is_gauss()) return x.gauss().to_string();
  return x.ratfunc().simplified(generator_polys_).to_string(variables);
}

std::string PartialFieldSpec::format(const FactoredElement& f) const { return format(expand(f)); }

std::string PartialFieldSpec::to_text() const {
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
  };
  os << "name " << name << "\n";
  os << "ground " << (ground == Ground::GaussianDyadic ? "gaussian" : "rational") << "\n";
  os << "variables " << join(variables, " ") << "\n";
  os << "generators " << join(generator_text, "; ") << "\n";
  os << "seeds " << join(seed_text, "; ") << "\n";
  for (std::size_t v = 0; v < variables.size(); ++v) {
    std::string coords;
    for (std::size_t c = 0; c < gf5_variable_images[v].width(); ++c) {
      coords += (c ? "," : "") + std::to_string(gf5_variable_images[v][c]);
    }
    os << "gf5 " << variables[v] << " = " << coords << "\n";
  }
  os << "lift_width " << lift_width << "\n";
  for (const auto& row : h2_hom_text) {
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < variables.size(); ++v) parts.push_back(variables[v] + " = " + row[v]);
    os << "h2 " << join(parts, "; ") << "\n";
  }
  for (const auto& b : extra_bounds) os << "bound " << b.generator << " " << b.lo << " " << b.hi << "\n";
  os << "lp " << (lp_mode == LpMode::Integers ? "integers" : "reals") << "\n";
  os << "prime " << prime << "\n";
  for (std::size_t v = 0; v < variables.size(); ++v) os << "residue " << variables[v] << " = " << variable_residues[v] << "\n";
  const std::pair<const char*, std::size_t> expectations[] = {
      {"fundamentals", expect.fundamentals}, {"automorphisms", expect.automorphisms},
      {"u25_pairs", expect.u25_pairs},       {"domain", expect.domain},
      {"candidates", expect.candidates},     {"distinct_residues", expect.distinct_residues}};
  for (const auto& [key, n] : expectations) {
    if (n != 0) os << "expect " << key << " " << n << "\n";
  }
  return os.str();
}

std::string PartialFieldSpec::fingerprint_hex() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<Element> associates(const Element& p) {
  Element zero = p.constant(0);
  Element one = p.constant(1);
  if (p == zero || p == one) return {zero, one};
  std::vector<Element> candidates = {p, one - p, one / (one - p), p / (p - one), (p - one) / p, one / p};
  std::vector<Element> out;
  for (auto& c : candidates) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

FundamentalTable::FundamentalTable(const PartialFieldSpec& spec, std::vector<FundamentalEntry> entries)
    : entries_(std::move(entries)), prime_(spec.prime) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    by_fingerprint_.emplace(entries_[i].fingerprint, i);
    by_factored_.emplace(entries_[i].factored, i);
    by_image_.emplace(entries_[i].image, i);
  }
}

std::optional<std::size_t> FundamentalTable::find_fingerprint(std::uint64_t fp) const {
  auto it = by_fingerprint_.find(fp);
  if (it == by_fingerprint_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FundamentalTable::find_factored(const FactoredElement& f) const {
  auto it = by_factored_.find(f);
  if (it == by_factored_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FundamentalTable::find_image(const GFTuple& t) const {
  auto it = by_image_.find(t);
  if (it == by_image_.end()) return std::nullopt;
  return it->second;
}

std::size_t FundamentalTable::zero_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].factored.is_zero()) return i;
  }
  throw std::logic_error("table has no zero");
}

std::size_t FundamentalTable::one_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& f = entries_[i].factored;
    if (f.sign == 1 && std::all_of(f.exps.begin(), f.exps.end(), [](int e) { return e == 0; })) return i;
  }
  throw std::logic_error("table has no one");
}

std::vector<std::size_t> FundamentalTable::nonzero_one() const {
  std::size_t z = zero_index();
  std::size_t o = one_index();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != z && i != o) out.push_back(i);
  }
  return out;
}

FundamentalTable build_fundamental_table(const PartialFieldSpec& spec) {
  std::map<FactoredElement, Element> found;
  auto add = [&](const Element& x, const std::string& origin) {
    auto f = spec.factor(x);
    if (!f) {
      throw SpecError("spec " + spec.name + ": associate " + spec.format(x) + " of seed " + origin +
                      " is not a unit over the generators");
    }
    found.emplace(*f, spec.expand(*f));
  };
  add(spec.zero(), "0");
  add(spec.one(), "1");
  for (std::size_t s = 0; s < spec.seeds.size(); ++s) {
    for (const auto& a : associates(spec.seeds[s])) add(a, spec.seed_text[s]);
  }
  std::vector<FundamentalEntry> entries;
  for (const auto& [f, value] : found) {
    auto fp = spec.fingerprint(value);
    if (!fp) throw SpecError("spec " + spec.name + ": fundamental " + spec.format(value) + " has no fingerprint");
    entries.push_back({f, value, *fp, spec.hom_gf5(f)});
  }
  if (spec.ground == Ground::GaussianDyadic) {
    std::sort(entries.begin(), entries.end(),
              [](const FundamentalEntry& a, const FundamentalEntry& b) { return a.value.gauss() < b.value.gauss(); });
  } else {
    std::sort(entries.begin(), entries.end(), [](const FundamentalEntry& a, const FundamentalEntry& b) {
      return std::tie(a.fingerprint, a.factored) < std::tie(b.fingerprint, b.factored);
    });
  }
  return FundamentalTable(spec, std::move(entries));
}

std::optional<std::size_t> find_fundamental(const PartialFieldSpec& spec, const FundamentalTable& table,
                                            const Element& x) {
  auto fp = spec.fingerprint(x, table.prime());
  if (fp) {
    auto idx = table.find_fingerprint(*fp);
    if (idx && table[*idx].value == x) return idx;
    if (table.fingerprints_distinct()) return std::nullopt;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].value == x) return i;
  }
  return std::nullopt;
}

bool is_fundamental_exact(const PartialFieldSpec& spec, const FundamentalTable& table, const Element& x) {
  return find_fundamental(spec, table, x).has_value();
}

}  // namespace hydra
