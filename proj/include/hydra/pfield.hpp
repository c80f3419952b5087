#pragma once

#include "hydra/element.hpp"
#include "hydra/expr.hpp"
#include "hydra/gf5.hpp"
#include "hydra/modular.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hydra {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A unit sign * prod g_i^exps[i], or zero when sign == 0. The exponent of the
// -1 generator is always folded into the sign.
struct FactoredElement {
  int sign = 1;
  std::vector<int> exps;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const FactoredElement& a, const FactoredElement& b) = default;
  friend auto operator<=>(const FactoredElement& a, const FactoredElement& b) = default;
};

enum class Ground { RationalFunction, GaussianDyadic };
enum class LpMode { Reals, Integers };

struct ExtraBound {
  std::size_t generator;
  int lo;
  int hi;
};

// Counts a correct implementation must reproduce for this field.
struct FieldExpectations {
  std::size_t fundamentals = 0;
  std::size_t automorphisms = 0;
  std::size_t u25_pairs = 0;
  std::size_t domain = 0;
  std::size_t candidates = 0;
  std::size_t distinct_residues = 0;
};

class PartialFieldSpec {
 public:
  std::string name;
  Ground ground = Ground::RationalFunction;
  std::vector<std::string> variables;
  std::vector<std::string> generator_text;
  std::vector<std::string> seed_text;
  // One image tuple per variable; all of the same width.
  std::vector<GFTuple> gf5_variable_images;
  std::size_t lift_width = 0;
  // One row of variable images per homomorphism into H2.
  std::vector<std::vector<std::string>> h2_hom_text;
  std::vector<ExtraBound> extra_bounds;
  LpMode lp_mode = LpMode::Reals;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> variable_residues;
  FieldExpectations expect;

  // Derived by compile().
  std::vector<ExprPtr> generator_expr;
  std::vector<ExprPtr> seed_expr;
  std::vector<Element> generators;
  std::vector<Element> seeds;
  std::vector<GFTuple> gf5_generator_images;
  std::vector<std::vector<GaussDyadic>> h2_homs;
  std::size_t minus_one_index = 0;

  // Parses expressions and derives generator values and images; throws
  // SpecError on an invalid spec.
  void compile();

  int arity() const { return ground == Ground::GaussianDyadic ? 0 : static_cast<int>(variables.size()); }
  std::size_t generator_count() const { return generator_text.size(); }
  std::size_t gf5_width() const { return gf5_variable_images.empty() ? 0 : gf5_variable_images[0].width(); }

  Element variable_element(std::size_t var) const;
  std::vector<Element> variable_elements() const;
  Element constant(const mpz_class& c) const;
  Element zero() const { return constant(0); }
  Element one() const { return constant(1); }

  // Value of an expression with the variables bound to `images`.
  Element evaluate(const Expr& e, std::span<const Element> images) const;
  GFTuple evaluate_gf5(const Expr& e, std::span<const GFTuple> images) const;

  FactoredElement unit() const;
  FactoredElement zero_factored() const;
  FactoredElement normalize(FactoredElement f) const;
  FactoredElement multiply(const FactoredElement& a, const FactoredElement& b) const;
  FactoredElement divide(const FactoredElement& a, const FactoredElement& b) const;

  Element expand(const FactoredElement& f) const;
  // Image of sign * prod g_i^e_i with each generator replaced by its value
  // under the variable substitution `images`.
  Element substitute(const FactoredElement& f, std::span<const Element> images) const;
  // Factorization over the generators, or nullopt if x is not a unit of the
  // partial field.
  std::optional<FactoredElement> factor(const Element& x) const;

  GFTuple hom_gf5(const FactoredElement& f) const;

  std::vector<std::uint64_t> generator_residues(std::uint64_t p) const;
  ModMap mod_map(std::uint64_t p) const { return ModMap(p, generator_residues(p)); }
  ModMap mod_map() const { return mod_map(prime); }
  std::optional<std::uint64_t> fingerprint(const Element& x, std::uint64_t p) const;
  std::optional<std::uint64_t> fingerprint(const Element& x) const { return fingerprint(x, prime); }

  std::string format(const Element& x) const;
  std::string format(const FactoredElement& f) const;

  // Declarative text form; parse_spec(to_text()) reproduces this spec.
  std::string to_text() const;
  // FNV-1a hash of the canonical text form, as 16 hex digits.
  std::string fingerprint_hex() const;

 private:
  std::size_t variable_index(const std::string& name) const;
  std::vector<Poly> generator_polys_;
};

PartialFieldSpec parse_spec(std::string_view text);
std::vector<std::string> builtin_field_names();
std::string builtin_spec_text(const std::string& name);
// Compiled built-in spec; throws SpecError for unknown names.
const PartialFieldSpec& builtin_spec(const std::string& name);

// Associates {p, 1-p, 1/(1-p), p/(p-1), (p-1)/p, 1/p}, deduplicated; {0, 1}
// for p in {0, 1}.
std::vector<Element> associates(const Element& p);

struct FundamentalEntry {
  FactoredElement factored;
  Element value;
  std::uint64_t fingerprint = 0;
  GFTuple image;
};

class FundamentalTable {
 public:
  FundamentalTable() = default;
  FundamentalTable(const PartialFieldSpec& spec, std::vector<FundamentalEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const FundamentalEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<FundamentalEntry>& entries() const { return entries_; }
  std::uint64_t prime() const { return prime_; }

  std::optional<std::size_t> find_fingerprint(std::uint64_t fp) const;
  std::optional<std::size_t> find_factored(const FactoredElement& f) const;
  std::optional<std::size_t> find_image(const GFTuple& t) const;
  std::size_t zero_index() const;
  std::size_t one_index() const;
  // Indices of entries other than 0 and 1, in table order.
  std::vector<std::size_t> nonzero_one() const;

  // True when fingerprints and gf5 images are each pairwise distinct.
  bool fingerprints_distinct() const { return by_fingerprint_.size() == entries_.size(); }
  bool images_distinct() const { return by_image_.size() == entries_.size(); }

 private:
  std::vector<FundamentalEntry> entries_;
  std::uint64_t prime_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> by_fingerprint_;
  std::map<FactoredElement, std::size_t> by_factored_;
  std::unordered_map<GFTuple, std::size_t, GFTupleHash> by_image_;
};

// Asc-closure of the seed fundamentals plus 0 and 1. Entries are ordered by
// fingerprint, or by complex value for the Gaussian ground ring.
FundamentalTable build_fundamental_table(const PartialFieldSpec& spec);

// Index of the table entry equal to x, by fingerprint lookup and exact check.
std::optional<std::size_t> find_fundamental(const PartialFieldSpec& spec, const FundamentalTable& table,
                                            const Element& x);
bool is_fundamental_exact(const PartialFieldSpec& spec, const FundamentalTable& table, const Element& x);

}  // namespace hydra
