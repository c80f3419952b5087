#include "hydra/genesis.hpp"

namespace hydra {

RelationSystem h3_relation_system(int s223_reading) {
  RelationSystem sys;
  sys.symbols = {"s223", "s232", "s233", "s234"};
  sys.cross_ratios = {GFTuple{2, 2, 3}, GFTuple{2, 3, 2}, GFTuple{2, 3, 3}, GFTuple{2, 3, 4}};
  sys.triples = {{"1 - s234", "(s223 - 1)/s223", "(s234 - 1)/s234"},
                 {"(s232 - 1)/s232", "1/s234", "1/(1 - s234)"},
                 {"(s234 - 1)/s234", "1/s234", "1/(1 - s233)"}};
  sys.relations = {"s223*s234 - (1 - s234)*(s223 - 1)*(s234 - 1)", "(1 - s234)*s234*s232 - (s232 - 1)",
                   "s234*s234*(1 - s233) - (s234 - 1)"};
  sys.basis = {"-1 + s234 - s234^2 + s233*s234^2", "-1 + s232 - s232*s234 + s232*s234^2",
               "-s233 + s232*s233 + s234 - s233*s234", "-1 + s223 + s232*s234"};
  std::string s223 = s223_reading == 0 ? "1 - alpha/(1 - alpha + alpha^2)" : "(1 - alpha)/(1 - alpha + alpha^2)";
  sys.solution = {s223, "1/(1 - alpha + alpha^2)", "(1 - alpha + alpha^2)/alpha^2", "alpha"};
  return sys;
}

namespace {

std::size_t symbol_index(const RelationSystem& sys, const std::string& name) {
  for (std::size_t i = 0; i < sys.symbols.size(); ++i) {
    if (sys.symbols[i] == name) return i;
  }
  throw std::invalid_argument("unknown symbol " + name);
}

std::vector<std::string> residuals_of(const RelationSystem& sys, const std::vector<std::string>& exprs,
                                      const std::vector<RatFunc>& values) {
  static const std::vector<std::string> kNames = {"alpha"};
  std::vector<std::string> out;
  for (const auto& text : exprs) {
    RatFunc r = eval_expr<RatFunc>(
        *parse_expr(text), [&](const std::string& n) { return values[symbol_index(sys, n)]; },
        [](const mpz_class& c) { return RatFunc(1, c); });
    out.push_back(r.num().to_string(kNames));
  }
  return out;
}

std::vector<RatFunc> solution_values(const RelationSystem& sys, const std::vector<std::string>& solution) {
  std::vector<RatFunc> values;
  for (const auto& s : solution) {
    values.push_back(eval_expr<RatFunc>(
        *parse_expr(s),
        [](const std::string& n) {
          if (n != "alpha") throw std::invalid_argument("solution uses symbol " + n);
          return RatFunc(Poly::variable(1, 0));
        },
        [](const mpz_class& c) { return RatFunc(1, c); }));
  }
  if (values.size() != sys.symbols.size()) throw std::invalid_argument("one solution per symbol is required");
  return values;
}

}  // namespace

TripleCheck check_triples(const RelationSystem& sys) {
  TripleCheck out;
  for (const auto& triple : sys.triples) {
    std::array<GFTuple, 3> values;
    GFTuple product(3, 1);
    for (std::size_t k = 0; k < 3; ++k) {
      values[k] = eval_expr<GFTuple>(
          *parse_expr(triple[k]), [&](const std::string& n) { return sys.cross_ratios[symbol_index(sys, n)]; },
          [](const mpz_class& c) { return GFTuple(3, static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), 5))); });
      product = product * values[k];
    }
    out.values.push_back(values);
    out.products.push_back(product);
    if (!(product == GFTuple(3, 1))) out.ok = false;
  }
  return out;
}

std::vector<std::string> relation_residuals(const RelationSystem& sys, const std::vector<std::string>& values) {
  return residuals_of(sys, sys.relations, solution_values(sys, values));
}

SolutionCheck verify_solution(const RelationSystem& sys) {
  SolutionCheck out;
  auto values = solution_values(sys, sys.solution);
  out.residuals = residuals_of(sys, sys.relations, values);
  out.basis_residuals = residuals_of(sys, sys.basis, values);
  for (const auto& r : out.residuals) out.ok = out.ok && r == "0";
  for (const auto& r : out.basis_residuals) out.ok = out.ok && r == "0";

  const auto& h3 = builtin_spec("H3");
  auto table = build_fundamental_table(h3);
  for (std::size_t s = 0; s < values.size(); ++s) {
    auto idx = find_fundamental(h3, table, Element(values[s]));
    out.fundamental.push_back(idx.has_value());
    GFTuple image = idx ? table[*idx].image : GFTuple(3, 0);
    out.images.push_back(image);
    out.image_matches.push_back(idx && image == sys.cross_ratios[s]);
    out.ok = out.ok && idx && image == sys.cross_ratios[s];
  }
  return out;
}

GenesisReport run_genesis() {
  GenesisReport report;
  for (int reading = 0; reading < 2; ++reading) {
    auto sys = h3_relation_system(reading);
    SolutionCheck check = verify_solution(sys);
    report.reading_passes.push_back(check.ok);
    if (check.ok && report.chosen_reading < 0) {
      report.chosen_reading = reading;
      report.solution = check;
      report.triples = check_triples(sys);
    }
  }
  if (report.chosen_reading < 0) {
    auto sys = h3_relation_system(0);
    report.solution = verify_solution(sys);
    report.triples = check_triples(sys);
  }
  return report;
}

}  // namespace hydra
