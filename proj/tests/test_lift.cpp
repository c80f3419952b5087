#include "hydra/lift.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace hydra;

namespace {

struct Lifted {
  const PartialFieldSpec& spec;
  FundamentalTable table;
  LiftingBuild build;

  explicit Lifted(const std::string& name)
      : spec(builtin_spec(name)), table(build_fundamental_table(spec)) {
    build = build_lifting_fn(spec, table, build_domain(spec.lift_width));
  }

  Element up(const GFTuple& t) const { return table[build.fn.lift(t).value()].value; }
  Element expr(const std::string& text) const {
    return spec.evaluate(*parse_expr(text), spec.variable_elements());
  }
};

}  // namespace

TEST_CASE("GF(5) U25 tuple pairs") {
  for (std::size_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    auto tuples = gf5_u25_tuples(m);
    CHECK(tuples.size() == oracle::arrangements_of_six(m));
    std::set<std::pair<GFTuple, GFTuple>> distinct;
    for (const auto& [p, q] : tuples) {
      distinct.insert({p, q});
      for (std::size_t c = 0; c < m; ++c) {
        // [[1,1,1],[1,p,q]] represents U25 iff p and q avoid 0, 1 and each other.
        CHECK(p[c] > 1);
        CHECK(q[c] > 1);
        CHECK(p[c] != q[c]);
      }
    }
    CHECK(distinct.size() == tuples.size());
    CHECK(check_inequivalence(tuples).empty());
  }
  CHECK_THROWS(gf5_u25_tuples(7));
}

TEST_CASE("inequivalence flags repeated projections") {
  std::vector<GFPair> pairs = {{GFTuple{2, 3, 2}, GFTuple{4, 4, 4}}, {GFTuple{2, 3}, GFTuple{3, 2}}};
  auto v = check_inequivalence(pairs);
  REQUIRE(v.size() == 1);
  CHECK(v[0].pair == 0);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 2);
}

TEST_CASE("cross-ratio domain sizes match brute force") {
  for (std::size_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    auto d = build_domain(m);
    CHECK(d.members.size() == oracle::domain_size(m));
    CHECK(std::is_sorted(d.members.begin(), d.members.end()));
    CHECK(d.contains(GFTuple(m, 0)));
    CHECK(d.contains(GFTuple(m, 1)));
  }
  CHECK(build_domain(2).members.size() == 11);
  CHECK(build_domain(3).members.size() == 26);
  CHECK(build_domain(4).members.size() == 56);
  CHECK(build_domain(5).members.size() == 92);
  CHECK_FALSE(build_domain(3).contains(GFTuple{2, 2, 2}));
  CHECK_FALSE(build_domain(3).contains(GFTuple{1, 2, 3}));
}

TEST_CASE("U25 pair counts on the Hydra side agree with the oracle") {
  const std::map<std::string, std::size_t> counts = {{"H2", 30}, {"H3", 120}, {"H4", 360}, {"H5", 720}};
  CHECK(oracle::h2_u25_count(oracle::h2_fundamentals()) == 30);
  CHECK(oracle::u25_count(oracle::fundamentals(oracle::h3()).keys) == 120);
  CHECK(oracle::u25_count(oracle::fundamentals(oracle::h4()).keys) == 360);
  for (const auto& [name, n] : counts) {
    CAPTURE(name);
    const auto& spec = builtin_spec(name);
    auto table = build_fundamental_table(spec);
    auto pairs = enumerate_u25(spec, table);
    CHECK(pairs.size() == n);
    for (const auto& pq : pairs) {
      CHECK(pq.p != pq.q);
      CHECK(find_fundamental(spec, table, table[pq.p].value / table[pq.q].value).has_value());
    }
  }
}

TEST_CASE("reference lift values") {
  Lifted h2("H2");
  CHECK(h2.up(GFTuple{2, 4}) == h2.expr("(1 - i)/2"));
  Lifted h3("H3");
  CHECK(ratfunc_eq(h3.up(GFTuple{2, 4, 4}).ratfunc(), h3.expr("(-1 + alpha - alpha^2)/(-1 + alpha)").ratfunc()));
  Lifted h4("H4");
  CHECK(ratfunc_eq(h4.up(GFTuple{2, 4, 3, 4}).ratfunc(), h4.expr("beta/(beta - 1)").ratfunc()));
  Lifted h5("H5");
  CHECK(ratfunc_eq(h5.up(GFTuple{2, 4, 3, 3, 4}).ratfunc(), h5.expr("gamma/alpha").ratfunc()));
}

TEST_CASE("the lifting function is a bijection that round-trips over the domain") {
  for (const auto& name : builtin_field_names()) {
    CAPTURE(name);
    Lifted l(name);
    CHECK(l.build.bijective);
    CHECK(l.build.failures.empty());
    auto domain = build_domain(l.spec.lift_width);
    CHECK(l.build.fn.size() == domain.members.size());
    for (const auto& t : domain.members) {
      auto idx = l.build.fn.lift(t);
      REQUIRE(idx.has_value());
      CHECK(l.table[*idx].image.truncated(l.spec.lift_width) == t);
    }
    std::vector<int> outside(l.spec.lift_width, 2);
    outside[0] = 0;
    CHECK_FALSE(l.build.fn.lift(GFTuple(outside)).has_value());
  }
}

TEST_CASE("local lifts of every tuple pair are U25 pairs") {
  for (const auto& name : builtin_field_names()) {
    CAPTURE(name);
    Lifted l(name);
    auto domain = build_domain(l.spec.lift_width);
    auto tuples = gf5_u25_tuples(l.spec.lift_width);
    auto result = local_lift_check(l.spec, l.table, l.build.fn, domain, tuples);
    CHECK(result.ok());
    CHECK(result.lifted.size() == tuples.size());
    auto pairs = enumerate_u25(l.spec, l.table);
    CHECK(std::set<U25Pair>(pairs.begin(), pairs.end()) == result.lifted);
  }
}

TEST_CASE("local lift reports tuples outside the domain") {
  Lifted l("H3");
  auto domain = build_domain(3);
  std::vector<GFPair> bad = {{GFTuple{2, 2, 2}, GFTuple{3, 3, 3}}};
  auto result = local_lift_check(l.spec, l.table, l.build.fn, domain, bad);
  CHECK_FALSE(result.ok());
  REQUIRE(result.domain_violations.size() == 1);
  CHECK(result.domain_violations[0].find("{2,2,2}") != std::string::npos);
}
