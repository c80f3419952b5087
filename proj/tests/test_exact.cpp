#include "hydra/element.hpp"
#include "hydra/expr.hpp"
#include "hydra/gf5.hpp"
#include "hydra/modular.hpp"

#include <doctest.h>

#include <random>

using namespace hydra;

namespace {

Poly x1() { return Poly::variable(1, 0); }
Poly c1(long c) { return Poly(1, c); }
const std::vector<std::string> kX = {"x"};
const std::vector<std::string> kXY = {"x", "y"};

RatFunc parse_rf(const std::string& text, int arity = 1) {
  const std::vector<std::string> names = {"x", "y", "z"};
  return eval_expr<RatFunc>(
      *parse_expr(text),
      [&](const std::string& n) {
        for (int v = 0; v < arity; ++v) {
          if (names[v] == n) return RatFunc(Poly::variable(arity, v));
        }
        throw std::invalid_argument(n);
      },
      [&](const mpz_class& c) { return RatFunc(arity, c); });
}

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monomials pack exponents and order by degree first") {
  std::vector<int> a = {2, 1};
  std::vector<int> b = {0, 4};
  Monomial ma = make_monomial(a);
  Monomial mb = make_monomial(b);
  CHECK(monomial_exp(ma, 0) == 2);
  CHECK(monomial_exp(ma, 1) == 1);
  CHECK(monomial_degree(mb) == 4);
  CHECK(mb > ma);
  CHECK(monomial_divides(make_monomial(std::vector<int>{1, 1}), ma));
  CHECK_FALSE(monomial_divides(mb, ma));
  CHECK(monomial_mul(ma, mb) == make_monomial(std::vector<int>{2, 5}));
  CHECK(monomial_div(ma, make_monomial(std::vector<int>{1, 0})) == make_monomial(std::vector<int>{1, 1}));
}

TEST_CASE("polynomial arithmetic on hand-expanded examples") {
  Poly x = x1();
  CHECK((x + c1(1)).pow(2) == x * x + x.scaled(2) + c1(1));
  CHECK((x - c1(1)) * (x + c1(1)) == x * x - c1(1));
  CHECK(((x + c1(1)).pow(3)).to_string(kX) == "x^3 + 3*x^2 + 3*x + 1");
  CHECK((x * x - c1(1)).divide_exact(x - c1(1)).value() == x + c1(1));
  CHECK_FALSE((x * x + c1(1)).divide_exact(x - c1(1)).has_value());
  CHECK_FALSE((x + c1(1)).divide_exact(c1(2)).has_value());
  CHECK((x.scaled(4) + c1(6)).divide_exact(c1(2)).value() == x.scaled(2) + c1(3));
  CHECK((x - x).is_zero());
  CHECK(c1(7).is_constant());
  CHECK(c1(7).constant_value() == 7);

  Poly X = Poly::variable(2, 0);
  Poly Y = Poly::variable(2, 1);
  Poly p = X * Y - Poly(2, 1);
  CHECK(p.degree_in(0) == 1);
  CHECK(p.total_degree() == 2);
  CHECK(p.to_string(kXY) == "x*y - 1");
  std::vector<std::uint64_t> at = {11, 19};
  CHECK(p.eval_mod(179424673, at) == 11 * 19 - 1);
}

TEST_CASE("polynomial substitution composes") {
  Poly x = x1();
  std::vector<RatFunc> images = {parse_rf("1/x")};
  RatFunc r = (x * x - x + c1(1)).substitute(images);
  CHECK(ratfunc_eq(r, parse_rf("(1 - x + x^2)/x^2")));
}

TEST_CASE("rational functions compare by cross multiplication") {
  CHECK(ratfunc_eq(parse_rf("(x^2 - 1)/(x - 1)"), parse_rf("x + 1")));
  CHECK(ratfunc_eq(parse_rf("2*x/(4*x^2)"), parse_rf("1/(2*x)")));
  CHECK_FALSE(ratfunc_eq(parse_rf("x/(x - 1)"), parse_rf("x/(1 - x)")));
  CHECK(ratfunc_eq(parse_rf("-x/(1 - x)"), parse_rf("x/(x - 1)")));
  CHECK(parse_rf("1 - x/(1 - x + x^2)") == parse_rf("(1 - 2*x + x^2)/(1 - x + x^2)"));
  CHECK(parse_rf("x").inverse() == parse_rf("1/x"));
  CHECK(parse_rf("x - 1").pow(-2) == parse_rf("1/(x^2 - 2*x + 1)"));
  CHECK_THROWS(parse_rf("0").inverse());
  CHECK(ratfunc_eq(parse_rf("x*y/(y*x^2)", 2), parse_rf("1/x", 2)));
}

TEST_CASE("rational function evaluation and printing") {
  std::vector<std::uint64_t> at = {5};
  CHECK(parse_rf("(x + 1)/(x - 1)").eval_mod(1299709, at).value() == mulmod(6, invmod(4, 1299709), 1299709));
  std::vector<std::uint64_t> one = {1};
  CHECK_FALSE(parse_rf("1/(x - 1)").eval_mod(1299709, one).has_value());
  std::vector<Poly> gens = {x1(), c1(1) - x1()};
  CHECK(parse_rf("(x^3 - x^2)/(x^2 - x^3)").simplified(gens).to_string(kX) == "-1");
}

TEST_CASE("gaussian dyadics canonicalize and invert") {
  GaussDyadic half = GaussDyadic(1, 0, 1);
  CHECK(half.inverse() == GaussDyadic(2));
  CHECK(GaussDyadic(2, 2, 2) == GaussDyadic(1, 1, 1));
  CHECK((GaussDyadic(1) - GaussDyadic::i()).inverse() == GaussDyadic(1, 1, 1));
  CHECK(GaussDyadic::i().pow(2) == GaussDyadic(-1));
  CHECK(GaussDyadic(1, -1, 1).to_string() == "(1-i)/2");
  CHECK(GaussDyadic(0, -1).to_string() == "-i");
  CHECK(half.to_string() == "1/2");
  CHECK(GaussDyadic(1, 1).log2_norm() == 1);
  CHECK(half.log2_norm() == -2);
  CHECK(GaussDyadic(1, 1).is_unit());
  CHECK_FALSE(GaussDyadic(2, 1).is_unit());
  CHECK(GaussDyadic(3, 4).real_part() == 3);
  auto f = factor_gauss_unit(GaussDyadic(1, 1, 1)).value();
  CHECK(GaussDyadic::i().pow(f.i_exp) * GaussDyadic(2).pow(f.two_exp) *
            (GaussDyadic(1) - GaussDyadic::i()).pow(f.one_minus_i_exp) ==
        GaussDyadic(1, 1, 1));
  CHECK_FALSE(factor_gauss_unit(GaussDyadic(3)).has_value());
}

TEST_CASE("gaussian log-norm is additive and reduction mod p is a homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<unsigned> shift(0, 3);
  const std::uint64_t p = 1299709;
  const std::uint64_t i_res = 329008;
  REQUIRE(mulmod(i_res, i_res, p) == p - 1);
  for (int t = 0; t < 500; ++t) {
    GaussDyadic a(coord(rng), coord(rng), shift(rng));
    GaussDyadic b(coord(rng), coord(rng), shift(rng));
    CHECK(mulmod(a.eval_mod(p, i_res), b.eval_mod(p, i_res), p) == (a * b).eval_mod(p, i_res));
    CHECK(addmod(a.eval_mod(p, i_res), b.eval_mod(p, i_res), p) == (a + b).eval_mod(p, i_res));
    if (a.is_unit() && b.is_unit()) CHECK((a * b).log2_norm() == a.log2_norm() + b.log2_norm());
    if (b.is_unit()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("modular helpers agree with brute force") {
  const std::uint64_t p = 1009;
  for (std::uint64_t a = 1; a < p; a += 37) {
    std::uint64_t brute = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      if (a * x % p == 1) brute = x;
    }
    CHECK(invmod(a, p) == brute);
    std::uint64_t pw = 1;
    for (int e = 0; e < 13; ++e) pw = pw * a % p;
    CHECK(powmod(a, 13, p) == pw);
  }
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u64(n) == brute_prime(n));
  CHECK(is_prime_u64(1299709));
  CHECK(is_prime_u64(179424673));
  CHECK(is_prime_u64(22801763489ULL));
  CHECK(next_prime_u64(1299709) == 1299721);
  CHECK(mpz_mod_u64(mpz_class(-3), 7) == 4);
  CHECK(submod(2, 5, 7) == 4);
}

TEST_CASE("mod map evaluates signed exponent vectors") {
  ModMap m(1299709, {1299708, 5, 1299705, 21});
  std::vector<int> e = {0, 2, -1, 0};
  CHECK(m.eval(1, e).value() == mulmod(25, invmod(1299705, 1299709), 1299709));
  CHECK(m.eval(-1, e).value() == 1299709 - m.eval(1, e).value());
  ModMap zero(7, {6, 7});
  std::vector<int> neg = {0, -1};
  CHECK_FALSE(zero.eval(1, neg).has_value());
}

TEST_CASE("rationals reduce into GF(5)") {
  CHECK(to_gf5(mpq_class(14, 72)) == 2);
  CHECK(to_gf5(mpq_class(30, 20)) == 4);
  CHECK(to_gf5(mpq_class(-1)) == 4);
  CHECK(to_gf5(mpq_class(0)) == 0);
  CHECK_THROWS(to_gf5(mpq_class(1, 10)));
}

TEST_CASE("GF(5) tuples") {
  GFTuple a{2, 3, 4};
  GFTuple b{3, 3, 1};
  CHECK(a * b == GFTuple{1, 4, 4});
  CHECK(a + b == GFTuple{0, 1, 0});
  CHECK(a.inverse() == GFTuple{3, 2, 4});
  CHECK(a / a == GFTuple(3, 1));
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(4) == GFTuple(3, 1));
  CHECK(a.truncated(2) == GFTuple{2, 3});
  CHECK(a.to_string() == "{2,3,4}");
  CHECK(GFTuple{1, 0}.is_zero() == false);
  CHECK_FALSE(GFTuple{1, 0}.is_unit());
  for (int x = 1; x < 5; ++x) CHECK(x * gf5_inverse(x) % 5 == 1);
}

TEST_CASE("expression parser") {
  CHECK(expr_to_string(*parse_expr("1 - alpha/(1-alpha+alpha^2)")) == expr_to_string(*parse_expr("1-alpha/(1-alpha+alpha^2)")));
  CHECK(parse_rf("x^-2") == parse_rf("1/(x*x)"));
  CHECK(parse_rf("-(x - 1)^2") == parse_rf("-x^2 + 2*x - 1"));
  CHECK(parse_rf("2*3 - 4/2") == parse_rf("4"));
  auto greek = parse_expr("α*β");
  CHECK(expr_to_string(*greek) == expr_to_string(*parse_expr("alpha*beta")));
  CHECK_THROWS_AS(parse_expr("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x"), ParseError);
  CHECK_THROWS_AS(parse_expr("x $ y"), ParseError);
  CHECK_THROWS_AS(parse_expr("x^y"), ParseError);
}

TEST_CASE("element variant dispatches to its ground ring") {
  Element g = GaussDyadic(1, 1);
  Element r = parse_rf("x");
  CHECK(g.is_gauss());
  CHECK_FALSE(r.is_gauss());
  CHECK((g * g.inverse()) == g.constant(1));
  CHECK((r - r).is_zero());
  CHECK(r.pow(2).to_string(kX) == "x^2");
}
