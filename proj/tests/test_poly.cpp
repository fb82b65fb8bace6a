#include <doctest.h>

#include "oracle.hpp"
#include "tgm/poly.hpp"

#include <random>

using namespace tgm;

namespace {

MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

// random small polynomial over the given variables
MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_terms,
                      int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> dn(1, 4);
  MultiPoly out;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(vars.size());
    for (auto& k : e) k = exp(rng);
    out += MultiPoly::monomial(vars, e, make_rat(coeff(rng), dn(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("parsing and printing round-trip") {
  for (const char* text : {"v+(u+v^2)^3", "1/2*u - 3*v^4", "-u", "0", "x1^2*(x2+x1*x3^2)^3",
                           "2u", "t - t^6", "u*v - 1"}) {
    MultiPoly p = P(text);
    CHECK(P(p.str()) == p);
  }
  CHECK(P("2u") == P("2*u"));
  CHECK(P("u/2") == P("1/2*u"));
  CHECK_THROWS_AS(P("u/v"), ParseError);
  CHECK_THROWS_AS(P("u +"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("u^"), ParseError);
}

TEST_CASE("substitute examples") {
  std::map<std::string, MultiPoly> images{{"u", P("x1*x2")}, {"v", P("x1*x3")}};
  CHECK(substitute(P("u+v"), images) == P("x1*x2 + x1*x3"));

  std::map<std::string, MultiPoly> identity{{"u", P("u")}};
  CHECK(substitute(P("u"), identity) == P("u"));

  // f = v+(u+v^2)^3 with u -> x1*x2, v -> x1*x3, against the naive expander
  MultiPoly got = substitute(P("v+(u+v^2)^3"), images);
  std::vector<std::string> uni{"x1", "x2", "x3"};
  oracle::Poly x1 = oracle::var(uni, "x1");
  oracle::Poly x2 = oracle::var(uni, "x2");
  oracle::Poly x3 = oracle::var(uni, "x3");
  oracle::Poly inner = oracle::add(oracle::mul(x1, x2), oracle::pow(oracle::mul(x1, x3), 2));
  oracle::Poly expect = oracle::add(oracle::mul(x1, x3), oracle::pow(inner, 3));
  CHECK(oracle::matches(expect, got));

  CHECK_THROWS_AS(substitute(P("u+w"), images), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("x1*x2+x1*x3"), P("x1")) == P("x2+x3"));
  CHECK(exact_divide(P("u^2-v^2"), P("1")) == P("u^2-v^2"));
  CHECK_THROWS_AS(exact_divide(P("x1*x2+1"), P("x1")), std::runtime_error);
  CHECK_THROWS_AS(exact_divide(P("u"), MultiPoly()), std::invalid_argument);
  CHECK(exact_divide(P("u^2-v^2"), P("u-v")) == P("u+v"));
}

TEST_CASE("exact_divide(f*g, g) == f on random inputs") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 200) {
    MultiPoly f = random_poly(rng, {"u", "v"}, 4, 3, 5);
    MultiPoly g = random_poly(rng, {"u", "v"}, 3, 2, 5);
    if (g.is_zero()) continue;
    CHECK(exact_divide(f * g, g) == f);
    ++done;
  }
}

TEST_CASE("substitute is a ring map on random inputs") {
  std::mt19937_64 rng(19);
  std::map<std::string, MultiPoly> images{{"u", P("x1*x2")}, {"v", P("x1+x3^2")}};
  for (int trial = 0; trial < 150; ++trial) {
    MultiPoly f = random_poly(rng, {"u", "v"}, 3, 3, 4);
    MultiPoly g = random_poly(rng, {"u", "v"}, 3, 3, 4);
    CHECK(substitute(f * g, images) == substitute(f, images) * substitute(g, images));
    CHECK(substitute(f + g, images) == substitute(f, images) + substitute(g, images));
  }
}

TEST_CASE("resultant examples") {
  // Res_u(u, v+(u+v^2)^3) = v+v^6 up to sign
  MultiPoly r = resultant(P("u"), P("v+(u+v^2)^3"), "u");
  CHECK((r == P("v+v^6") || r == P("-(v+v^6)")));

  CHECK(resultant(P("u-1"), P("u-1"), "u").is_zero());
  CHECK(resultant(P("u"), P("v"), "u") == P("v"));
  CHECK_THROWS_AS(resultant(P("v"), P("v+1"), "u"), std::invalid_argument);

  // classic: Res_t(t^2-u, t^3-v) = +-(v^2-u^3)
  MultiPoly cusp = resultant(P("t^2-u"), P("t^3-v"), "t");
  CHECK((cusp == P("v^2-u^3") || cusp == P("u^3-v^2")));
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 80) {
    MultiPoly h = random_poly(rng, {"u", "v"}, 2, 2, 3);
    MultiPoly f1 = random_poly(rng, {"u", "v"}, 2, 2, 3);
    MultiPoly g1 = random_poly(rng, {"u", "v"}, 2, 2, 3);
    if (h.degree("u") < 1 || f1.is_zero() || g1.is_zero()) continue;
    MultiPoly f = h * f1, g = h * g1;
    if (f.degree("u") == 0 && g.degree("u") == 0) continue;
    CHECK(resultant(f, g, "u").is_zero());
    ++done;
  }
  // and the two routes agree in general
  done = 0;
  while (done < 80) {
    MultiPoly f = random_poly(rng, {"u", "v"}, 3, 2, 3);
    MultiPoly g = random_poly(rng, {"u", "v"}, 3, 2, 3);
    if (f.is_zero() || g.is_zero()) continue;
    if (f.degree("u") == 0 && g.degree("u") == 0) continue;
    MultiPoly r = resultant(f, g, "u");
    MultiPoly gc = gcd_bivariate(f, g, "u");
    CHECK(r.is_zero() == (gc.degree("u") >= 1));
    ++done;
  }
}

TEST_CASE("squarefree") {
  CHECK(squarefree(P("v+v^6")));
  CHECK_FALSE(squarefree(P("v^2")));
  CHECK(squarefree(P("3")));
  CHECK(squarefree(P("v")));
  CHECK_FALSE(squarefree(P("(v-1)^2*(v+2)")));
}

TEST_CASE("bivariate gcd") {
  MultiPoly g = gcd_bivariate(P("t^2-s^2"), P("t^3-s^3"), "t");
  CHECK(proportional(g, P("t-s")));
  MultiPoly co = gcd_bivariate(P("t+s"), P("t^2+t*s+s^2"), "t");
  CHECK(co.total_degree() == 0);
}

TEST_CASE("rational roots") {
  auto roots = rational_roots(P("v+v^6"));
  CHECK(roots == std::vector<Rat>{Rat(-1), Rat(0)});
  CHECK(rational_roots(P("2*v^2-v-1")) == std::vector<Rat>{make_rat(-1, 2), Rat(1)});
  CHECK(rational_roots(P("v^2+1")).empty());
}

TEST_CASE("parametrization certificates") {
  // coordinate axis
  ParamCheck axis = parametrization_check(P("v"), P("t"), P("0"));
  CHECK(axis.composes);
  CHECK(axis.injective);
  CHECK(axis.implicitizes);
  CHECK(axis.accepted());

  // cusp: certificate accepted here, smoothness is a separate check
  ParamCheck cusp = parametrization_check(P("v^2-u^3"), P("t^2"), P("t^3"));
  CHECK(cusp.accepted());

  // the hyperbolic-modification curve v = -(u+v^2)^3, parametrized by
  // u = t - t^6, v = -t^3 (back substitution through u+v^2 = t)
  ParamCheck kr = parametrization_check(P("v+(u+v^2)^3"), P("t-t^6"), P("-t^3"));
  CHECK(kr.composes);
  CHECK(kr.injective);
  CHECK(kr.implicitizes);

  // non-injective parametrization is rejected
  ParamCheck sq = parametrization_check(P("v"), P("t^2"), P("0"));
  CHECK(sq.composes);
  CHECK_FALSE(sq.injective);

  // wrong curve is rejected
  ParamCheck off = parametrization_check(P("v-1"), P("t"), P("0"));
  CHECK_FALSE(off.composes);

  CHECK_THROWS_AS(parametrization_check(P("v"), P("1"), P("2")), std::invalid_argument);
}

TEST_CASE("derivative and eval") {
  CHECK(P("u^3").derivative("u") == P("3*u^2"));
  CHECK(P("u*v").derivative("v") == P("u"));
  CHECK(P("v+(u+v^2)^3").eval({{"u", Rat(0)}, {"v", Rat(0)}}) == 0);
  CHECK(P("u^2+v").eval({{"u", make_rat(1, 2)}, {"v", Rat(1)}}) == make_rat(5, 4));
}
