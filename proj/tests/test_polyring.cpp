#include <doctest.h>

#include <random>

#include "lefschetz/error.hpp"
#include "lefschetz/polyring.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int max_exp, int terms) {
  std::uniform_int_distribution<int> c(-5, 5), e(0, max_exp);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<int>(r->nvars())};
    for (auto& x : m.exponents) x = e(rng);
    ts.push_back(Term{m, c(rng)});
  }
  return Polynomial(r, ts);
}

std::vector<std::int64_t> dense_series(const QuotientPresentation& q) {
  std::vector<std::int64_t> out;
  for (int d : q.degree_of) {
    if (static_cast<std::size_t>(d) >= out.size()) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

}  // namespace

TEST_CASE("monomial order is weighted degree then revlex") {
  Ring r = make_ring({"x", "y"});
  auto m = [](int a, int b) { return Monomial{{a, b}}; };
  CHECK(compare_monomials(m(2, 0), m(1, 1), *r) > 0);
  CHECK(compare_monomials(m(1, 1), m(0, 2), *r) > 0);
  CHECK(compare_monomials(m(0, 3), m(2, 0), *r) > 0);
  CHECK(compare_monomials(m(1, 1), m(1, 1), *r) == 0);
  Ring w = make_ring({"e1", "e2"}, {1, 2});
  CHECK(compare_monomials(m(0, 1), m(1, 0), *w) > 0);
  CHECK(compare_monomials(m(2, 0), m(0, 1), *w) > 0);  // same degree, revlex
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
  CHECK_THROWS_AS(make_ring({"x"}, {0}), Error);
  CHECK_THROWS_AS(make_ring({"1x"}), Error);
  CHECK(make_ring({"x", "y"})->is_standard());
  CHECK_FALSE(elementary_ring(2)->is_standard());
}

TEST_CASE("parsing and printing") {
  Ring r = standard_ring(3);
  CHECK(to_string(P("3/2*x1^2*x2 - x3 + 1", r)) == "3/2*x1^2*x2 - x3 + 1");
  CHECK(to_string(P("(x1 + x2)^2", r)) == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(to_string(P("2 x1 x2 - x2*x1", r)) == "x1*x2");
  CHECK(P("x1 - x1", r).is_zero());
  CHECK(to_string(P("-(x3)", r)) == "-x3");
  try {
    P("x1 + y", r);
    FAIL("expected a parse error");
  } catch (const PolynomialParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(P("x1 +", r), PolynomialParseError);
  CHECK_THROWS_AS(P("x1^", r), PolynomialParseError);
  CHECK_THROWS_AS(P("1/0", r), Error);
  CHECK_THROWS_AS(P("(x1", r), PolynomialParseError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = random_poly(rng, r, 3, 4);
    CHECK(P(to_string(f), r) == f);
  }
}

TEST_CASE("normal forms") {
  Ring r = make_ring({"x", "y"});
  GroebnerBasis gx = buchberger({P("x^2", r)});
  CHECK(normal_form(P("x^2", r), gx).is_zero());
  CHECK(normal_form(P("1", r), gx) == P("1", r));
  GroebnerBasis ps = buchberger({power_sum(r, 2), power_sum(r, 3)});
  CHECK(normal_form(power_sum(r, 4), ps).is_zero());
  CHECK_THROWS_AS(normal_form(P("1", make_ring({"z"})), gx), Error);
}

TEST_CASE("normal form is linear and idempotent") {
  Ring r = standard_ring(3);
  std::mt19937_64 rng(17);
  std::vector<GroebnerBasis> bases{buchberger({P("x1^2", r), P("x2^2", r), P("x3^3", r)}),
                                   buchberger({power_sum(r, 2), power_sum(r, 3), power_sum(r, 4)}),
                                   buchberger({P("x1^2 + x2*x3", r), P("x2^2 - x1*x3", r), P("x3^3", r)})};
  for (int t = 0; t < 40; ++t) {
    const GroebnerBasis& gb = bases[t % bases.size()];
    Polynomial f = random_poly(rng, r, 4, 5), g = random_poly(rng, r, 4, 5);
    Rational c = static_cast<int>(rng() % 7) - 3;
    Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(f + c * g, gb) == nf + c * normal_form(g, gb));
    CHECK(normal_form(nf, gb) == nf);
    for (const auto& term : nf.terms())
      for (const auto& h : gb.generators) CHECK_FALSE(h.leading_monomial().divides(term.monomial));
  }
}

TEST_CASE("Groebner bases") {
  Ring r = make_ring({"x", "y"});
  GroebnerBasis g = buchberger({P("x^2", r), P("y^2", r)});
  REQUIRE(g.generators.size() == 2);
  CHECK(is_groebner_basis(g));
  // Degrees 2 and 3 in two standard variables: 2 * 3 = 6. Over the weighted
  // elementary ring the same ideal has dimension 3.
  CHECK(quotient_presentation(buchberger({power_sum(r, 2), power_sum(r, 3)})).dim() == 6);
  CHECK(quotient_of(elementary_ring(2), {rewrite_in_elementary_basis(power_sum(r, 2)),
                                         rewrite_in_elementary_basis(power_sum(r, 3))})
            .dim() == 3);
  QuotientPresentation co = quotient_of(r, elementary_images(r));
  CHECK(co.dim() == 2);
  CHECK(dense_series(co) == std::vector<std::int64_t>{1, 1});
  CHECK_THROWS_AS(buchberger({P("x^2 + y", r)}), Error);

  // Every generator of the input ideal reduces to zero; the basis is reduced.
  Ring s = standard_ring(3);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int t = 0; t < 10; ++t) {
    std::vector<Polynomial> gens;
    for (int d : {2, 2, 3}) {
      Polynomial f(s);
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) f += c(rng) * Polynomial::monomial(s, Monomial{{a, b, d - a - b}});
      if (!f.is_zero()) gens.push_back(f);
    }
    GroebnerBasis gb = buchberger(gens);
    CHECK(is_groebner_basis(gb));
    for (const auto& f : gens) CHECK(normal_form(f, gb).is_zero());
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
      CHECK(gb.generators[i].leading_coeff() == 1);
      CHECK(gb.generators[i].is_homogeneous());
      for (std::size_t j = 0; j < gb.generators.size(); ++j)
        if (i != j)
          for (const auto& term : gb.generators[j].terms())
            CHECK_FALSE(gb.generators[i].leading_monomial().divides(term.monomial));
    }
  }
}

TEST_CASE("quotient presentations of monomial ideals match the staircase") {
  Ring r = standard_ring(3);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<int>> gens;
    std::vector<int> bound;
    std::vector<Polynomial> polys;
    for (int v = 0; v < 3; ++v) {
      int e = 1 + static_cast<int>(rng() % 4);
      std::vector<int> g(3, 0);
      g[v] = e;
      gens.push_back(g);
      bound.push_back(e);
    }
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<int> g{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      if (g == std::vector<int>{0, 0, 0}) continue;
      gens.push_back(g);
    }
    for (const auto& g : gens) polys.push_back(Polynomial::monomial(r, Monomial{g}));
    QuotientPresentation q = quotient_of(r, polys);
    auto expected = oracle::standard_monomials(gens, bound);
    CHECK(q.dim() == expected.size());
    for (const auto& e : expected) CHECK(q.index.contains(e));
  }
}

TEST_CASE("multiplication matrices commute and shift degree") {
  Ring r = standard_ring(3);
  for (const auto& gens : std::vector<std::vector<Polynomial>>{
           {power_sum(r, 2), power_sum(r, 3), power_sum(r, 4)},
           {P("x1^2", r), P("x2^3", r), P("x3^2", r), P("x1*x2*x3", r)},
           {P("x1^2 + x2*x3", r), P("x2^2 - x1*x3", r), P("x3^3", r)}}) {
    QuotientPresentation q = quotient_of(r, gens);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(q.mult_matrices[i] * q.mult_matrices[j] == q.mult_matrices[j] * q.mult_matrices[i]);
    for (std::size_t col = 0; col < q.dim(); ++col)
      for (std::size_t row = 0; row < q.dim(); ++row)
        if (q.mult_matrices[0](row, col) != 0) CHECK(q.degree_of[row] == q.degree_of[col] + 1);
    // x1 * (basis element) computed through the matrix agrees with reduction.
    for (std::size_t col = 0; col < q.dim(); ++col) {
      Polynomial m = Polynomial::monomial(r, q.standard_monomials[col]) * P("x1", r);
      CHECK(q.coordinates_of(normal_form(m, q.gb)) == q.mult_matrices[0].column(col));
    }
  }
}

TEST_CASE("standard monomials of (x^2, y^2)") {
  Ring r = make_ring({"x", "y"});
  QuotientPresentation q = quotient_of(r, {P("x^2", r), P("y^2", r)});
  CHECK(q.dim() == 4);
  CHECK(q.degree_of == std::vector<int>{0, 1, 1, 2});
  QuotientPresentation one = quotient_of(make_ring({"x"}), {P("x", make_ring({"x"}))});
  CHECK(one.dim() == 1);
  CHECK_THROWS_AS(quotient_of(r, {P("x^2", r)}), Error);
  CHECK_THROWS_AS(quotient_of(r, {}), Error);
  try {
    quotient_of(r, {P("x^5", r), P("y^5", r)}, 10);
    FAIL("expected the resource guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceGuard);
  }
}

TEST_CASE("symmetric functions") {
  Ring r = standard_ring(2);
  CHECK(to_string(elementary_symmetric(r, 1)) == "x1 + x2");
  CHECK(to_string(elementary_symmetric(r, 2)) == "x1*x2");
  CHECK(to_string(power_sum(r, 3)) == "x1^3 + x2^3");
  CHECK_THROWS_AS(elementary_symmetric(r, 3), Error);
  CHECK(newton_reduction_check(2, 3));
  CHECK(newton_reduction_check(3, 4));
  CHECK(newton_reduction_check(4, 9));
  CHECK_THROWS_AS(newton_reduction_check(2, 2), Error);
}

TEST_CASE("rewriting in the elementary basis") {
  Ring r2 = standard_ring(2), r3 = standard_ring(3);
  CHECK(to_string(rewrite_in_elementary_basis(power_sum(r2, 2))) == "E1^2 - 2*E2");
  CHECK(to_string(rewrite_in_elementary_basis(elementary_symmetric(r3, 3))) == "E3");
  CHECK(to_string(rewrite_in_elementary_basis(power_sum(r3, 1))) == "E1");
  CHECK_THROWS_AS(rewrite_in_elementary_basis(P("x1^2", r2)), Error);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    // Symmetrize a random polynomial over all permutations.
    Polynomial f = random_poly(rng, r3, 3, 3), sym(r3);
    std::vector<std::size_t> perm{0, 1, 2};
    do sym += f.permute(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(is_symmetric(sym));
    Polynomial g = rewrite_in_elementary_basis(sym);
    CHECK(g.substitute(elementary_images(r3)) == sym);
  }
}

TEST_CASE("complete intersection series match the product formula") {
  struct Case {
    Ring ring;
    std::vector<Polynomial> gens;
    std::vector<int> degs, weights;
  };
  Ring r3 = standard_ring(3), r2 = standard_ring(2), e3 = elementary_ring(3);
  std::vector<Case> cases{
      {r2, {power_sum(r2, 2), power_sum(r2, 3)}, {2, 3}, {1, 1}},
      {r3, {power_sum(r3, 2), power_sum(r3, 3), power_sum(r3, 4)}, {2, 3, 4}, {1, 1, 1}},
      {r3, {power_sum(r3, 3), power_sum(r3, 4), power_sum(r3, 5)}, {3, 4, 5}, {1, 1, 1}},
      {e3, {rewrite_in_elementary_basis(power_sum(r3, 2)), rewrite_in_elementary_basis(power_sum(r3, 3)),
            rewrite_in_elementary_basis(power_sum(r3, 4))}, {2, 3, 4}, {1, 2, 3}},
      {e3, {P("E1^2", e3), P("E3", e3), P("E2^3", e3)}, {2, 3, 6}, {1, 2, 3}},
  };
  for (const auto& c : cases) {
    QuotientPresentation q = quotient_of(c.ring, c.gens);
    CHECK(dense_series(q) == oracle::series_by_expansion(c.degs, c.weights, 60));
  }
}
