#include <gtest/gtest.h>

#include <algorithm>

#include "hypersmooth/constructions.hpp"
#include "hypersmooth/groebner.hpp"
#include "hypersmooth/random.hpp"
#include "hypersmooth/rational.hpp"
#include "hypersmooth/smoothness.hpp"

using namespace hypersmooth;
using Poly = Polynomial<GaloisField>;

namespace {

template <class Field>
Polynomial<Field> poly(const Field& k, std::size_t nv,
                       const std::vector<std::pair<std::vector<unsigned>, typename Field::Element>>& t) {
  std::vector<typename Polynomial<Field>::Term> terms;
  for (const auto& [e, c] : t) terms.emplace_back(Monomial(e), c);
  return Polynomial<Field>(k, nv, std::move(terms));
}

template <class Field>
void expect_reduced_groebner(const GroebnerBasis<Field>& gb) {
  const auto& g = gb.elements();
  const Field& k = gb.field();
  for (const auto& p : g) EXPECT_TRUE(k.is_zero(k.sub(p.leading_coefficient(), k.one())));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[j].terms()) EXPECT_FALSE(g[i].leading_monomial().divides(m));
      if (i < j) {
        EXPECT_TRUE(normal_form(s_polynomial(g[i], g[j]), g).is_zero());
      }
    }
}

std::vector<Poly> random_generators(const GaloisField& k, Rng& rng) {
  const std::size_t nv = 2 + uniform_below(rng, 2);
  const std::size_t count = 1 + uniform_below(rng, 3);
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 3));
    std::vector<Poly::Term> t;
    for (const auto& m : monomials_of_degree(nv, d))
      if (uniform_below(rng, 2)) t.emplace_back(m, random_element(k, rng));
    Poly p(k, nv, std::move(t));
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Poly::variable(k, nv, 0));
  return gens;
}

}  // namespace

TEST(NormalForm, Examples) {
  const auto f2 = GaloisField::prime(2);
  const auto x2y = poly(f2, 2, {{{2, 1}, 1}, {{0, 1}, 1}});
  EXPECT_EQ(normal_form(x2y, std::vector<Poly>{poly(f2, 2, {{{2, 0}, 1}})}), Poly::variable(f2, 2, 1));
  const std::vector<Poly> vars{Poly::variable(f2, 3, 0), Poly::variable(f2, 3, 1), Poly::variable(f2, 3, 2)};
  EXPECT_TRUE(normal_form(poly(f2, 3, {{{3, 0, 0}, 1}}), vars).is_zero());
  for (const auto& v : vars) EXPECT_TRUE(normal_form(v, vars).is_zero());
}

TEST(NormalForm, RemainderIsIrreducibleAndCongruent) {
  Rng rng(1);
  const auto k = GaloisField::prime(5);
  for (int t = 0; t < 50; ++t) {
    const auto gens = random_generators(k, rng);
    const auto gb = buchberger(gens);
    const auto f = random_generators(k, rng).front();
    if (f.nvars() != gb.nvars()) continue;
    const auto r = normal_form(f, gb);
    for (const auto& [m, c] : r.terms())
      for (const auto& g : gb.elements()) EXPECT_FALSE(g.leading_monomial().divides(m));
    EXPECT_TRUE(normal_form(f - r, gb).is_zero());
  }
}

TEST(Buchberger, Examples) {
  const auto f2 = GaloisField::prime(2);
  const std::vector<Poly> vars{Poly::variable(f2, 2, 0), Poly::variable(f2, 2, 1)};
  EXPECT_EQ(buchberger(vars).elements(), (std::vector<Poly>{vars[1], vars[0]}));

  const auto f5 = GaloisField::prime(5);
  const auto a = poly(f5, 2, {{{2, 0}, 1}, {{0, 2}, 4}});
  const auto b = poly(f5, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
  const auto gb = buchberger(std::vector<Poly>{a, b});
  EXPECT_EQ(gb.elements(), (std::vector<Poly>{poly(f5, 2, {{{0, 2}, 1}}), poly(f5, 2, {{{2, 0}, 1}})}));
  EXPECT_STREQ(gb.order(), "degrevlex");
}

TEST(Buchberger, RationalExample) {
  const RationalField q;
  const auto a = poly(q, 2, {{{2, 0}, Rational(1)}, {{0, 2}, Rational(-1)}});
  const auto b = poly(q, 2, {{{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}});
  const auto gb = buchberger(std::vector<Polynomial<RationalField>>{a, b});
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.elements()[0], poly(q, 2, {{{0, 2}, Rational(1)}}));
  EXPECT_EQ(gb.elements()[1], poly(q, 2, {{{2, 0}, Rational(1)}}));
  const auto c = poly(q, 3, {{{1, 1, 0}, Rational(3, 2)}, {{0, 0, 2}, Rational(-5)}});
  const auto d = poly(q, 3, {{{0, 2, 0}, Rational(2, 7)}, {{1, 0, 1}, Rational(1)}});
  expect_reduced_groebner(buchberger(std::vector<Polynomial<RationalField>>{c, d}));
}

TEST(Buchberger, FermatJacobianBasis) {
  const auto f2 = GaloisField::prime(2);
  const auto f = fermat_form(f2, {1, 1, 1}, 3);
  std::vector<Poly> gens;
  for (const auto& g : jacobian_generators(f)) gens.push_back(g.poly());
  const auto gb = buchberger(gens);
  std::vector<bool> seen(3, false);
  for (const auto& g : gb.elements())
    if (auto v = g.leading_monomial().pure_power_variable()) seen[*v] = true;
  EXPECT_EQ(seen, (std::vector<bool>{true, true, true}));
  EXPECT_TRUE(is_projectively_empty(gb));
  EXPECT_FALSE(search_singular_point(f, 4).has_value());
}

TEST(Buchberger, OutputIsReducedGroebnerBasis) {
  Rng rng(2);
  for (const auto& k : {GaloisField::prime(2), GaloisField::prime(3), GaloisField::canonical(2, 2),
                        GaloisField::prime(7)}) {
    for (int t = 0; t < 40; ++t) expect_reduced_groebner(buchberger(random_generators(k, rng)));
  }
}

TEST(Buchberger, GeneratorsReduceToZero) {
  Rng rng(3);
  const auto k = GaloisField::prime(3);
  for (int t = 0; t < 60; ++t) {
    const auto gens = random_generators(k, rng);
    const auto gb = buchberger(gens);
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  }
}

TEST(Buchberger, MembershipStableUnderMultiplication) {
  Rng rng(4);
  const auto k = GaloisField::canonical(2, 2);
  for (int t = 0; t < 60; ++t) {
    const auto gens = random_generators(k, rng);
    const auto gb = buchberger(gens);
    const std::size_t nv = gb.nvars();
    Poly f = gens[0].scaled(random_element(k, rng));
    if (gens.size() > 1) f = f * Poly::variable(k, nv, 0) + gens[1];
    if (!normal_form(f, gb).is_zero()) continue;
    const auto g = random_form(k, nv, 1 + static_cast<unsigned>(uniform_below(rng, 2)), rng).poly();
    EXPECT_TRUE(normal_form(f * g, gb).is_zero());
  }
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  Rng rng(5);
  const auto k = GaloisField::prime(5);
  for (int t = 0; t < 40; ++t) {
    auto gens = random_generators(k, rng);
    const auto reference = buchberger(gens).elements();
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(buchberger(gens).elements(), reference);
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    EXPECT_EQ(buchberger(gens).elements(), reference);
  }
}

TEST(Buchberger, BudgetAndPreconditions) {
  const auto f3 = GaloisField::prime(3);
  const auto a = poly(f3, 3, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
  const auto b = poly(f3, 3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 2}});
  const auto c = poly(f3, 3, {{{0, 2, 0}, 1}, {{1, 0, 1}, 1}});
  GroebnerOptions tight;
  tight.step_budget = 1;
  try {
    (void)buchberger(std::vector<Poly>{a, b, c}, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  EXPECT_NO_THROW(buchberger(std::vector<Poly>{a, b, c}));
  EXPECT_THROW(buchberger(std::vector<Poly>{}), Error);
  EXPECT_THROW(buchberger(std::vector<Poly>{Poly(f3, 3)}), Error);
}

TEST(ProjectiveEmptiness, Examples) {
  const auto f2 = GaloisField::prime(2);
  const GroebnerBasis<GaloisField> vars(
      f2, 3, {Poly::variable(f2, 3, 2), Poly::variable(f2, 3, 1), Poly::variable(f2, 3, 0)});
  EXPECT_TRUE(is_projectively_empty(vars));
  const auto gb = buchberger(std::vector<Poly>{poly(f2, 3, {{{2, 0, 0}, 1}}), poly(f2, 3, {{{1, 1, 0}, 1}}),
                                               poly(f2, 3, {{{0, 2, 0}, 1}})});
  EXPECT_FALSE(is_projectively_empty(gb));
  const GroebnerBasis<GaloisField> bad(f2, 2, {poly(f2, 2, {{{2, 0}, 1}, {{0, 1}, 1}})});
  try {
    (void)is_projectively_empty(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
  }
}

TEST(ProjectiveEmptiness, AgreesWithPointSearch) {
  Rng rng(6);
  for (const auto& k : {GaloisField::prime(2), GaloisField::prime(3)}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t nv = 2 + uniform_below(rng, 2);
      std::vector<Poly> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_form(k, nv, 1 + static_cast<unsigned>(uniform_below(rng, 2)), rng).poly());
      const bool empty = is_projectively_empty(buchberger(gens));
      // common zero search over F_{q^j}, j <= 3
      bool found = false;
      for (unsigned j = 1; j <= 3 && !found; ++j) {
        const auto emb = extension_of(k, j);
        for_each_projective_point(emb.target().order(), nv - 1, [&](const std::vector<GaloisField::Element>& pt) {
          bool zero = true;
          for (const auto& g : gens) {
            const HomogeneousForm<GaloisField> h(g, g.leading_monomial().degree());
            zero = zero && embed(h, emb).evaluate(pt) == 0;
          }
          found = zero;
          return !found;
        });
      }
      if (empty) {
        EXPECT_FALSE(found);
      }
      if (found) {
        EXPECT_FALSE(empty);
      }
    }
  }
}
