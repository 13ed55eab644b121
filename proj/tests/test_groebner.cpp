#include <doctest.h>

#include <cstdlib>

#include "cia/groebner.hpp"
#include "oracles.hpp"

using namespace cia;

namespace {

const FieldDesc QQ = FieldDesc::rationals();

Polynomial<Rational> var(const Ring& r, int row, int col) {
  return Polynomial<Rational>::variable(r, QQ, {row, col});
}

}  // namespace

TEST_CASE("normal form") {
  Grid g(2, 3);
  Ring r{3, 6};
  auto I0 = ideal_I0_minimal<Rational>(g, 3, 2, 3);
  const auto& G = I0.generators();
  auto f = var(r, 1, 1) * minor<Rational>(r, QQ, {1, 2}, {3, 4}) + var(r, 3, 6);
  auto tr = normal_form<Rational>(f, G);
  CHECK(tr.remainder == var(r, 3, 6));
  CHECK(tr.replays(G));
  CHECK(normal_form<Rational>(G[3], G).remainder.is_zero());
  auto z = normal_form<Rational>(Polynomial<Rational>(r, QQ), G);
  CHECK(z.remainder.is_zero());
  CHECK(z.steps.empty());
  CHECK_THROWS_AS(normal_form<Rational>(var(Ring{2, 6}, 1, 1), G), IncompatibleError);
}

TEST_CASE("divisor rule prefers the greatest leading term") {
  Ring r{2, 2};
  auto a = var(r, 1, 1), b = var(r, 1, 2);
  // both divide a*b; a*b is the greater lead, so it is chosen
  std::vector<Polynomial<Rational>> G{b + var(r, 2, 2), a * b + var(r, 2, 1)};
  auto tr = normal_form<Rational>(a * b, G);
  REQUIRE(!tr.steps.empty());
  CHECK(tr.steps.front().divisor == 1);
  CHECK(tr.remainder == -var(r, 2, 1));
}

TEST_CASE("S-polynomials") {
  Ring r{3, 2};
  auto g1 = minor<Rational>(r, QQ, {1, 2}, {1, 2});
  auto g2 = minor<Rational>(r, QQ, {1, 3}, {1, 2});
  auto g3 = minor<Rational>(r, QQ, {2, 3}, {1, 2});
  std::vector<Polynomial<Rational>> G{g1, g2, g3};
  CHECK(reduce<Rational>(s_polynomial(g1, g2), G).is_zero());
  CHECK(s_polynomial(g1, g1).is_zero());
  auto x = var(r, 1, 1), y = var(r, 2, 2);
  CHECK(reduce<Rational>(s_polynomial(x + var(r, 3, 1), y + var(r, 3, 2)), std::vector{x + var(r, 3, 1), y + var(r, 3, 2)})
            .is_zero());
}

TEST_CASE("is_groebner") {
  Grid g(2, 3);
  auto I0 = ideal_I0_minimal<Rational>(g, 3, 2, 3);
  auto rep = is_groebner<Rational>(I0.generators());
  CHECK(rep.passed());
  for (const auto& S : script_L(g)) CHECK(is_groebner<Rational>(ideal_IS<Rational>(g, 3, 2, S).generators()).passed());

  Ring r{2, 2};
  std::vector<Polynomial<Rational>> bad{minor<Rational>(r, QQ, {1, 2}, {1, 2}), var(r, 1, 1)};
  auto fail = is_groebner<Rational>(bad);
  CHECK_FALSE(fail.passed());
  CHECK(fail.checks.front().witness["remainder"] == "-p1_2*p2_1");
  CHECK(fail.checks.front().witness["i"] == 0);
}

TEST_CASE("buchberger") {
  Grid g(2, 3);
  auto I0 = ideal_I0_minimal<Rational>(g, 3, 2, 3);
  auto gb = buchberger<Rational>(I0.generators());
  // already a Groebner basis: the reduced basis has the same leading terms
  std::vector<Monomial> in0;
  for (const auto& f : I0.generators()) in0.push_back(f.leading_monomial());
  std::sort(in0.begin(), in0.end(), std::greater<>());
  CHECK(gb.leading_monomials() == in0);
  auto again = buchberger<Rational>(gb.elements);
  CHECK(again.elements == gb.elements);
  for (const auto& f : I0.generators()) CHECK(reduce<Rational>(f, gb.elements).is_zero());
  CHECK(is_groebner<Rational>(gb.elements).passed());

  // J at (2,2,2)
  Grid g22(2, 2);
  auto J = hyperedge_ideal<Rational>(g22, 2, delta_st(g22, 2, 2));
  CHECK(J.size() == 4);
  auto gbJ = buchberger<Rational>(J.generators());
  CHECK(is_groebner<Rational>(gbJ.elements).passed());
  for (const auto& f : J.generators()) CHECK(reduce<Rational>(f, gbJ.elements).is_zero());
  for (std::size_t i = 0; i < gbJ.elements.size(); ++i) {
    CHECK(gbJ.elements[i].leading_coeff().is_one());
    for (std::size_t j = 0; j < gbJ.elements.size(); ++j)
      if (i != j)
        for (const auto& t : gbJ.elements[j].terms())
          CHECK_FALSE(gbJ.elements[i].leading_monomial().divides(t.mono));
  }
  MESSAGE("reduced GB of J at (2,2,2) has " << gbJ.elements.size() << " elements");
}

TEST_CASE("buchberger is schedule independent") {
  Grid g(2, 2);
  auto J = hyperedge_ideal<Rational>(g, 3, delta_st(g, 2, 2));
  auto gens = J.generators();
  auto ref = buchberger<Rational>(gens);
  std::reverse(gens.begin(), gens.end());
  CHECK(buchberger<Rational>(gens).elements == ref.elements);
  ResourceLimits chain;
  chain.chain_criterion = true;
  CHECK(buchberger<Rational>(gens, chain).elements == ref.elements);
  setenv("CIA_THREADS", "1", 1);
  CHECK(buchberger<Rational>(J.generators()).elements == ref.elements);
  unsetenv("CIA_THREADS");
}

TEST_CASE("resource limits") {
  Grid g(2, 2);
  auto J = hyperedge_ideal<Rational>(g, 3, delta_st(g, 2, 2));
  ResourceLimits tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(buchberger<Rational>(J.generators(), tiny), ResourceError);
  ResourceLimits shallow;
  shallow.max_degree = 2;
  CHECK_THROWS_AS(buchberger<Rational>(J.generators(), shallow), ResourceError);
}

TEST_CASE("containment and equality") {
  Grid g(2, 3);
  auto J = hyperedge_ideal<Rational>(g, 3, delta_st(g, 2, 3));
  auto I14 = ideal_IS<Rational>(g, 3, 2, {1, 4});
  auto I16 = ideal_IS<Rational>(g, 3, 2, {1, 6});
  CHECK(ideal_contains(I14, J));
  CHECK_FALSE(ideal_contains(I14, I16));
  CHECK_FALSE(ideal_contains(I16, I14));
  CHECK(ideal_contains(I14, I14));
  CHECK(ideal_equal(I14, I14));
}

TEST_CASE("radical certificate") {
  Ring r{2, 2};
  Grid g(2, 3);
  for (const auto& S : script_L(g))
    CHECK(radical_certificate(*basis_of(ideal_IS<Rational>(g, 3, 2, S))) == RadicalCertificate::squarefree);
  Ideal<Rational> sq(r, 1, 2, QQ);
  sq.add(var(r, 1, 1) * var(r, 1, 1));
  CHECK(radical_certificate(*basis_of(sq)) == RadicalCertificate::inconclusive);
  auto I0 = ideal_I0_minimal<Rational>(Grid(3, 3), 3, 2, 3);
  CHECK(radical_certificate(*adopt_generators_as_basis(I0)) == RadicalCertificate::squarefree);
}

TEST_CASE("intersection") {
  Ring r{2, 2};
  Ideal<Rational> a(r, 1, 2, QQ), b(r, 1, 2, QQ), ab(r, 1, 2, QQ);
  a.add(var(r, 1, 1));
  b.add(var(r, 1, 2));
  ab.add(var(r, 1, 1) * var(r, 1, 2));
  CHECK(ideal_equal(intersect(a, b), ab));

  Grid g(2, 2);
  auto I0 = ideal_I0_minimal<Rational>(g, 2, 2, 2);
  CHECK(ideal_equal(intersect(I0, I0), I0));
}

TEST_CASE("field independence of leading terms") {
  Grid g(2, 2);
  auto Jq = hyperedge_ideal<Rational>(g, 3, delta_st(g, 2, 2));
  auto Jp = hyperedge_ideal<ModP>(g, 3, delta_st(g, 2, 2), FieldDesc::prime_field(kDefaultPrime));
  CHECK(basis_of(Jq)->leading_monomials() == basis_of(Jp)->leading_monomials());
}
