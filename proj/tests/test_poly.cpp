#include <doctest.h>

#include <random>

#include "cia/poly.hpp"
#include "oracles.hpp"

using namespace cia;

namespace {

const FieldDesc QQ = FieldDesc::rationals();

Polynomial<Rational> var(const Ring& r, int row, int col) {
  return Polynomial<Rational>::variable(r, QQ, {row, col});
}

template <class K>
Polynomial<K> random_poly(const Ring& r, const FieldDesc& f, std::mt19937& rng, int nterms, int maxdeg) {
  std::uniform_int_distribution<int> vd(0, r.nvars() - 1), dd(0, maxdeg), cd(-5, 5);
  std::vector<Term<K>> terms;
  for (int t = 0; t < nterms; ++t) {
    std::vector<Monomial::Factor> fs;
    int deg = dd(rng);
    for (int i = 0; i < deg; ++i) fs.push_back({static_cast<std::uint16_t>(vd(rng)), 1});
    terms.push_back({K::from(cd(rng), f), Monomial(fs)});
  }
  return Polynomial<K>::from_terms(r, f, std::move(terms));
}

}  // namespace

TEST_CASE("variable order") {
  Ring r{3, 6};
  CHECK(var_cmp(r, {1, 2}, {2, 1}) == std::strong_ordering::greater);
  CHECK(var_cmp(r, {1, 1}, {1, 1}) == std::strong_ordering::equal);
  CHECK(var_cmp(r, {2, 3}, {2, 5}) == std::strong_ordering::greater);
  CHECK_THROWS_AS(var_cmp(r, {4, 1}, {1, 1}), BoundsError);
  CHECK_THROWS_AS(r.index({1, 7}), BoundsError);
  CHECK(r.variable_name(r.index({2, 5})) == "p2_5");
}

TEST_CASE("monomial lex agrees with a dense comparator") {
  Ring r{3, 6};
  auto m = [&](std::vector<std::pair<VariableId, int>> f) {
    std::vector<Monomial::Factor> fs;
    for (auto [v, e] : f) fs.push_back({static_cast<std::uint16_t>(r.index(v)), static_cast<std::uint16_t>(e)});
    return Monomial(fs);
  };
  CHECK(m({{{1, 1}, 1}, {{2, 2}, 1}}) > m({{{1, 2}, 1}, {{2, 1}, 1}}));
  CHECK(m({{{1, 1}, 2}}) > m({{{1, 1}, 1}, {{3, 6}, 1}}));
  CHECK((m({{{2, 2}, 1}}) <=> m({{{2, 2}, 1}})) == std::strong_ordering::equal);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> vd(0, r.nvars() - 1), ed(1, 3), nd(0, 4);
  for (int it = 0; it < 2000; ++it) {
    auto make = [&] {
      std::vector<Monomial::Factor> fs;
      int n = nd(rng);
      for (int i = 0; i < n; ++i)
        fs.push_back({static_cast<std::uint16_t>(vd(rng)), static_cast<std::uint16_t>(ed(rng))});
      return Monomial(fs);
    };
    Monomial a = make(), b = make(), c = make();
    int expect = oracle::lex_cmp(oracle::dense(a, r.nvars()), oracle::dense(b, r.nvars()));
    auto got = a <=> b;
    CHECK((got > 0 ? 1 : got < 0 ? -1 : 0) == expect);
    // multiplicative, 1 least
    if (expect != 0) CHECK(((a * c) <=> (b * c)) == got);
    CHECK(a >= Monomial());
  }
}

TEST_CASE("monomial divisibility and lcm") {
  Monomial a({{0, 2}, {3, 1}}), b({{0, 1}, {5, 2}});
  CHECK(Monomial({{0, 1}}).divides(a));
  CHECK_FALSE(b.divides(a));
  Monomial l = lcm(a, b);
  CHECK(l == Monomial({{0, 2}, {3, 1}, {5, 2}}));
  CHECK((l / a) == Monomial({{5, 2}}));
  CHECK(Monomial({{1, 1}}).coprime(Monomial({{65, 1}})));
  CHECK_FALSE(Monomial({{1, 1}, {65, 1}}).coprime(Monomial({{65, 2}})));
  CHECK(a.degree() == 3);
  CHECK_FALSE(a.is_squarefree());
}

TEST_CASE("arithmetic") {
  Ring r{2, 2};
  auto a = var(r, 1, 1), b = var(r, 1, 2);
  CHECK((a + (-a)).is_zero());
  auto prod = (a + b) * (a - b);
  CHECK(prod == a * a - b * b);
  CHECK(prod.to_string() == "p1_1^2 - p1_2^2");
  CHECK(prod.leading_coeff().is_one());
  CHECK_THROWS_AS(Polynomial<Rational>(r, QQ).leading_term(), InvalidArgument);
  auto five = Polynomial<Rational>::constant(r, QQ, 5);
  CHECK(five.leading_coeff() == Rational(5));
  CHECK(five.leading_monomial().is_one());
  Ring other{3, 2};
  CHECK_THROWS_AS(a + var(other, 1, 1), IncompatibleError);
  auto g7 = Polynomial<ModP>::variable(r, FieldDesc::prime_field(7), {1, 1});
  CHECK_THROWS_AS(g7 + Polynomial<ModP>::variable(r, FieldDesc::prime_field(5), {1, 1}), IncompatibleError);
}

TEST_CASE("multiplication matches the evaluation homomorphism over GF(7)") {
  Ring r{2, 3};
  auto f7 = FieldDesc::prime_field(7);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pv(0, 6);
  for (int it = 0; it < 10; ++it) {
    auto f = random_poly<ModP>(r, f7, rng, 6, 3);
    auto g = random_poly<ModP>(r, f7, rng, 6, 3);
    auto fg = f * g, fpg = f + g;
    for (int pt = 0; pt < 20; ++pt) {
      std::vector<ModP> x;
      for (int i = 0; i < r.nvars(); ++i) x.push_back(ModP::from(pv(rng), f7));
      CHECK(fg.evaluate(x) == f.evaluate(x) * g.evaluate(x));
      CHECK(fpg.evaluate(x) == f.evaluate(x) + g.evaluate(x));
    }
  }
}

TEST_CASE("GF(p) arithmetic agrees with rationals reduced mod p") {
  Ring r{2, 3};
  auto fp = FieldDesc::prime_field(kDefaultPrime);
  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    auto f = random_poly<Rational>(r, QQ, rng, 5, 3);
    auto g = random_poly<Rational>(r, QQ, rng, 5, 3);
    CHECK(reduce_mod(f * g, fp) == reduce_mod(f, fp) * reduce_mod(g, fp));
    CHECK(reduce_mod(f - g, fp) == reduce_mod(f, fp) - reduce_mod(g, fp));
  }
  CHECK(reduce_mod(Rational(mpq_class(1, 2)), FieldDesc::prime_field(7)) == ModP(4, 7));
}

TEST_CASE("field elements") {
  CHECK(Rational(mpq_class(2, -4)).to_string() == "-1/2");
  CHECK(Rational::parse("6/4", QQ).to_string() == "3/2");
  CHECK(ModP::from(-1, FieldDesc::prime_field(7)).value() == 6);
  CHECK((ModP(3, 7) * ModP(3, 7).inverse()).is_one());
  CHECK_THROWS(FieldDesc::prime_field(8));
  CHECK(FieldDesc::parse("GF(32003)") == FieldDesc::prime_field(32003));
  CHECK(FieldDesc::parse("QQ") == QQ);
  CHECK_THROWS_AS(Rational(0).inverse(), InvalidArgument);
}
