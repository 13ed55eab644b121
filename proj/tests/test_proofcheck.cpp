#include <doctest.h>

#include <random>

#include "cia/groebner.hpp"
#include "cia/proofcheck.hpp"
#include "oracles.hpp"

using namespace cia;

namespace {

using Mat = std::vector<std::vector<long>>;

// Leibniz determinant of the submatrix on 1-based rows/cols; empty gives 1.
long det(const Mat& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  long total = 0;
  do {
    long prod = 1;
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      prod *= M[rows[i] - 1][cols[perm[i]] - 1];
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    }
    total += inv % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<int> without(int n, std::vector<int> drop) {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

// Both identities evaluated numerically, signs as printed.
long eq_residual(const Mat& M, bool wide, int n, int a, int b) {
  const int m = wide ? n + 1 : n;
  auto rows_b = wide ? without(n, {}) : without(n, {b});
  long lhs = M[b - 1][a - 1] * det(M, rows_b, without(m, {a})) -
             M[b - 1][a] * det(M, rows_b, without(m, {a + 1}));
  long rhs = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == b) continue;
    int e = a + i - 1 + (wide && i > b ? 1 : 0);
    long sign = e % 2 ? -1 : 1;
    std::vector<int> two{std::min(i, b), std::max(i, b)};
    auto rest = wide ? without(n, {i}) : without(n, {i, b});
    rhs += sign * det(M, two, {a, a + 1}) * det(M, rest, without(m, {a, a + 1}));
  }
  return lhs - rhs;
}

int tag_of(const VerificationReport& r) {
  for (const auto& note : r.notes)
    if (note.rfind("in(S) tag (", 0) == 0) return note[11] - '0';
  return -1;
}

bool has_check(const VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("column-exchange identities") {
  CHECK(verify_eq1(3, 1, 3).passed());
  CHECK(verify_eq1(2, 1, 2).passed());
  CHECK(verify_eq2(3, 1, 2).passed());
  CHECK(verify_eq2(2, 1, 1).passed());
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (b != a) CHECK(verify_eq1(4, a, b).passed());
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(verify_eq2(4, a, b).passed());
  CHECK_THROWS_AS(verify_eq1(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(verify_eq1(3, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(verify_eq2(3, 4, 1), InvalidArgument);
  CHECK_THROWS_AS(verify_eq2(3, 1, 0), InvalidArgument);
}

TEST_CASE("identities agree with numeric evaluation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Mat M(n, std::vector<long>(n + 1));
      for (auto& row : M)
        for (auto& x : row) x = entry(rng);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a < n && b != a) REQUIRE(eq_residual(M, false, n, a, b) == 0);
          REQUIRE(eq_residual(M, true, n, a, b) == 0);
        }
    }
}

TEST_CASE("case constraints") {
  CHECK_NOTHROW((CaseSpec{Case::i, 4, 1, 2}.validate()));
  CHECK_THROWS_AS((CaseSpec{Case::i, 4, 2, 2}.validate()), InvalidArgument);
  CHECK_NOTHROW((CaseSpec{Case::ii, 4, 2, 2}.validate()));
  CHECK_THROWS_AS((CaseSpec{Case::ii, 4, 4, 1}.validate()), InvalidArgument);
  CHECK_NOTHROW((CaseSpec{Case::iv, 4, 4, 3}.validate()));
  CHECK_THROWS_AS((CaseSpec{Case::iv, 4, 3, 3}.validate()), InvalidArgument);
  CHECK((CaseSpec{Case::iii, 4, 1, 2}.m()) == 5);
  CHECK(cases_for(Case::i, 4).size() == 6);
  CHECK(cases_for(Case::ii, 4).size() == 6);
  CHECK(cases_for(Case::iii, 4).size() == 6);
  CHECK(cases_for(Case::iv, 4).size() == 6);
  CHECK_THROWS_AS(verify_table(CaseSpec{Case::iii, 4, 3, 2}), InvalidArgument);
}

TEST_CASE("initial-term tables") {
  // n=5, a=2, b=4 has b = n-1 and a < n-2; the tag is (2)
  auto r = verify_table({Case::i, 5, 2, 4});
  CHECK(r.passed());
  CHECK(tag_of(r) == 2);
  CHECK(has_check(r, "T1 S (b = n-1, a < n-2)"));
  auto r2 = verify_table({Case::i, 4, 2, 3});
  CHECK(r2.passed());
  CHECK(tag_of(r2) == 1);
  CHECK(has_check(r2, "T1 S (b = n-1, a = n-2)"));
  auto r3 = verify_table({Case::iv, 4, 4, 3});
  CHECK(r3.passed());
  CHECK(tag_of(r3) == 1);
  auto r4 = verify_table({Case::i, 6, 1, 3});
  CHECK(r4.passed());
  CHECK(has_check(r4, "T1 S (b < n-1)"));
  CHECK(tag_of(r4) == 2);

  // the printed case 3.ii S row is superseded at a = n-1
  auto e = verify_table({Case::ii, 5, 4, 2});
  CHECK(e.passed());
  CHECK(has_check(e, "T2 S (a = n-1, b < n-1) [erratum E1]"));
  bool noted = false;
  for (const auto& note : e.notes) noted = noted || note.find("printed formula gives") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("appendix sweep with branch coverage") {
  auto r = verify_appendix(2, 5, 4, 6);
  CHECK(r.passed());
  CHECK(r.checks.back().name == "branch coverage of table rows");
  CHECK(r.checks.back().passed);
  std::set<std::string> ids;
  for (const auto& row : table_rows()) ids.insert(row.id());
  CHECK(ids.size() == table_rows().size());
}

TEST_CASE("non-zerodivisor condition") {
  Grid g(2, 3);
  CHECK(check_nzd(g, 3, 1).passed());
  CHECK(check_nzd(g, 3, 2, true).passed());
  CHECK_THROWS_AS(check_nzd(g, 3, 3), RegimeError);
  CHECK_THROWS_AS(check_nzd(g, 3, 0), RegimeError);
  CHECK_THROWS_AS(check_nzd(Grid(3, 2), 3, 1), RegimeError);

  // oracle: Leibniz leading terms of every generator avoid p_{d,(j-1)k+1}
  Grid h(3, 3);
  auto I0 = ideal_I0_minimal<Rational>(h, 3, 2, 3);
  for (int j = 1; j <= 2; ++j) {
    int v = I0.ring().index({3, (j - 1) * 3 + 1});
    bool free = true;
    for (const auto& spec : transversal_specs(h, 3, 3)) {
      auto lead = oracle::leibniz<Rational>(I0.ring(), FieldDesc::rationals(), spec.rows, spec.cols).leading_monomial();
      free = free && lead.exponent(v) == 0;
    }
    CHECK(free);
    CHECK(check_nzd(h, 3, j).passed());
  }
}

TEST_CASE("localization transform") {
  Ring r{3, 6};
  // closure fails: [12|34] without [13|34]
  std::vector<MinorSpec> open{MinorSpec::make(r, {1, 2}, {3, 4})};
  CHECK_THROWS_AS(localize(r, open, {3}, {1}), InvalidArgument);

  // no generator touches column 1: unchanged
  std::vector<MinorSpec> G;
  for (auto& A : subsets({1, 2, 3}, 2)) G.push_back(MinorSpec::make(r, A, {3, 4}));
  CHECK(localize(r, G, {1}, {1}) == G);

  // one localization step at (k, l, d) = (2, 3, 3)
  auto J = localize(r, transversal_specs(Grid(2, 3), 3, 3), {3}, {1});
  CHECK(J.size() == 21);
  int vars = 0;
  for (const auto& s : J) {
    CHECK(std::find(s.cols.begin(), s.cols.end(), 1) == s.cols.end());
    vars += s.cols.size() == 1;
  }
  CHECK(vars == 3);
  CHECK(verify_localization_step(2, 3, 3).passed());
  CHECK(verify_localization_step(3, 3, 3).passed());
}

TEST_CASE("localized generator counts match the closed form") {
  // d(k-1) variables + (l-1) C(k,2) C(d,2) block minors + k^(l-1) C(d,l-1) transversal minors
  for (auto [k, l, d] : std::vector<std::tuple<int, int, int>>{{2, 3, 3}, {3, 3, 3}, {2, 4, 4}, {3, 4, 4}, {2, 3, 4}}) {
    Grid g(k, l);
    Ring r{d, g.size()};
    auto J = localize(r, transversal_specs(g, d, l), {d}, {1});
    long want = d * (k - 1) + (l - 1) * oracle::binom(k, 2) * oracle::binom(d, 2) +
                oracle::ipow(k, l - 1) * oracle::binom(d, l - 1);
    CHECK(static_cast<long>(J.size()) == want);
  }
}

TEST_CASE("induction down to the base case") {
  for (auto [k, l, d] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 3, 3}, {3, 3, 3}, {2, 4, 4}, {4, 4, 4}})
    CHECK(verify_localization_chain(k, l, d).passed());
  CHECK_THROWS_AS(verify_localization_chain(3, 2, 3), RegimeError);
}
