// Initial-term tables of the appendix, transcribed once and frozen.
//
// Notation: "p(r,c)" is a single variable; "p(r0,c0)..p(r1,c1)" is the run
// p_{r,c0+(r-r0)} for r = r0..r1 (empty when r1 < r0). Indices are linear in
// n, a, b, i. Where the extracted layout put a formula under the wrong part,
// the part is assigned by the formula's own 2-minor factor.

#include "cia/proofcheck.hpp"

namespace cia {

namespace {

TableRow row(int table, Part part, std::string condition, std::string formula, int tag = 0) {
  return {table, part, std::move(condition), std::move(formula), tag};
}

std::vector<TableRow> build() {
  using P = Part;
  std::vector<TableRow> t;

  // case 3.i
  t.push_back(row(1, P::lhs_a, "", "p(1,1)..p(a-1,a-1) p(a,a+1)..p(b-1,b) p(b,a) p(b+1,b+1)..p(n,n)"));
  t.push_back(row(1, P::lhs_a1, "", "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b+1,b+1)..p(n,n)"));
  t.push_back(row(1, P::sum_ib, "i < a",
                  "p(1,1)..p(i-1,i-1) p(i,a) p(i+1,i)..p(a,a-1) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b+1,b+1)..p(n,n)"));
  t.push_back(row(1, P::sum_ib, "i = a", "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b+1,b+1)..p(n,n)"));
  t.push_back(row(1, P::sum_bi, "i > b",
                  "p(1,1)..p(a-1,a-1) p(a,a+2)..p(b-1,b+1) p(b,a) p(b+1,b+2)..p(i-1,i) p(i,a+1) p(i+1,i+1)..p(n,n)"));
  const char* t1[][2] = {
      {"b < n-1", "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b+1,b+1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"},
      {"b = n-1, a < n-2", "p(1,1)..p(a,a) p(a+1,a+2)..p(n-3,n-2) p(n-2,n) p(n-1,a+1) p(n,n-1)"},
      {"b = n-1, a = n-2", "p(1,1)..p(n-3,n-3) p(n-2,n-1) p(n-1,n-2) p(n,n)"},
      {"b = n, a < n-2", "p(1,1)..p(a,a) p(a+1,a+2)..p(n-3,n-2) p(n-2,n) p(n-1,n-1) p(n,a+1)"},
      {"b = n, a = n-2", "p(1,1)..p(n-3,n-3) p(n-2,n-1) p(n-1,n) p(n,n-2)"},
      {"b = n, a = n-1", "p(1,1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"},
  };
  const int t1_tags[] = {2, 2, 1, 2, 1, 1};
  for (const auto& r : t1) t.push_back(row(1, P::second, r[0], r[1]));
  for (int x = 0; x < 6; ++x) t.push_back(row(1, P::s_poly, t1[x][0], t1[x][1], t1_tags[x]));

  // case 3.ii
  t.push_back(row(2, P::lhs_a, "", "p(1,1)..p(b-1,b-1) p(b,a) p(b+1,b)..p(a,a-1) p(a+1,a+1)..p(n,n)"));
  t.push_back(row(2, P::lhs_a1, "", "p(1,1)..p(b-1,b-1) p(b,a+1) p(b+1,b)..p(a+1,a) p(a+2,a+2)..p(n,n)"));
  t.push_back(row(2, P::sum_ib, "i < b",
                  "p(1,1)..p(i-1,i-1) p(i,a) p(i+1,i)..p(b-1,b-2) p(b,a+1) p(b+1,b-1)..p(a+1,a-1) p(a+2,a+2)..p(n,n)"));
  t.push_back(row(2, P::sum_bi, "b < i <= a",
                  "p(1,1)..p(b-1,b-1) p(b,a) p(b+1,b)..p(i-1,i-2) p(i,a+1) p(i+1,i-1)..p(a+1,a-1) p(a+2,a+2)..p(n,n)"));
  t.push_back(row(2, P::sum_bi, "i = a+1",
                  "p(1,1)..p(b-1,b-1) p(b,a) p(b+1,b)..p(a,a-1) p(a+1,a+1) p(a+2,a+2)..p(n,n)"));
  t.push_back(row(2, P::second, "a < n-2",
                  "p(1,1)..p(b-1,b-1) p(b,a) p(b+1,b)..p(a,a-1) p(a+1,a+1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"));
  t.push_back(row(2, P::second, "a = n-2, b < n-2",
                  "p(1,1)..p(b-1,b-1) p(b,n-2) p(b+1,b)..p(n-3,n-4) p(n-2,n) p(n-1,n-1) p(n,n-3)"));
  t.push_back(row(2, P::second, "a = n-2, b = n-2", "p(1,1)..p(n-3,n-3) p(n-2,n-1) p(n-1,n-2) p(n,n)"));
  t.push_back(row(2, P::second, "a = n-1, b < n-2",
                  "p(1,1)..p(b-1,b-1) p(b,n-1) p(b+1,b)..p(n-3,n-4) p(n-2,n-2) p(n-1,n-3) p(n,n)"));
  t.push_back(row(2, P::second, "a = n-1, b = n-2", "p(1,1)..p(n-3,n-3) p(n-2,n) p(n-1,n-2) p(n,n-1)"));
  t.push_back(row(2, P::second, "a = n-1, b = n-1", "p(1,1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"));
  // printed without a condition, but at a = n-1 it lists row n-1 twice
  t.push_back(row(2, P::s_poly, "",
                  "p(1,1)..p(b-1,b-1) p(b,a) p(b+1,b)..p(a,a-1) p(a+1,a+1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"));
  t.back().superseded_when = "a = n-1";
  t.push_back(row(2, P::s_poly, "a = n-1, b < n-1", "p(1,1)..p(b-1,b-1) p(b,n-1) p(b+1,b)..p(n-2,n-3) p(n-1,n) p(n,n-2)"));
  t.back().erratum = "E1";
  t.push_back(row(2, P::s_poly, "a = n-1, b = n-1", "p(1,1)..p(n-2,n-2) p(n-1,n) p(n,n-1)"));
  t.back().erratum = "E1";

  // case 3.iii
  t.push_back(row(3, P::lhs_a, "", "p(1,1)..p(a-1,a-1) p(a,a+1)..p(b-1,b) p(b,a) p(b,b+1)..p(n,n+1)"));
  t.push_back(row(3, P::lhs_a1, "", "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n,n+1)"));
  t.push_back(row(3, P::sum_ib, "i < a",
                  "p(1,1)..p(i-1,i-1) p(i,a) p(i+1,i)..p(a,a-1) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n,n+1)"));
  t.push_back(row(3, P::sum_ib, "i = a", "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n,n+1)"));
  t.push_back(row(3, P::sum_ib, "a < i < b",
                  "p(1,1)..p(a-1,a-1) p(a,a+2)..p(i-1,i+1) p(i,a) p(i+1,i+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n,n+1)"));
  t.push_back(row(3, P::sum_bi, "i > b",
                  "p(1,1)..p(a-1,a-1) p(a,a+2)..p(b-1,b+1) p(b,a) p(b,b+2)..p(i-1,i+1) p(i,a+1) p(i+1,i+2)..p(n,n+1)"));
  t.push_back(row(3, P::second, "b < n-1",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n-2,n-1) p(n-1,n+1) p(n,n)"));
  t.push_back(row(3, P::second, "b = n-1, a < n-2",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(n-2,n-1) p(n-1,a+1) p(n-1,n+1) p(n,n)"));
  t.push_back(row(3, P::second, "b = n-1, a = n-2", "p(1,1)..p(n-2,n-2) p(n-1,n-1) p(n-1,n+1) p(n,n)"));
  t.push_back(row(3, P::second, "b = n, a < n-2",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(n-2,n-1) p(n-1,n+1) p(n,a+1) p(n,n)"));
  t.push_back(row(3, P::second, "b = n, a = n-2", "p(1,1)..p(n-2,n-2) p(n-1,n+1) p(n,n-1) p(n,n)"));
  t.push_back(row(3, P::second, "b = n, a = n-1", "p(1,1)..p(n-2,n-2) p(n-1,n) p(n,n-1) p(n,n+1)"));
  t.push_back(row(3, P::s_poly, "b < n-1",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(b-1,b) p(b,a+1) p(b,b+1)..p(n-2,n-1) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(3, P::s_poly, "b = n-1, a < n-2",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(n-2,n-1) p(n-1,a+1) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(3, P::s_poly, "b = n-1, a = n-2", "p(1,1)..p(n-2,n-2) p(n-1,n-1) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(3, P::s_poly, "b = n, a < n-1",
                  "p(1,1)..p(a,a) p(a+1,a+2)..p(n-2,n-1) p(n-1,n+1) p(n,a+1) p(n,n)", 2));
  t.push_back(row(3, P::s_poly, "b = n, a = n-1", "p(1,1)..p(n-2,n-2) p(n-1,n) p(n,n-1) p(n,n+1)", 1));

  // case 3.iv
  t.push_back(row(4, P::lhs_a, "", "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(a-1,a-1) p(a,a+1)..p(n,n+1)"));
  t.push_back(row(4, P::lhs_a1, "", "p(1,1)..p(b,b) p(b,a+1) p(b+1,b+1)..p(a,a) p(a+1,a+2)..p(n,n+1)"));
  t.push_back(row(4, P::sum_ib, "i < b",
                  "p(1,1)..p(i-1,i-1) p(i,a) p(i+1,i)..p(b,b-1) p(b,a+1) p(b+1,b)..p(a,a-1) p(a+1,a+2)..p(n,n+1)"));
  t.push_back(row(4, P::sum_bi, "b < i < a",
                  "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(i-1,i-1) p(i,a+1) p(i+1,i)..p(a,a-1) p(a+1,a+2)..p(n,n+1)"));
  t.push_back(row(4, P::sum_bi, "i = a", "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(a-1,a-1) p(a,a+1)..p(n,n+1)"));
  t.push_back(row(4, P::sum_bi, "i > a",
                  "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(a-1,a-1) p(a,a+2)..p(i-1,i+1) p(i,a+1) p(i+1,i+2)..p(n,n+1)"));
  t.push_back(row(4, P::second, "a < n-1",
                  "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(a-1,a-1) p(a,a+1)..p(n-2,n-1) p(n-1,n+1) p(n,n)"));
  t.push_back(row(4, P::second, "a = n-1, b < n-2",
                  "p(1,1)..p(b,b) p(b,n-1) p(b+1,b+1)..p(n-3,n-3) p(n-2,n+1) p(n-1,n) p(n,n-2)"));
  t.push_back(row(4, P::second, "a = n-1, b = n-2", "p(1,1)..p(n-2,n-2) p(n-2,n) p(n-1,n-1) p(n,n+1)"));
  t.push_back(row(4, P::second, "a = n, b < n-2",
                  "p(1,1)..p(b,b) p(b,n) p(b+1,b+1)..p(n-3,n-3) p(n-2,n-1) p(n-1,n-2) p(n,n+1)"));
  t.push_back(row(4, P::second, "a = n, b = n-2", "p(1,1)..p(n-2,n-2) p(n-2,n+1) p(n-1,n-1) p(n,n)"));
  t.push_back(row(4, P::second, "a = n, b = n-1", "p(1,1)..p(n-1,n-1) p(n-1,n+1) p(n,n)"));
  t.push_back(row(4, P::s_poly, "a < n-1",
                  "p(1,1)..p(b,b) p(b,a) p(b+1,b+1)..p(a-1,a-1) p(a,a+1)..p(n-2,n-1) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(4, P::s_poly, "a = n-1, b < n-2",
                  "p(1,1)..p(b,b) p(b,n-1) p(b+1,b+1)..p(n-2,n-2) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(4, P::s_poly, "a = n-1, b = n-2", "p(1,1)..p(n-2,n-2) p(n-2,n-1) p(n-1,n+1) p(n,n)", 2));
  t.push_back(row(4, P::s_poly, "a = n, b < n-1",
                  "p(1,1)..p(b,b) p(b,n) p(b+1,b+1)..p(n-2,n-2) p(n-1,n+1) p(n,n-1)", 2));
  t.push_back(row(4, P::s_poly, "a = n, b = n-1", "p(1,1)..p(n-1,n-1) p(n-1,n+1) p(n,n)", 1));
  return t;
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = build();
  return rows;
}

}  // namespace cia
