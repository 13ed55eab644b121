#ifndef CIA_PROOFCHECK_HPP
#define CIA_PROOFCHECK_HPP

// Mechanical checks of the primality proof: the determinantal identities and
// initial-term tables of the appendix, the non-zerodivisor condition, and the
// localization transform with its induction down to the base case.

#include <set>
#include <string>
#include <vector>

#include "cia/grid.hpp"
#include "cia/ideals.hpp"
#include "cia/report.hpp"

namespace cia {

// --------------------------------------------------------------- identities

/// Expands both sides of the n x n column-exchange identity symbolically.
/// Requires 1 <= a < n, b in [n], b != a.
VerificationReport verify_eq1(int n, int a, int b);
/// The n x (n+1) variant. Requires 1 <= a <= n, b in [n].
VerificationReport verify_eq2(int n, int a, int b);

// ------------------------------------------------------------------- tables

enum class Case { i = 1, ii = 2, iii = 3, iv = 4 };
std::string case_name(Case c);  // "3.i", ...

struct CaseSpec {
  Case id = Case::i;
  int n = 0;
  int a = 0;
  int b = 0;

  int m() const { return id == Case::i || id == Case::ii ? n : n + 1; }
  /// Throws InvalidArgument unless (n, a, b) satisfies the case constraints.
  void validate() const;
  std::string to_string() const;
};

/// Every admissible (a, b) for the case at size n.
std::vector<CaseSpec> cases_for(Case id, int n);

/// Which product of the identity a table row describes.
enum class Part {
  lhs_a,        // p_{b,a} times the minor without column a
  lhs_a1,       // p_{b,a+1} times the minor without column a+1
  sum_ib,       // [ib|a,a+1] times its complement, i < b
  sum_bi,       // [bi|a,a+1] times its complement, i > b
  second,       // second largest term of the g1 h summand
  s_poly,       // in(S(g1, g2)) with its provenance tag
};

/// A table entry: the branch condition and the monomial formula, kept as
/// data (see proofcheck_tables.cpp). `tag` is 0 where the table gives none.
struct TableRow {
  int table = 0;
  Part part = Part::s_poly;
  std::string condition;
  std::string formula;
  int tag = 0;
  /// Printed rows: where this condition holds the printed formula is known to
  /// be wrong and the erratum rows are asserted instead.
  std::string superseded_when;
  /// Non-empty for corrections that are not in the printed table.
  std::string erratum;
  std::string id() const;  // "T1 S (b < n-1)"
};

const std::vector<TableRow>& table_rows();

/// Checks every row applicable to the case: true initial terms against the
/// table formulas, the S-polynomial provenance tag, and the standard
/// representation (every other term of the rearranged identity is at most
/// in(S), with exact reconstruction of S). Row ids that were exercised are
/// inserted into `hits` when given.
VerificationReport verify_table(const CaseSpec& spec, std::set<std::string>* hits = nullptr);

/// verify_eq1/eq2 over [eq_lo, eq_hi] and verify_table over [tab_lo, tab_hi],
/// plus the branch-coverage assertion over all table rows.
VerificationReport verify_appendix(int eq_lo = 2, int eq_hi = 5, int tab_lo = 4, int tab_hi = 6);

// ------------------------------------------------------- localization steps

/// The variable p_{d,(j-1)k+1} divides no leading term of G(I_0).
/// Requires the main regime and 1 <= j <= l-1 (RegimeError otherwise).
/// With `verify_basis`, G(I_0) is first confirmed to be a Groebner basis.
VerificationReport check_nzd(const Grid& grid, int d, int j, bool verify_basis = false);

/// The localization transform applied to a generator list of minors of a
/// d x n matrix at the minor [rows|cols]:
///   (a) keep [A|B] with B disjoint from cols;
///   (b) otherwise emit [alpha | B \ cols] for every alpha in A u rows of
///       size |B| - |B n cols|.
/// Generators meeting a column whose variables are all present are dropped
/// as redundant. Throws InvalidArgument if G violates the closure hypothesis
/// (every [alpha|B] with alpha in A u rows, |alpha| = |B|, must lie in G).
std::vector<MinorSpec> localize(const Ring& ring, const std::vector<MinorSpec>& G, const CellSet& rows,
                                const CellSet& cols);

/// Minor specs of G(I_0) on the k x l grid (block 2-minors plus transversal
/// t-minors), without the regime guard.
std::vector<MinorSpec> transversal_specs(const Grid& grid, int d, int t);

/// One step of the induction: localize G(I_0) at p_{d,1}, compare with the
/// direct description of J, then strip the variable block, relabel and
/// compare with G(I_0) on the k x (l-1) grid with t-1.
VerificationReport verify_localization_step(int k, int l, int d);

/// Iterates the step down to l = 2, checks that the minors left are all
/// 2-minors of the remaining d x 2k matrix, and that one more localization
/// at p_{d,1} leaves variables only.
VerificationReport verify_localization_chain(int k, int l, int d);

}  // namespace cia

#endif  // CIA_PROOFCHECK_HPP
