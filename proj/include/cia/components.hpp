#ifndef CIA_COMPONENTS_HPP
#define CIA_COMPONENTS_HPP

// The prime components {I_0} u {I_S : S in L} as a family: symmetry classes,
// the component table, pairwise incomparability, and the worked example with
// t < l whose generator lists are given explicitly.

#include <string>
#include <vector>

#include "cia/groebner.hpp"
#include "cia/report.hpp"

namespace cia {

/// Lexicographically least image of S under permutations of grid rows and
/// of grid columns.
CellSet canonical_form(const Grid& grid, const CellSet& S);

struct SymmetryClass {
  bool is_I0 = false;
  CellSet representative;        // empty for I_0
  std::vector<CellSet> members;  // S in L; empty for I_0
  std::size_t occurrences() const { return is_I0 ? 1 : members.size(); }
  std::string label() const;     // "I_0", "I_{159}"
};

/// I_0 first, then the orbits of L ordered by (orbit size, representative).
std::vector<SymmetryClass> symmetry_classes(const Grid& grid);

struct ComponentRow {
  int type = 0;
  std::string representative;
  std::size_t occurrences = 0;
  std::size_t generators = 0;
  int dimension = 0;    // dim R/I, exact from the Stanley-Reisner complex
  int codimension = 0;  // number of variables minus dimension
};

/// One row per symmetry class. Representatives' generators are confirmed to
/// be Groebner bases before the dimension is read off.
template <class K>
std::vector<ComponentRow> component_table(const Grid& grid, int d, FieldDesc field = {});

/// Columns A = (R_1 u {c}) \ S, with c the least cell of C_i \ S and C_i the
/// block holding R_1 n S. The minor [[l] | A] lies in I_0 but not in I_S.
CellSet incomparability_witness(const Grid& grid, const CellSet& S);

/// For every ordered pair (P, Q) of distinct components, a generator of P
/// whose leading term no leading term of G(Q) divides. Sound because the
/// canonical generators are Groebner bases; with `confirm_bases` that is
/// checked here as well.
template <class K>
VerificationReport incomparability_by_leading_terms(const Grid& grid, int d, bool confirm_bases, FieldDesc field = {});

/// The same pairs decided by Groebner-basis membership.
template <class K>
VerificationReport incomparability_by_membership(const Grid& grid, int d, FieldDesc field = {});

/// Builds an ideal from generator labels "p11"/"p1_1", "[12|56]", "[235]".
template <class K>
Ideal<K> ideal_from_labels(int d, int k, int l, const std::vector<std::string>& labels, FieldDesc field = {},
                           std::string name = {});

/// The explicit lists of the t < l example (k = s = 2, l = 4, t = d = 3).
const std::vector<std::string>& listed_I14_labels();
const std::vector<std::string>& listed_I14_star_labels();
Hypergraph listed_delta_star();

/// I_0 ⊆ I_14, I_14 ⊄ I_14*, I_14* ⊄ I_14, the hyperedge construction of
/// I_14* against its listing, and the 44-generator count of I_0.
template <class K>
VerificationReport verify_t_below_l(FieldDesc field = {}, const ResourceLimits& limits = {});

}  // namespace cia

#endif  // CIA_COMPONENTS_HPP
