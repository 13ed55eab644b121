#ifndef CIA_IDEALS_HPP
#define CIA_IDEALS_HPP

// Minors of the indeterminate matrix P and the ideals built from them:
// determinantal hyperedge ideals J_{X,Delta}, the components I_S and I_0, and
// the ideal of the two hidden-variable CI statements.
//
// Sign convention: a minor [A|B] is the determinant of the submatrix with
// rows A and columns B taken in ascending order (cofactor expansion along the
// top row). Only vanishing matters downstream, but the convention is fixed so
// that polynomials compare exactly.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cia/grid.hpp"
#include "cia/poly.hpp"

namespace cia {

struct MinorSpec {
  CellSet rows;  // A subset of [d], ascending
  CellSet cols;  // B subset of [kl], ascending

  /// Validates sizes and bounds against the ring; sorts both index lists.
  static MinorSpec make(const Ring& ring, CellSet rows, CellSet cols);
  std::string label(int d) const;  // "[12|34]", or "[135]" for maximal minors
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

template <class K>
Polynomial<K> minor(const Ring& ring, const FieldDesc& field, const MinorSpec& spec);

template <class K>
Polynomial<K> minor(const Ring& ring, const FieldDesc& field, CellSet rows, CellSet cols) {
  return minor<K>(ring, field, MinorSpec::make(ring, std::move(rows), std::move(cols)));
}

/// Reduced monic Groebner basis with respect to the lex order of its ring
/// (elimination variables, when present, are the greatest).
template <class K>
struct GroebnerBasis {
  Ring ring;
  FieldDesc field;
  std::vector<Polynomial<K>> elements;
  bool reduced = true;

  std::string order() const { return ring.aux == 0 ? "lex" : "elim(" + std::to_string(ring.aux) + ")+lex"; }
  std::vector<Monomial> leading_monomials() const;
};

template <class K>
class Ideal {
 public:
  Ideal(Ring ring, int k, int l, FieldDesc field, std::string label = {});

  const Ring& ring() const { return ring_; }
  int d() const { return ring_.d; }
  int k() const { return k_; }
  int l() const { return l_; }
  Grid grid() const { return Grid(k_, l_); }
  const FieldDesc& field() const { return field_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  /// Human-readable name per generator ("[12|34]", "p1_4"); may be empty.
  const std::vector<std::string>& generator_labels() const { return labels_; }
  std::size_t size() const { return gens_.size(); }

  /// Appends a nonzero generator unless an identical one is already present.
  void add(Polynomial<K> g, std::string label = {});

  /// Generators sorted by poly_less; two construction routes agree iff these match.
  std::vector<Polynomial<K>> canonical_generators() const;

  std::shared_ptr<const GroebnerBasis<K>> cached_basis() const;
  /// One-shot installation. A second install is accepted only if it is
  /// identical to the first; the first one wins either way.
  void install_basis(std::shared_ptr<const GroebnerBasis<K>> gb) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GroebnerBasis<K>> basis;
  };

  Ring ring_;
  int k_;
  int l_;
  FieldDesc field_;
  std::string label_;
  std::vector<Polynomial<K>> gens_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// J_{X,Delta} = < [A|B] : A in [d], B in Delta, |A| = |B| >; edges with more
/// than d cells contribute nothing. Singleton edges give whole columns of
/// variables. Generators ordered by (|B|, B, A).
template <class K>
Ideal<K> hyperedge_ideal(const Grid& grid, int d, const Hypergraph& delta, FieldDesc field = {});

/// Canonical generators of I_S: the variables p_{x,j} (x in [d], j in S) and
/// the s-minors with column set inside C_j \ S. With `full_lambda` every
/// s-minor of every column block is kept instead.
template <class K>
Ideal<K> ideal_IS(const Grid& grid, int d, int s, const CellSet& S, FieldDesc field = {}, bool full_lambda = false);

/// G(I_0) for 2 <= k <= l <= d, s = 2, t = l: all 2-minors inside a column
/// block plus the t-minors whose columns meet every block at most once.
template <class K>
Ideal<K> ideal_I0_minimal(const Grid& grid, int d, int s, int t, FieldDesc field = {});

/// The same generator family without the regime guard (any k, l, d, t >= 2);
/// used where the localization argument leaves the main regime.
template <class K>
Ideal<K> transversal_ideal(const Grid& grid, int d, int t, FieldDesc field = {});

/// J_C: s-minors of every column block P_{C_j} plus t-minors of every row
/// block P_{R_i}.
template <class K>
Ideal<K> ci_ideal(int d, int k, int l, int s, int t, FieldDesc field = {});

/// True iff (k, l, d, s, t) lies in the main-theorem regime.
inline bool main_regime(int d, int k, int l, int s, int t) {
  return 2 <= k && k <= l && l <= d && s == 2 && t == l;
}

}  // namespace cia

#endif  // CIA_IDEALS_HPP
