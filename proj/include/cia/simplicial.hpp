#ifndef CIA_SIMPLICIAL_HPP
#define CIA_SIMPLICIAL_HPP

// Stanley-Reisner complexes of squarefree initial ideals. Vertices are the
// variables of the ring (cells (x, y) of [d] x [kl]), identified by variable
// index. dim R/I = dim R/in(I) = largest face size.

#include <string>
#include <vector>

#include "cia/ideals.hpp"

namespace cia {

using Face = std::vector<int>;  // sorted variable indices

struct SRComplex {
  Ring ring;
  std::vector<Face> nonfaces;  // minimal non-faces, sorted by (size, lex)

  int vertex_count() const { return ring.nvars(); }
  bool is_face(const Face& f) const;
  /// The first minimal non-face contained in f, or empty when f is a face.
  Face violated_nonface(const Face& f) const;
};

/// Minimal non-faces are the inclusion-minimal leading-term supports. Throws
/// InvalidArgument when a leading monomial is not squarefree.
template <class K>
SRComplex sr_complex(const GroebnerBasis<K>& basis);

struct DimensionResult {
  int dimension = 0;  // largest face size = Krull dimension of R/I
  int codimension = 0;  // number of variables minus dimension
  Face face;          // a face attaining the maximum
  long nodes = 0;     // search nodes visited
};

inline constexpr int kDefaultVertexBound = 64;

/// Exact largest face by branch and bound. `seed` (when a face) is the
/// initial incumbent. More than `vertex_bound` vertices raises ResourceError.
DimensionResult dimension(const SRComplex& complex, const Face& seed = {}, int vertex_bound = kDefaultVertexBound);

/// The face {(d,t) : t not in S} + {(r, max(C_i \ S)) : r < d} from the
/// dimension argument for I_S.
Face witness_face_IS(const Grid& grid, int d, const CellSet& S);

struct I0Witness {
  Face f1;  // all of row 1
  Face f2;  // rows 2..d on the first grid row, last block excluded
  Face f3;  // rows 2..l-1 at the first cell of the last block
  Face all() const;
};
/// Requires 2 <= k <= l <= d.
I0Witness witness_face_I0(const Grid& grid, int d);

std::string face_to_string(const Ring& ring, const Face& f);  // "{(1,1), (3,4)}"

}  // namespace cia

#endif  // CIA_SIMPLICIAL_HPP
