#ifndef CIA_GRID_HPP
#define CIA_GRID_HPP

// The k x l index grid Y identified with [kl], and hypergraphs on [kl].
// Cells are 1-based: Y_{i,j} = (j-1)k + i, so column C_j is the contiguous
// block {(j-1)k+1, ..., jk} and row R_i = {i, k+i, ..., (l-1)k+i}.

#include <string>
#include <vector>

#include "cia/errors.hpp"

namespace cia {

using CellSet = std::vector<int>;  // sorted ascending, 1-based cells

class Grid {
 public:
  Grid(int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  int size() const { return k_ * l_; }

  int cell(int i, int j) const;  // Y_{i,j}
  int row_of(int cell) const;    // i with cell in R_i
  int col_of(int cell) const;    // j with cell in C_j
  CellSet row(int i) const;      // R_i
  CellSet column(int j) const;   // C_j

  std::vector<std::vector<int>> matrix() const;

 private:
  void check_cell(int cell) const;

  int k_;
  int l_;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts each edge and the edge list; rejects empty, out-of-range and
  /// repeated-vertex edges. Duplicate edges are merged.
  Hypergraph(int n, std::vector<CellSet> edges);

  int vertex_count() const { return n_; }
  const std::vector<CellSet>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const CellSet& edge) const;

  Hypergraph unite(const Hypergraph& other) const;

  /// Short labels as used in the literature ("12", "135"); cells above 9
  /// are written in braces.
  std::string to_string() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<CellSet> edges_;  // sorted lexicographically
};

/// All r-subsets of `ground` (ground assumed sorted), in lexicographic order.
std::vector<CellSet> subsets(const CellSet& ground, int r);

/// Delta^t: every t-subset of [kl].
Hypergraph delta_t(const Grid& grid, int t);
/// Lambda^s: the s-subsets of each grid column.
Hypergraph lambda_s(const Grid& grid, int s);
/// Delta^{s,t} = Lambda^s together with the t-subsets of each grid row.
Hypergraph delta_st(const Grid& grid, int s, int t);

/// The transversal family: k-sets with one cell in each grid row that meet at
/// least two grid columns. Lexicographically sorted; size l^k - l.
std::vector<CellSet> script_L(const Grid& grid);

std::string cells_label(const CellSet& cells);
CellSet parse_cells(const std::string& text);  // "1,4" or "14" (digits only when every cell < 10)

}  // namespace cia

#endif  // CIA_GRID_HPP
