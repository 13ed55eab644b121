#include "cia/grid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cia {

Grid::Grid(int k, int l) : k_(k), l_(l) {
  if (k < 1 || l < 1) throw InvalidArgument("grid sizes must be positive, got " + std::to_string(k) + "x" + std::to_string(l));
}

void Grid::check_cell(int c) const {
  if (c < 1 || c > size()) throw BoundsError("cell " + std::to_string(c) + " outside [" + std::to_string(size()) + "]");
}

int Grid::cell(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > l_)
    throw BoundsError("grid position (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return (j - 1) * k_ + i;
}

int Grid::row_of(int c) const {
  check_cell(c);
  return (c - 1) % k_ + 1;
}

int Grid::col_of(int c) const {
  check_cell(c);
  return (c - 1) / k_ + 1;
}

CellSet Grid::row(int i) const {
  CellSet r;
  for (int j = 1; j <= l_; ++j) r.push_back(cell(i, j));
  return r;
}

CellSet Grid::column(int j) const {
  CellSet c;
  for (int i = 1; i <= k_; ++i) c.push_back(cell(i, j));
  return c;
}

std::vector<std::vector<int>> Grid::matrix() const {
  std::vector<std::vector<int>> m(k_);
  for (int i = 1; i <= k_; ++i) m[i - 1] = row(i);
  return m;
}

// -------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(int n, std::vector<CellSet> edges) : n_(n) {
  if (n < 1) throw InvalidArgument("hypergraph needs at least one vertex");
  for (auto& e : edges) {
    if (e.empty()) throw InvalidArgument("hypergraph edges must be nonempty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InvalidArgument("edge " + cells_label(e) + " repeats a vertex");
    if (e.front() < 1 || e.back() > n)
      throw BoundsError("edge " + cells_label(e) + " leaves the vertex set [" + std::to_string(n) + "]");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Hypergraph::contains(const CellSet& edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

Hypergraph Hypergraph::unite(const Hypergraph& other) const {
  if (n_ != other.n_) throw IncompatibleError("hypergraphs on different vertex sets");
  auto all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return Hypergraph(n_, std::move(all));
}

std::string Hypergraph::to_string() const {
  // order like the literature: by size, then lexicographically
  auto sorted = edges_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CellSet& a, const CellSet& b) { return a.size() < b.size(); });
  std::string s = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ", ";
    s += cells_label(sorted[i]);
  }
  return s + "}";
}

// -------------------------------------------------------------- families

std::vector<CellSet> subsets(const CellSet& ground, int r) {
  std::vector<CellSet> out;
  int n = static_cast<int>(ground.size());
  if (r < 0 || r > n) return out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    CellSet s(r);
    for (int i = 0; i < r; ++i) s[i] = ground[idx[i]];
    out.push_back(std::move(s));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Hypergraph delta_t(const Grid& grid, int t) {
  if (t < 1 || t > grid.size()) throw InvalidArgument("t must lie in [1, kl]");
  CellSet all(grid.size());
  for (int c = 1; c <= grid.size(); ++c) all[c - 1] = c;
  return Hypergraph(grid.size(), subsets(all, t));
}

Hypergraph lambda_s(const Grid& grid, int s) {
  if (s < 1 || s > grid.k()) throw InvalidArgument("s must lie in [1, k]");
  std::vector<CellSet> edges;
  for (int j = 1; j <= grid.l(); ++j)
    for (auto& e : subsets(grid.column(j), s)) edges.push_back(std::move(e));
  return Hypergraph(grid.size(), std::move(edges));
}

Hypergraph delta_st(const Grid& grid, int s, int t) {
  if (t < 1) throw InvalidArgument("t must be positive");
  std::vector<CellSet> edges;
  for (int i = 1; i <= grid.k(); ++i)
    for (auto& e : subsets(grid.row(i), t)) edges.push_back(std::move(e));
  return lambda_s(grid, s).unite(Hypergraph(grid.size(), std::move(edges)));
}

std::vector<CellSet> script_L(const Grid& grid) {
  if (grid.k() < 2 || grid.l() < 2) throw RegimeError("the transversal family needs k, l >= 2");
  std::vector<CellSet> out;
  std::vector<int> cols(grid.k(), 1);  // column chosen for each grid row
  while (true) {
    if (std::any_of(cols.begin(), cols.end(), [&](int c) { return c != cols[0]; })) {
      CellSet s;
      for (int i = 1; i <= grid.k(); ++i) s.push_back(grid.cell(i, cols[i - 1]));
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    int i = grid.k() - 1;
    while (i >= 0 && cols[i] == grid.l()) cols[i--] = 1;
    if (i < 0) break;
    ++cols[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string cells_label(const CellSet& cells) {
  bool compact = std::all_of(cells.begin(), cells.end(), [](int c) { return c >= 0 && c < 10; });
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!compact && i) s += ",";
    s += std::to_string(cells[i]);
  }
  return compact ? s : "{" + s + "}";
}

CellSet parse_cells(const std::string& text) {
  CellSet out;
  if (text.find_first_of(", ") == std::string::npos) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad cell list '" + text + "'");
      out.push_back(ch - '0');
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
      if (tok.empty()) continue;
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw ParseError("");
        out.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad cell '" + tok + "' in '" + text + "'");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cia
