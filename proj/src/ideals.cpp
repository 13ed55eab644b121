#include "cia/ideals.hpp"

#include <algorithm>
#include <unordered_map>

namespace cia {

MinorSpec MinorSpec::make(const Ring& ring, CellSet rows, CellSet cols) {
  if (rows.size() != cols.size())
    throw InvalidArgument("minor needs as many rows as columns, got " + std::to_string(rows.size()) + " and " +
                          std::to_string(cols.size()));
  if (rows.empty()) throw InvalidArgument("minor of an empty submatrix");
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw InvalidArgument("minor indices must be distinct");
  if (rows.front() < 1 || rows.back() > ring.d) throw BoundsError("minor row outside [" + std::to_string(ring.d) + "]");
  if (cols.front() < 1 || cols.back() > ring.kl) throw BoundsError("minor column outside [" + std::to_string(ring.kl) + "]");
  return {std::move(rows), std::move(cols)};
}

std::string MinorSpec::label(int d) const {
  if (rows.size() == 1) return "p" + std::to_string(rows[0]) + "_" + std::to_string(cols[0]);
  std::string b = cells_label(cols);
  if (b.front() == '{') b = b.substr(1, b.size() - 2);
  if (static_cast<int>(rows.size()) == d) return "[" + b + "]";
  std::string a = cells_label(rows);
  if (a.front() == '{') a = a.substr(1, a.size() - 2);
  return "[" + a + "|" + b + "]";
}

template <class K>
Polynomial<K> minor(const Ring& ring, const FieldDesc& field, const MinorSpec& spec) {
  const int n = static_cast<int>(spec.rows.size());
  if (n > 20) throw InvalidArgument("minor too large");
  // det of rows[pos..n) against the column subset `mask`, expanded along the top row
  std::unordered_map<std::uint32_t, Polynomial<K>> memo;
  auto rec = [&](auto&& self, int pos, std::uint32_t mask) -> Polynomial<K> {
    if (pos == n) return Polynomial<K>::constant(ring, field, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial<K> acc(ring, field);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      Polynomial<K> sub = self(self, pos + 1, mask & ~(1u << c));
      int var = ring.index({spec.rows[pos], spec.cols[c]});
      acc = acc.add_mul(K::from(sign, field), Monomial::variable(var), sub);
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (n == 32 ? ~0u : (1u << n) - 1));
}

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

// ------------------------------------------------------------------- Ideal

template <class K>
Ideal<K>::Ideal(Ring ring, int k, int l, FieldDesc field, std::string label)
    : ring_(ring), k_(k), l_(l), field_(field), label_(std::move(label)) {
  if (k * l != ring.kl) throw InvalidArgument("grid " + std::to_string(k) + "x" + std::to_string(l) +
                                              " does not match " + std::to_string(ring.kl) + " columns");
}

template <class K>
void Ideal<K>::add(Polynomial<K> g, std::string label) {
  if (g.is_zero()) return;
  if (g.ring() != ring_ || g.field() != field_) throw IncompatibleError("generator from another ring");
  for (const auto& h : gens_)
    if (h == g) return;
  gens_.push_back(std::move(g));
  labels_.push_back(std::move(label));
}

template <class K>
std::vector<Polynomial<K>> Ideal<K>::canonical_generators() const {
  auto out = gens_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a, b); });
  return out;
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::cached_basis() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->basis;
}

template <class K>
void Ideal<K>::install_basis(std::shared_ptr<const GroebnerBasis<K>> gb) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) {
    cache_->basis = std::move(gb);
    return;
  }
  if (cache_->basis->elements != gb->elements)
    throw InvalidArgument("conflicting Groebner basis installed for ideal " + label_);
}

// ---------------------------------------------------------------- builders

namespace {

template <class K>
void add_minors(Ideal<K>& ideal, const CellSet& cols) {
  const Ring& ring = ideal.ring();
  if (static_cast<int>(cols.size()) > ring.d) return;
  CellSet all_rows(ring.d);
  for (int x = 1; x <= ring.d; ++x) all_rows[x - 1] = x;
  for (const auto& rows : subsets(all_rows, static_cast<int>(cols.size()))) {
    auto spec = MinorSpec::make(ring, rows, cols);
    ideal.add(minor<K>(ring, ideal.field(), spec), spec.label(ring.d));
  }
}

// every edge ordered by (size, columns)
std::vector<CellSet> by_size(std::vector<CellSet> edges) {
  std::stable_sort(edges.begin(), edges.end(), [](const CellSet& a, const CellSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return edges;
}

bool meets_each_column_once(const Grid& grid, const CellSet& cols) {
  std::vector<int> seen(grid.l() + 1, 0);
  for (int c : cols)
    if (seen[grid.col_of(c)]++) return false;
  return true;
}

}  // namespace

template <class K>
Ideal<K> hyperedge_ideal(const Grid& grid, int d, const Hypergraph& delta, FieldDesc field) {
  if (delta.vertex_count() != grid.size()) throw IncompatibleError("hypergraph and grid sizes differ");
  Ideal<K> ideal(Ring{d, grid.size()}, grid.k(), grid.l(), field, "J");
  for (const auto& edge : by_size(delta.edges())) add_minors(ideal, edge);
  return ideal;
}

template <class K>
Ideal<K> ideal_IS(const Grid& grid, int d, int s, const CellSet& S, FieldDesc field, bool full_lambda) {
  if (s < 1 || s > grid.k()) throw InvalidArgument("s must lie in [1, k]");
  CellSet sorted = S;
  std::sort(sorted.begin(), sorted.end());
  for (int c : sorted)
    if (c < 1 || c > grid.size()) throw BoundsError("cell " + std::to_string(c) + " of S outside the grid");
  Ideal<K> ideal(Ring{d, grid.size()}, grid.k(), grid.l(), field, "I_" + cells_label(sorted));
  for (int c : sorted)
    for (int x = 1; x <= d; ++x) ideal.add(Polynomial<K>::variable(ideal.ring(), field, {x, c}),
                                           "p" + std::to_string(x) + "_" + std::to_string(c));
  for (int j = 1; j <= grid.l(); ++j) {
    CellSet block;
    for (int c : grid.column(j))
      if (full_lambda || !std::binary_search(sorted.begin(), sorted.end(), c)) block.push_back(c);
    for (const auto& cols : subsets(block, s)) add_minors(ideal, cols);
  }
  return ideal;
}

template <class K>
Ideal<K> transversal_ideal(const Grid& grid, int d, int t, FieldDesc field) {
  Ideal<K> ideal(Ring{d, grid.size()}, grid.k(), grid.l(), field, "I_0");
  for (int j = 1; j <= grid.l(); ++j)
    for (const auto& cols : subsets(grid.column(j), 2)) add_minors(ideal, cols);
  CellSet all(grid.size());
  for (int c = 1; c <= grid.size(); ++c) all[c - 1] = c;
  if (t >= 2) {
    for (const auto& cols : subsets(all, t))
      if (meets_each_column_once(grid, cols)) add_minors(ideal, cols);
  }
  return ideal;
}

template <class K>
Ideal<K> ideal_I0_minimal(const Grid& grid, int d, int s, int t, FieldDesc field) {
  if (!main_regime(d, grid.k(), grid.l(), s, t))
    throw RegimeError("G(I_0) is defined for 2 <= k <= l <= d, s = 2, t = l; got d=" + std::to_string(d) +
                      " k=" + std::to_string(grid.k()) + " l=" + std::to_string(grid.l()) + " s=" + std::to_string(s) +
                      " t=" + std::to_string(t));
  return transversal_ideal<K>(grid, d, t, field);
}

template <class K>
Ideal<K> ci_ideal(int d, int k, int l, int s, int t, FieldDesc field) {
  Grid grid(k, l);
  Ideal<K> ideal(Ring{d, grid.size()}, k, l, field, "J_C");
  std::vector<CellSet> edges;
  for (int j = 1; j <= l; ++j)
    for (auto& cols : subsets(grid.column(j), s)) edges.push_back(std::move(cols));
  for (int i = 1; i <= k; ++i)
    for (auto& cols : subsets(grid.row(i), t)) edges.push_back(std::move(cols));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& cols : by_size(std::move(edges))) add_minors(ideal, cols);
  return ideal;
}

#define CIA_INSTANTIATE(K)                                                                              \
  template Polynomial<K> minor<K>(const Ring&, const FieldDesc&, const MinorSpec&);                   \
  template struct GroebnerBasis<K>;                                                                    \
  template class Ideal<K>;                                                                             \
  template Ideal<K> hyperedge_ideal<K>(const Grid&, int, const Hypergraph&, FieldDesc);               \
  template Ideal<K> ideal_IS<K>(const Grid&, int, int, const CellSet&, FieldDesc, bool);              \
  template Ideal<K> transversal_ideal<K>(const Grid&, int, int, FieldDesc);                           \
  template Ideal<K> ideal_I0_minimal<K>(const Grid&, int, int, int, FieldDesc);                       \
  template Ideal<K> ci_ideal<K>(int, int, int, int, int, FieldDesc);

CIA_INSTANTIATE(Rational)
CIA_INSTANTIATE(ModP)

}  // namespace cia
