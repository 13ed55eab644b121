#include "cia/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace cia {

namespace {

bool subset_of(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

using Mask = std::uint64_t;

Mask bit(int b) { return Mask{1} << b; }

// Max independent set of a small graph given by neighbor masks, memoized on
// the candidate mask.
class ComponentMis {
 public:
  ComponentMis(Mask vertices, const std::vector<Mask>& nbr) : vertices_(vertices), nbr_(nbr) {}
  int operator()(Mask p) {
    p &= vertices_;
    if (p == 0) return 0;
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    int v = std::countr_zero(p);
    int best = std::max((*this)(p & ~bit(v)), 1 + (*this)(p & ~bit(v) & ~nbr_[v]));
    memo_.emplace(p, best);
    return best;
  }
  Mask vertices() const { return vertices_; }

 private:
  Mask vertices_;
  const std::vector<Mask>& nbr_;
  std::unordered_map<Mask, int> memo_;
};

struct Search {
  int n = 0;
  std::vector<Mask> nbr;                  // pair non-faces
  std::vector<Mask> big;                  // non-faces of size >= 3
  std::vector<std::vector<int>> big_of;   // per vertex
  std::vector<ComponentMis> comps;
  int best = -1;
  Mask best_face = 0;
  long nodes = 0;

  int bound(Mask p) {
    int b = 0;
    for (auto& c : comps) b += c(p);
    return b;
  }

  void run(Mask cur, int size, Mask p) {
    ++nodes;
    if (size + bound(p) <= best) return;
    if (p == 0) {
      best = size;
      best_face = cur;
      return;
    }
    int v = std::countr_zero(p);
    // include v
    Mask c2 = cur | bit(v);
    Mask p2 = p & ~bit(v) & ~nbr[v];
    for (int f : big_of[v]) {
      Mask rest = big[f] & ~c2;
      if (std::popcount(rest) == 1) p2 &= ~rest;
    }
    run(c2, size + 1, p2);
    // exclude v
    run(cur, size, p & ~bit(v));
  }
};

}  // namespace

bool SRComplex::is_face(const Face& f) const { return violated_nonface(f).empty(); }

Face SRComplex::violated_nonface(const Face& f) const {
  Face sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& nf : nonfaces)
    if (subset_of(nf, sorted)) return nf;
  return {};
}

template <class K>
SRComplex sr_complex(const GroebnerBasis<K>& basis) {
  std::vector<Face> supports;
  for (const auto& g : basis.elements) {
    const Monomial& m = g.leading_monomial();
    if (!m.is_squarefree())
      throw InvalidArgument("leading monomial " + m.to_string(basis.ring) + " is not squarefree");
    if (m.is_one()) throw InvalidArgument("unit ideal has no Stanley-Reisner complex");
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  SRComplex c{basis.ring, {}};
  for (auto& s : supports) {
    bool minimal = std::none_of(c.nonfaces.begin(), c.nonfaces.end(), [&](const Face& f) { return subset_of(f, s); });
    if (minimal) c.nonfaces.push_back(std::move(s));
  }
  return c;
}

DimensionResult dimension(const SRComplex& complex, const Face& seed, int vertex_bound) {
  const Ring& ring = complex.ring;
  const int n = ring.nvars();
  if (n > vertex_bound || n > 64)
    throw ResourceError("exact dimension search is limited to " + std::to_string(std::min(vertex_bound, 64)) +
                        " vertices, complex has " + std::to_string(n));
  // bit positions in column-major order so that column blocks are contiguous
  std::vector<int> pos(n), var_at(n);
  {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    if (ring.aux == 0)
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto va = ring.variable(a), vb = ring.variable(b);
        return std::pair{va.col, va.row} < std::pair{vb.col, vb.row};
      });
    for (int b = 0; b < n; ++b) {
      var_at[b] = order[b];
      pos[order[b]] = b;
    }
  }
  Search s;
  s.n = n;
  s.nbr.assign(n, 0);
  s.big_of.assign(n, {});
  Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  Mask p = all;
  for (const auto& nf : complex.nonfaces) {
    if (nf.size() == 1) {
      p &= ~bit(pos[nf[0]]);
    } else if (nf.size() == 2) {
      s.nbr[pos[nf[0]]] |= bit(pos[nf[1]]);
      s.nbr[pos[nf[1]]] |= bit(pos[nf[0]]);
    } else {
      Mask m = 0;
      for (int v : nf) m |= bit(pos[v]);
      for (int v : nf) s.big_of[pos[v]].push_back(static_cast<int>(s.big.size()));
      s.big.push_back(m);
    }
  }
  // connected components of the pair graph among the candidates
  Mask seen = 0;
  for (int v = 0; v < n; ++v) {
    if (!(p & bit(v)) || (seen & bit(v))) continue;
    Mask comp = bit(v), frontier = bit(v);
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = s.nbr[u] & p & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    s.comps.emplace_back(comp, s.nbr);
  }

  if (!seed.empty() && complex.is_face(seed)) {
    s.best = static_cast<int>(seed.size());
    for (int v : seed) s.best_face |= bit(pos[v]);
  }
  s.run(0, 0, p);

  DimensionResult r;
  r.dimension = s.best;
  r.codimension = n - s.best;
  r.nodes = s.nodes;
  for (Mask m = s.best_face; m; m &= m - 1) r.face.push_back(var_at[std::countr_zero(m)]);
  std::sort(r.face.begin(), r.face.end());
  return r;
}

Face witness_face_IS(const Grid& grid, int d, const CellSet& S) {
  const int k = grid.k(), l = grid.l();
  Ring ring{d, k * l};
  Face f;
  for (int t = 1; t <= k * l; ++t)
    if (!std::binary_search(S.begin(), S.end(), t)) f.push_back(ring.index({d, t}));
  for (int i = 1; i <= l; ++i) {
    int c = 0;
    for (int cell : grid.column(i))
      if (!std::binary_search(S.begin(), S.end(), cell)) c = std::max(c, cell);
    if (c == 0) throw RegimeError("column " + std::to_string(i) + " lies inside S");
    for (int r = 1; r <= d - 1; ++r) f.push_back(ring.index({r, c}));
  }
  std::sort(f.begin(), f.end());
  return f;
}

Face I0Witness::all() const {
  Face f = f1;
  f.insert(f.end(), f2.begin(), f2.end());
  f.insert(f.end(), f3.begin(), f3.end());
  std::sort(f.begin(), f.end());
  return f;
}

I0Witness witness_face_I0(const Grid& grid, int d) {
  const int k = grid.k(), l = grid.l();
  if (!(2 <= k && k <= l && l <= d)) throw RegimeError("the I_0 witness needs 2 <= k <= l <= d");
  Ring ring{d, k * l};
  I0Witness w;
  for (int t = 1; t <= k * l; ++t) w.f1.push_back(ring.index({1, t}));
  for (int r = 2; r <= d; ++r)
    for (int j : grid.row(1))
      if (grid.col_of(j) != l) w.f2.push_back(ring.index({r, j}));
  for (int r = 2; r <= l - 1; ++r) w.f3.push_back(ring.index({r, k * (l - 1) + 1}));
  return w;
}

std::string face_to_string(const Ring& ring, const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    if (ring.is_aux(f[i])) {
      s += ring.variable_name(f[i]);
    } else {
      auto v = ring.variable(f[i]);
      s += "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
    }
  }
  return s + "}";
}

template SRComplex sr_complex<Rational>(const GroebnerBasis<Rational>&);
template SRComplex sr_complex<ModP>(const GroebnerBasis<ModP>&);

}  // namespace cia
