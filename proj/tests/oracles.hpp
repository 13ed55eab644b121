#ifndef CIA_TEST_ORACLES_HPP
#define CIA_TEST_ORACLES_HPP

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "cia/ideals.hpp"

namespace oracle {

// Dense exponent vector indexed by variable index.
inline std::vector<int> dense(const cia::Monomial& m, int nvars) {
  std::vector<int> e(nvars, 0);
  for (auto f : m.factors()) e[f.var] = f.exp;
  return e;
}

// Lex over full exponent vectors: variable 0 is the greatest.
inline int lex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

// Leibniz formula over all permutations, rows and columns ascending.
template <class K>
cia::Polynomial<K> leibniz(const cia::Ring& ring, const cia::FieldDesc& field, const cia::CellSet& rows,
                           const cia::CellSet& cols) {
  std::vector<int> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<cia::Term<K>> terms;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<cia::Monomial::Factor> fs;
    for (std::size_t i = 0; i < perm.size(); ++i)
      fs.push_back({static_cast<std::uint16_t>(ring.index({rows[i], cols[perm[i]]})), 1});
    terms.push_back({K::from(inversions % 2 ? -1 : 1, field), cia::Monomial(fs)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cia::Polynomial<K>::from_terms(ring, field, std::move(terms));
}

inline long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace oracle

#endif
