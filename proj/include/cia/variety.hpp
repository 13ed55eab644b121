#ifndef CIA_VARIETY_HPP
#define CIA_VARIETY_HPP

// Exhaustive vanishing-set census over a prime field GF(q): every matrix in
// GF(q)^{d x kl} is classified against J, I_0 and each I_S. This checks the
// set-theoretic decomposition over GF(q) only; it is evidence, not a proof
// over arbitrary fields.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cia/ideals.hpp"

namespace cia {

/// True iff every generator vanishes at the point (one value per variable index).
template <class K>
bool evaluate(const Ideal<K>& ideal, std::span<const K> point);

struct CensusInstance {
  int d, k, l, s, t;
};

struct PointCensus {
  CensusInstance instance{};
  std::uint32_t q = 2;
  std::uint64_t points = 0;
  std::uint64_t in_J = 0;
  std::uint64_t in_I0 = 0;
  std::vector<CellSet> components;         // S in L, in order
  std::vector<std::uint64_t> in_IS;        // per S
  std::uint64_t in_union = 0;              // V(I_0) or some V(I_S)
  std::uint64_t J_minus_union = 0;         // V(J) \ union
  std::uint64_t union_minus_J = 0;         // union \ V(J)
  std::vector<std::uint64_t> J_minus_union_witnesses;  // point indices, ascending, at most 10
  std::vector<std::uint64_t> union_minus_J_witnesses;

  bool holds() const { return J_minus_union == 0 && union_minus_J == 0; }
  /// Point index -> d x kl matrix; variable 0 is the most significant digit.
  std::vector<std::vector<std::uint32_t>> point_matrix(std::uint64_t index) const;
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultPointBound = std::uint64_t{1} << 30;

/// CIA_POINT_BOUND when set, else 2^30.
std::uint64_t point_bound_from_env();

/// Requires the main regime and q prime. The work is points x (2 + |L|)
/// ideal evaluations; above `bound` this raises ResourceError unless `force`.
PointCensus census(const CensusInstance& inst, std::uint32_t q, std::uint64_t bound = point_bound_from_env(),
                   bool force = false);

}  // namespace cia

#endif  // CIA_VARIETY_HPP
