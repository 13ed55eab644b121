#ifndef CIA_GROEBNER_HPP
#define CIA_GROEBNER_HPP

// Division, S-polynomials, Buchberger's algorithm and the ideal operations
// built on them. All bases are reduced and monic with respect to the lex
// order of their ring, which makes them canonical.

#include <memory>
#include <span>
#include <vector>

#include "cia/ideals.hpp"
#include "cia/report.hpp"

namespace cia {

struct ResourceLimits {
  std::size_t max_pairs = 200'000;
  int max_degree = 40;
  std::size_t max_terms = 5'000'000;
  double max_seconds = 0;        // wall-clock budget, 0 = unlimited
  bool chain_criterion = false;  // Buchberger's second criterion
};

template <class K>
struct ReductionStep {
  std::size_t divisor;  // index into the divisor list
  K coeff;
  Monomial multiplier;
};

/// Witness of a division: input == sum(coeff * multiplier * G[divisor]) + remainder.
template <class K>
struct ReductionTrace {
  Polynomial<K> input;
  std::vector<ReductionStep<K>> steps;
  Polynomial<K> remainder;

  /// Recomputes the remainder from the steps and compares exactly.
  bool replays(std::span<const Polynomial<K>> divisors) const;
};

/// Full division of f by G. The divisor for each step is the eligible element
/// with the greatest leading monomial, ties broken by the lowest index.
template <class K>
ReductionTrace<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors);

/// Remainder only; same divisor rule as normal_form.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors);

/// S(g1, g2) = (L/lt(g1)) g1 - (L/lt(g2)) g2 with L = lcm of the leading
/// monomials and lt including the leading coefficient, so both multipliers
/// are monic-normalized.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& g1, const Polynomial<K>& g2);

template <class K>
GroebnerBasis<K> buchberger(std::span<const Polynomial<K>> generators, const ResourceLimits& limits = {});

/// Interreduces a Groebner basis into the reduced monic one, sorted by
/// decreasing leading monomial.
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> basis);

/// Buchberger's criterion on the given set: every pair with non-coprime
/// leading monomials must have an S-polynomial that divides to zero. The
/// first failing pair (in index order) is reported with its remainder.
template <class K>
VerificationReport is_groebner(std::span<const Polynomial<K>> generators, bool check_traces = true);

/// Cached reduced basis of an ideal (computed on first use).
template <class K>
std::shared_ptr<const GroebnerBasis<K>> basis_of(const Ideal<K>& ideal, const ResourceLimits& limits = {});

/// Installs the generators themselves as the basis after verifying the
/// Buchberger criterion on them; throws if they are not a Groebner basis.
template <class K>
std::shared_ptr<const GroebnerBasis<K>> adopt_generators_as_basis(const Ideal<K>& ideal);

/// true iff J is contained in I.
template <class K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits = {});

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits = {});

/// Membership of a single polynomial.
template <class K>
bool ideal_member(const Ideal<K>& I, const Polynomial<K>& f, const ResourceLimits& limits = {});

enum class RadicalCertificate { squarefree, inconclusive };

/// Squarefree leading monomials imply a radical ideal; anything else is
/// reported as inconclusive, never as non-radical.
template <class K>
RadicalCertificate radical_certificate(const GroebnerBasis<K>& basis);

/// I intersect J via t*I + (1-t)*J with t eliminated (t greater than all
/// matrix variables). The result carries its reduced lex basis.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits = {});

}  // namespace cia

#endif  // CIA_GROEBNER_HPP
