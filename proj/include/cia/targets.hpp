#ifndef CIA_TARGETS_HPP
#define CIA_TARGETS_HPP

// Verification targets shared by the command-line tool and the acceptance
// run. Instances are (k, l, d) with s = 2 and t = l unless noted.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cia/groebner.hpp"
#include "cia/report.hpp"

namespace cia {

struct Instance {
  int k = 2, l = 2, d = 2;
  std::string to_string() const;  // "(k,l,d)=(2,3,3)"
};

/// (2,2,2), (2,2,3), (2,3,3), (3,3,3).
const std::vector<Instance>& desk_instances();

/// Buchberger's criterion on G(I_0) and on the generators of every I_S, with
/// every reduction trace replayed when `traces` is set.
VerificationReport verify_groebner_property(const Instance& in, FieldDesc field = {}, bool traces = true);

/// Squarefree leading terms of the reduced bases of I_0 and every I_S.
VerificationReport verify_radical(const Instance& in, FieldDesc field = {});

/// Non-zerodivisor condition for every j, one localization step and the
/// chain down to the base case.
VerificationReport verify_primality_steps(const Instance& in);

/// Point census over GF(q); at sizes with at most 8 variables also the
/// ideal-level equality of J with the intersection of all components.
VerificationReport verify_decomposition(const Instance& in, std::uint32_t q, std::uint64_t point_bound, bool force,
                                const ResourceLimits& limits = {});

/// Component count against l^k - l + 1, symmetry classes, and pairwise
/// incomparability (membership when kl <= 6, leading terms otherwise).
VerificationReport verify_component_count(const Instance& in, FieldDesc field = {});

/// Exact dimensions of R/I_0 and R/I_S against the closed forms, with the
/// witness faces.
VerificationReport verify_dimensions(const Instance& in, FieldDesc field = {});

/// check_nzd for every j with the Groebner property confirmed first.
VerificationReport verify_nzd_all(const Instance& in);

/// Localization of G(I_0) at p_{d,1} against the direct description of J.
VerificationReport verify_localization(const Instance& in);

/// Groebner basis of the six maximal minors of Delta^{3,3} at k = l = d = 3,
/// checked for squarefree leading terms. Honours limits.max_seconds.
VerificationReport verify_delta33(FieldDesc field = {}, const ResourceLimits& limits = {});

/// Leading monomials of the reduced bases of every component at the desk
/// instances, the t < l example and (optionally) Delta^{3,3}, keyed
/// by ideal name. Used to compare fields.
std::map<std::string, std::vector<std::string>> leading_monomial_sets(FieldDesc field, bool include_delta33,
                                                                      const ResourceLimits& limits = {});

}  // namespace cia

#endif  // CIA_TARGETS_HPP
