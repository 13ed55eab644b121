#include "cia/targets.hpp"

#include <algorithm>

#include "cia/components.hpp"
#include "cia/proofcheck.hpp"
#include "cia/simplicial.hpp"
#include "cia/variety.hpp"

namespace cia {

namespace {

template <class F>
auto with_field(const FieldDesc& field, F&& fn) {
  if (field.kind == FieldDesc::Kind::rational) return fn.template operator()<Rational>();
  return fn.template operator()<ModP>();
}

void require_regime(const Instance& in) {
  if (!main_regime(in.d, in.k, in.l, 2, in.l))
    throw RegimeError("instance " + in.to_string() + " is outside 2 <= k <= l <= d");
}

template <class K>
std::vector<std::pair<std::string, Ideal<K>>> components_of(const Instance& in, const FieldDesc& field) {
  Grid grid(in.k, in.l);
  std::vector<std::pair<std::string, Ideal<K>>> out;
  out.emplace_back("I_0", ideal_I0_minimal<K>(grid, in.d, 2, in.l, field));
  for (const auto& S : script_L(grid)) out.emplace_back("I_" + cells_label(S), ideal_IS<K>(grid, in.d, 2, S, field));
  return out;
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return {};
}

template <class K>
std::vector<std::string> leads(const GroebnerBasis<K>& gb) {
  std::vector<std::string> out;
  for (const auto& m : gb.leading_monomials()) out.push_back(m.to_string(gb.ring));
  std::sort(out.begin(), out.end());
  return out;
}

template <class K>
Ideal<K> delta33_ideal(const FieldDesc& field) {
  Grid g(3, 3);
  auto J = hyperedge_ideal<K>(g, 3, delta_st(g, 3, 3), field);
  J.set_label("J_Delta33");
  return J;
}

}  // namespace

std::string Instance::to_string() const {
  return "(k,l,d)=(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(d) + ")";
}

const std::vector<Instance>& desk_instances() {
  static const std::vector<Instance> v{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
  return v;
}

VerificationReport verify_groebner_property(const Instance& in, FieldDesc field, bool traces) {
  require_regime(in);
  return with_field(field, [&]<class K>() {
    VerificationReport rep("Groebner property of the canonical generators " + in.to_string());
    for (const auto& [name, I] : components_of<K>(in, field)) {
      auto r = is_groebner<K>(std::span<const Polynomial<K>>(I.generators()), traces);
      rep.add(name + " generators form a Groebner basis", r.passed(),
              r.passed() ? std::to_string(I.size()) + " generators" : first_failure(r));
    }
    rep.note("field " + field.name() + (traces ? ", reduction traces replayed" : ""));
    return rep;
  });
}

VerificationReport verify_radical(const Instance& in, FieldDesc field) {
  require_regime(in);
  return with_field(field, [&]<class K>() {
    VerificationReport rep("squarefree initial ideals " + in.to_string());
    for (const auto& [name, I] : components_of<K>(in, field)) {
      auto gb = basis_of(I);
      bool sq = radical_certificate(*gb) == RadicalCertificate::squarefree;
      rep.add(name + " has squarefree leading terms", sq, std::to_string(gb->elements.size()) + " basis elements");
    }
    return rep;
  });
}

VerificationReport verify_nzd_all(const Instance& in) {
  require_regime(in);
  VerificationReport rep("non-zerodivisor condition " + in.to_string());
  Grid grid(in.k, in.l);
  for (int j = 1; j < in.l; ++j) rep.absorb(check_nzd(grid, in.d, j, j == 1), "j=" + std::to_string(j) + ": ");
  return rep;
}

VerificationReport verify_localization(const Instance& in) {
  require_regime(in);
  VerificationReport rep("localization step " + in.to_string());
  rep.absorb(verify_localization_step(in.k, in.l, in.d));
  return rep;
}

VerificationReport verify_primality_steps(const Instance& in) {
  require_regime(in);
  VerificationReport rep("primality proof steps " + in.to_string());
  rep.absorb(verify_nzd_all(in), "nzd: ");
  if (in.l >= 3) rep.absorb(verify_localization(in), "step: ");
  rep.absorb(verify_localization_chain(in.k, in.l, in.d), "chain: ");
  return rep;
}

VerificationReport verify_decomposition(const Instance& in, std::uint32_t q, std::uint64_t point_bound, bool force,
                                const ResourceLimits& limits) {
  require_regime(in);
  VerificationReport rep("decomposition " + in.to_string());
  auto c = census({in.d, in.k, in.l, 2, in.l}, q, point_bound, force);
  rep.add("V(J) = V(I_0) u union V(I_S) over GF(" + std::to_string(q) + ")", c.holds(),
          std::to_string(c.points) + " points, " + std::to_string(c.in_J) + " in V(J), " +
              std::to_string(c.J_minus_union) + " + " + std::to_string(c.union_minus_J) + " discrepancies",
          c.holds() ? nlohmann::json(nullptr) : c.to_json());
  rep.note("set-theoretic equality over GF(" + std::to_string(q) + ") only");
  if (in.d * in.k * in.l <= 8) {
    auto J = ci_ideal<Rational>(in.d, in.k, in.l, 2, in.l);
    auto comps = components_of<Rational>(in, {});
    Ideal<Rational> inter = comps.front().second;
    for (std::size_t i = 1; i < comps.size(); ++i) inter = intersect(inter, comps[i].second, limits);
    rep.add("J equals the intersection of all components", ideal_equal(J, inter, limits),
            std::to_string(comps.size()) + " components over QQ");
    bool sq = radical_certificate(*basis_of(J, limits)) == RadicalCertificate::squarefree;
    rep.add("J has squarefree leading terms (radical)", sq);
  }
  return rep;
}

VerificationReport verify_component_count(const Instance& in, FieldDesc field) {
  require_regime(in);
  VerificationReport rep("component count and incomparability " + in.to_string());
  Grid grid(in.k, in.l);
  long want = 1;
  for (int i = 0; i < in.k; ++i) want *= in.l;
  want = want - in.l + 1;
  long have = 1 + static_cast<long>(script_L(grid).size());
  rep.add("component count l^k - l + 1", have == want, std::to_string(have) + " components");
  std::size_t total = 0;
  for (const auto& cls : symmetry_classes(grid)) total += cls.occurrences();
  rep.add("symmetry classes cover every component", static_cast<long>(total) == have,
          std::to_string(symmetry_classes(grid).size()) + " classes");
  std::string mismatches;
  for (int k = 2; k <= 4; ++k)
    for (int l = k; l <= 4; ++l) {
      long f = 1;
      for (int i = 0; i < k; ++i) f *= l;
      long e = 1 + static_cast<long>(script_L(Grid(k, l)).size());
      if (e != f - l + 1) mismatches += " (" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
  rep.add("formula matches enumeration for 2 <= k <= l <= 4", mismatches.empty(),
          mismatches.empty() ? "6 grid shapes" : "mismatch at" + mismatches);
  with_field(field, [&]<class K>() {
    if (in.k * in.l <= 6) rep.absorb(incomparability_by_membership<K>(grid, in.d, field), "membership: ");
    else rep.absorb(incomparability_by_leading_terms<K>(grid, in.d, true, field), "leading terms: ");
    return 0;
  });
  return rep;
}

VerificationReport verify_dimensions(const Instance& in, FieldDesc field) {
  require_regime(in);
  const int k = in.k, l = in.l, d = in.d;
  Grid grid(k, l);
  return with_field(field, [&]<class K>() {
    VerificationReport rep("dimensions " + in.to_string());
    auto comps = components_of<K>(in, field);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& [name, I] = comps[i];
      auto complex = sr_complex(*adopt_generators_as_basis(I));
      Face seed = i == 0 ? witness_face_I0(grid, d).all() : witness_face_IS(grid, d, script_L(grid)[i - 1]);
      int want = i == 0 ? l * (k + d) - d - 1 : l * (k + d - 1) - k;
      auto dim = dimension(complex, seed);
      bool face_ok = complex.is_face(seed) && static_cast<int>(seed.size()) == want;
      rep.add("dim R/" + name + " = " + std::to_string(want), dim.dimension == want && face_ok,
              "computed " + std::to_string(dim.dimension) + ", codim " + std::to_string(dim.codimension) +
                  (face_ok ? ", witness face attains it" : ", witness face rejected"));
    }
    return rep;
  });
}

VerificationReport verify_delta33(FieldDesc field, const ResourceLimits& limits) {
  return with_field(field, [&]<class K>() {
    VerificationReport rep("Delta^{3,3} at k = l = s = t = d = 3");
    auto J = delta33_ideal<K>(field);
    rep.add("one maximal minor per edge", J.size() == 6, std::to_string(J.size()) + " generators");
    rep.note("six edges, one maximal minor each");
    auto gb = basis_of(J, limits);
    bool sq = radical_certificate(*gb) == RadicalCertificate::squarefree;
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& m : gb->leading_monomials())
      if (!m.is_squarefree()) bad.push_back(m.to_string(gb->ring));
    rep.add("reduced lex basis has squarefree leading terms", sq,
            std::to_string(gb->elements.size()) + " basis elements over " + field.name() + ", " +
                std::to_string(bad.size()) + " non-squarefree leading terms",
            sq ? nlohmann::json(nullptr) : bad);
    return rep;
  });
}

std::map<std::string, std::vector<std::string>> leading_monomial_sets(FieldDesc field, bool include_delta33,
                                                                      const ResourceLimits& limits) {
  return with_field(field, [&]<class K>() {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& in : desk_instances())
      for (const auto& [name, I] : components_of<K>(in, field)) out[in.to_string() + " " + name] = leads(*basis_of(I, limits));
    const int d = 3, k = 2, l = 4;
    out["t<l I_0"] = leads(*basis_of(transversal_ideal<K>(Grid(k, l), d, 3, field), limits));
    out["t<l I_14"] = leads(*basis_of(ideal_from_labels<K>(d, k, l, listed_I14_labels(), field), limits));
    out["t<l I_14*"] = leads(*basis_of(ideal_from_labels<K>(d, k, l, listed_I14_star_labels(), field), limits));
    if (include_delta33) out["Delta33 J"] = leads(*basis_of(delta33_ideal<K>(field), limits));
    return out;
  });
}

}  // namespace cia
