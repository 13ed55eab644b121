#include "cia/components.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

#include "cia/parallel.hpp"
#include "cia/simplicial.hpp"

namespace cia {

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <class K>
struct Component {
  std::string label;
  Ideal<K> ideal;
};

template <class K>
std::vector<Component<K>> all_components(const Grid& grid, int d, FieldDesc field) {
  std::vector<Component<K>> out;
  out.push_back({"I_0", ideal_I0_minimal<K>(grid, d, 2, grid.l(), field)});
  for (const auto& S : script_L(grid)) out.push_back({"I_" + cells_label(S), ideal_IS<K>(grid, d, 2, S, field)});
  return out;
}

// A generator of P whose leading monomial no leading monomial of Q divides.
template <class K>
std::optional<std::size_t> lead_witness(const Ideal<K>& P, const std::vector<Monomial>& q_leads) {
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& lm = P.generators()[i].leading_monomial();
    if (std::none_of(q_leads.begin(), q_leads.end(), [&](const Monomial& m) { return m.divides(lm); })) return i;
  }
  return std::nullopt;
}

template <class K>
std::string gen_label(const Ideal<K>& I, std::size_t i) {
  const auto& labels = I.generator_labels();
  return i < labels.size() && !labels[i].empty() ? labels[i] : "generator " + std::to_string(i);
}

template <class K>
std::vector<Monomial> leads_of(const Ideal<K>& I) {
  std::vector<Monomial> out;
  for (const auto& g : I.generators()) out.push_back(g.leading_monomial());
  return out;
}

int parse_digit_pair(const std::string& text, std::size_t& pos) {
  std::size_t end = pos;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end == pos) throw ParseError("expected a number in generator label '" + text + "'");
  int v = std::stoi(text.substr(pos, end - pos));
  pos = end;
  return v;
}

}  // namespace

CellSet canonical_form(const Grid& grid, const CellSet& S) {
  CellSet best;
  for (const auto& rp : permutations(grid.k()))
    for (const auto& cp : permutations(grid.l())) {
      CellSet img;
      for (int c : S) img.push_back(grid.cell(rp[grid.row_of(c) - 1], cp[grid.col_of(c) - 1]));
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
  return best;
}

std::string SymmetryClass::label() const { return is_I0 ? "I_0" : "I_" + cells_label(representative); }

std::vector<SymmetryClass> symmetry_classes(const Grid& grid) {
  std::map<CellSet, std::vector<CellSet>> orbits;
  for (const auto& S : script_L(grid)) orbits[canonical_form(grid, S)].push_back(S);
  std::vector<SymmetryClass> out;
  out.push_back({true, {}, {}});
  for (auto& [rep, members] : orbits) out.push_back({false, rep, std::move(members)});
  std::stable_sort(out.begin() + 1, out.end(), [](const SymmetryClass& a, const SymmetryClass& b) {
    return a.members.size() != b.members.size() ? a.members.size() < b.members.size()
                                                 : a.representative < b.representative;
  });
  return out;
}

template <class K>
std::vector<ComponentRow> component_table(const Grid& grid, int d, FieldDesc field) {
  if (!main_regime(d, grid.k(), grid.l(), 2, grid.l()))
    throw RegimeError("component table requires 2 <= k <= l <= d");
  std::vector<ComponentRow> rows;
  int type = 0;
  for (const auto& cls : symmetry_classes(grid)) {
    auto ideal = cls.is_I0 ? ideal_I0_minimal<K>(grid, d, 2, grid.l(), field)
                           : ideal_IS<K>(grid, d, 2, cls.representative, field);
    auto gb = adopt_generators_as_basis(ideal);
    Face seed;
    if (cls.is_I0) seed = witness_face_I0(grid, d).all();
    else seed = witness_face_IS(grid, d, cls.representative);
    auto dim = dimension(sr_complex(*gb), seed);
    ComponentRow row;
    row.type = ++type;
    row.representative = cls.label();
    row.occurrences = cls.occurrences();
    row.generators = ideal.size();
    row.dimension = dim.dimension;
    row.codimension = dim.codimension;
    rows.push_back(row);
  }
  return rows;
}

CellSet incomparability_witness(const Grid& grid, const CellSet& S) {
  CellSet r1 = grid.row(1);
  int hit = 0;
  for (int c : r1)
    if (std::binary_search(S.begin(), S.end(), c)) hit = c;
  if (hit == 0) throw InvalidArgument("S must meet the first grid row");
  int c = 0;
  for (int x : grid.column(grid.col_of(hit)))
    if (!std::binary_search(S.begin(), S.end(), x)) {
      c = x;
      break;
    }
  if (c == 0) throw InvalidArgument("the block of R_1 n S lies inside S");
  CellSet A;
  for (int x : r1)
    if (x != hit) A.push_back(x);
  A.push_back(c);
  std::sort(A.begin(), A.end());
  return A;
}

template <class K>
VerificationReport incomparability_by_leading_terms(const Grid& grid, int d, bool confirm_bases, FieldDesc field) {
  VerificationReport rep("pairwise incomparability (leading terms)");
  auto comps = all_components<K>(grid, d, field);
  if (confirm_bases) {
    std::vector<char> ok(comps.size());
    parallel_for(comps.size(), [&](std::size_t i) {
      ok[i] = is_groebner<K>(std::span<const Polynomial<K>>(comps[i].ideal.generators()), false).passed();
    });
    bool all = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    rep.add("canonical generators are Groebner bases", all, std::to_string(comps.size()) + " components");
  }
  std::vector<std::vector<Monomial>> leads;
  for (const auto& c : comps) leads.push_back(leads_of(c.ideal));

  std::size_t pairs = 0;
  for (std::size_t p = 0; p < comps.size(); ++p)
    for (std::size_t q = 0; q < comps.size(); ++q) {
      if (p == q) continue;
      ++pairs;
      auto w = lead_witness(comps[p].ideal, leads[q]);
      if (!w) {
        rep.add(comps[p].label + " not in " + comps[q].label, false, "every leading term is divisible");
        continue;
      }
      if (p == 0 || q == 0)
        rep.add(comps[p].label + " not in " + comps[q].label, true, gen_label(comps[p].ideal, *w));
    }
  rep.note(std::to_string(pairs) + " ordered pairs over " + std::to_string(comps.size()) + " components");

  // the explicit witness from the incomparability argument
  Ring ring{d, grid.size()};
  CellSet top(grid.l());
  std::iota(top.begin(), top.end(), 1);
  const auto L = script_L(grid);
  for (std::size_t q = 1; q < comps.size(); ++q) {
    const auto& S = L[q - 1];
    auto A = incomparability_witness(grid, S);
    auto spec = MinorSpec::make(ring, top, A);
    auto lm = minor<K>(ring, field, spec).leading_monomial();
    bool free = std::none_of(leads[q].begin(), leads[q].end(), [&](const Monomial& m) { return m.divides(lm); });
    bool in_g0 = std::find(comps[0].ideal.generator_labels().begin(), comps[0].ideal.generator_labels().end(),
                           spec.label(d)) != comps[0].ideal.generator_labels().end();
    rep.add("witness " + spec.label(d) + " for " + comps[q].label, free && in_g0,
            std::string(in_g0 ? "in G(I_0)" : "missing from G(I_0)") + (free ? "" : ", leading term reducible"));
  }
  return rep;
}

template <class K>
VerificationReport incomparability_by_membership(const Grid& grid, int d, FieldDesc field) {
  VerificationReport rep("pairwise incomparability (membership)");
  auto comps = all_components<K>(grid, d, field);
  for (const auto& c : comps) basis_of(c.ideal);
  const std::size_t n = comps.size();
  std::vector<std::optional<std::size_t>> witness(n * n);
  parallel_for(n * n, [&](std::size_t job) {
    std::size_t p = job / n, q = job % n;
    if (p == q) return;
    for (std::size_t i = 0; i < comps[p].ideal.size(); ++i)
      if (!ideal_member(comps[q].ideal, comps[p].ideal.generators()[i])) {
        witness[job] = i;
        return;
      }
  });
  std::size_t bad = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const auto& w = witness[p * n + q];
      if (!w) ++bad;
      if (!w || p == 0 || q == 0)
        rep.add(comps[p].label + " not in " + comps[q].label, w.has_value(),
                w ? gen_label(comps[p].ideal, *w) : "contained");
    }
  rep.add("all ordered pairs incomparable", bad == 0, std::to_string(n * (n - 1)) + " pairs");
  return rep;
}

template <class K>
Ideal<K> ideal_from_labels(int d, int k, int l, const std::vector<std::string>& labels, FieldDesc field,
                           std::string name) {
  Grid grid(k, l);
  Ring ring{d, grid.size()};
  Ideal<K> ideal(ring, k, l, field, std::move(name));
  for (const auto& raw : labels) {
    std::string t;
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty generator label");
    if (t[0] == 'p') {
      std::size_t pos = 1;
      int row = 0, col = 0;
      if (t.size() == 3 && std::isdigit(static_cast<unsigned char>(t[1])) && std::isdigit(static_cast<unsigned char>(t[2]))) {
        row = t[1] - '0';
        col = t[2] - '0';
      } else {
        if (pos < t.size() && t[pos] == '(') ++pos;
        row = parse_digit_pair(t, pos);
        if (pos >= t.size() || (t[pos] != '_' && t[pos] != ',')) throw ParseError("bad variable label '" + raw + "'");
        ++pos;
        col = parse_digit_pair(t, pos);
      }
      ideal.add(Polynomial<K>::variable(ring, field, {row, col}), "p" + std::to_string(row) + "_" + std::to_string(col));
    } else if (t.front() == '[' && t.back() == ']') {
      std::string body = t.substr(1, t.size() - 2);
      auto bar = body.find('|');
      CellSet rows, cols;
      if (bar == std::string::npos) {
        cols = parse_cells(body);
        rows.resize(d);
        std::iota(rows.begin(), rows.end(), 1);
      } else {
        rows = parse_cells(body.substr(0, bar));
        cols = parse_cells(body.substr(bar + 1));
      }
      auto spec = MinorSpec::make(ring, rows, cols);
      ideal.add(minor<K>(ring, field, spec), spec.label(d));
    } else {
      throw ParseError("unrecognised generator label '" + raw + "'");
    }
  }
  return ideal;
}

const std::vector<std::string>& listed_I14_labels() {
  static const std::vector<std::string> v{"p11",     "p21",     "p31",     "p14",     "p24",     "p34",
                                          "[12|56]", "[13|56]", "[23|56]", "[12|78]", "[13|78]", "[23|78]",
                                          "[235]",   "[236]",   "[237]",   "[238]",   "[257]",   "[258]",
                                          "[267]",   "[268]",   "[357]",   "[358]",   "[367]",   "[368]"};
  return v;
}

const std::vector<std::string>& listed_I14_star_labels() {
  static const std::vector<std::string> v{"p11",     "p21",     "p31",     "p14",     "p24",     "p34",
                                          "[12|56]", "[13|56]", "[23|56]", "[12|57]", "[13|57]", "[23|57]",
                                          "[12|58]", "[13|58]", "[23|58]", "[12|67]", "[13|67]", "[23|67]",
                                          "[12|68]", "[13|68]", "[23|68]", "[12|78]", "[13|78]", "[23|78]"};
  return v;
}

Hypergraph listed_delta_star() {
  return Hypergraph(8, {{1}, {4}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
}

template <class K>
VerificationReport verify_t_below_l(FieldDesc field, const ResourceLimits& limits) {
  VerificationReport rep("example with t < l (k = s = 2, l = 4, t = d = 3)");
  const int d = 3, k = 2, l = 4;
  Grid grid(k, l);
  auto I0 = transversal_ideal<K>(grid, d, 3, field);
  I0.set_label("I_0");
  auto I14 = ideal_from_labels<K>(d, k, l, listed_I14_labels(), field, "I_14");
  auto star = ideal_from_labels<K>(d, k, l, listed_I14_star_labels(), field, "I_14*");
  auto star_h = hyperedge_ideal<K>(grid, d, listed_delta_star(), field);

  rep.add("I_0 has 44 generators", I0.size() == 44, std::to_string(I0.size()));
  rep.add("I_14 listing has 24 generators", I14.size() == 24, std::to_string(I14.size()));
  rep.add("I_14* listing has 24 generators", star.size() == 24, std::to_string(star.size()));
  rep.add("I_14* listing equals the hyperedge ideal of Delta*_14",
          star.canonical_generators() == star_h.canonical_generators(),
          std::to_string(star_h.size()) + " hyperedge generators");

  auto first_outside = [&](const Ideal<K>& P, const Ideal<K>& Q) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < P.size(); ++i)
      if (!ideal_member(Q, P.generators()[i], limits)) return i;
    return std::nullopt;
  };
  auto w0 = first_outside(I0, I14);
  rep.add("I_0 contained in I_14", !w0, w0 ? gen_label(I0, *w0) + " not in I_14" : "all 44 generators reduce to 0");
  auto w1 = first_outside(I14, star);
  rep.add("I_14 not contained in I_14*", w1.has_value(), w1 ? gen_label(I14, *w1) + " not in I_14*" : "contained");
  auto w2 = first_outside(star, I14);
  rep.add("I_14* not contained in I_14", w2.has_value(), w2 ? gen_label(star, *w2) + " not in I_14" : "contained");
  rep.note("I_0 is the transversal family: block 2-minors and 3-minors meeting each block at most once");
  return rep;
}

#define CIA_INSTANTIATE(K)                                                                                   \
  template std::vector<ComponentRow> component_table<K>(const Grid&, int, FieldDesc);                       \
  template VerificationReport incomparability_by_leading_terms<K>(const Grid&, int, bool, FieldDesc);        \
  template VerificationReport incomparability_by_membership<K>(const Grid&, int, FieldDesc);                 \
  template Ideal<K> ideal_from_labels<K>(int, int, int, const std::vector<std::string>&, FieldDesc, std::string); \
  template VerificationReport verify_t_below_l<K>(FieldDesc, const ResourceLimits&);

CIA_INSTANTIATE(Rational)
CIA_INSTANTIATE(ModP)

}  // namespace cia
