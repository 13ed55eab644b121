#include "cia/variety.hpp"

#include <algorithm>
#include <cstdlib>

#include "cia/parallel.hpp"

namespace cia {

namespace {

// A generator flattened for fast evaluation mod q.
struct Compiled {
  struct Term {
    std::uint64_t coeff;
    std::uint32_t begin, end;  // range in vars
  };
  std::vector<Term> terms;
  std::vector<std::uint16_t> vars;  // repeated by exponent
};

struct CompiledIdeal {
  std::vector<Compiled> gens;
};

CompiledIdeal compile(const Ideal<ModP>& I) {
  CompiledIdeal out;
  for (const auto& g : I.generators()) {
    Compiled c;
    for (const auto& t : g.terms()) {
      auto b = static_cast<std::uint32_t>(c.vars.size());
      for (auto f : t.mono.factors())
        for (int e = 0; e < f.exp; ++e) c.vars.push_back(f.var);
      c.terms.push_back({t.coeff.value(), b, static_cast<std::uint32_t>(c.vars.size())});
    }
    out.gens.push_back(std::move(c));
  }
  std::stable_sort(out.gens.begin(), out.gens.end(),
                   [](const Compiled& a, const Compiled& b) { return a.terms.size() < b.terms.size(); });
  return out;
}

bool vanishes(const CompiledIdeal& I, const std::uint32_t* x, std::uint64_t q) {
  for (const auto& g : I.gens) {
    std::uint64_t sum = 0;
    for (const auto& t : g.terms) {
      std::uint64_t v = t.coeff;
      for (std::uint32_t i = t.begin; i < t.end && v; ++i) v = v * x[g.vars[i]] % q;
      sum += v;
    }
    if (sum % q) return false;
  }
  return true;
}

struct Partial {
  std::uint64_t points = 0, in_J = 0, in_I0 = 0, in_union = 0, jmu = 0, umj = 0;
  std::vector<std::uint64_t> in_IS;
  std::vector<std::uint64_t> w_jmu, w_umj;
};

}  // namespace

template <class K>
bool evaluate(const Ideal<K>& ideal, std::span<const K> point) {
  for (const auto& g : ideal.generators())
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

std::uint64_t point_bound_from_env() {
  if (const char* env = std::getenv("CIA_POINT_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return kDefaultPointBound;
}

std::vector<std::vector<std::uint32_t>> PointCensus::point_matrix(std::uint64_t index) const {
  const int n = instance.d * instance.k * instance.l;
  std::vector<std::uint32_t> digits(n);
  for (int v = n - 1; v >= 0; --v) {
    digits[v] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  const int kl = instance.k * instance.l;
  std::vector<std::vector<std::uint32_t>> m(instance.d, std::vector<std::uint32_t>(kl));
  for (int v = 0; v < n; ++v) m[v / kl][v % kl] = digits[v];
  return m;
}

nlohmann::json PointCensus::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < components.size(); ++i)
    comps.push_back({{"S", cells_label(components[i])}, {"points", in_IS[i]}});
  auto wit = [&](const std::vector<std::uint64_t>& idx) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : idx) a.push_back({{"index", i}, {"matrix", point_matrix(i)}});
    return a;
  };
  return {{"schema", "cia/1"},
          {"instance", {{"d", instance.d}, {"k", instance.k}, {"l", instance.l}, {"s", instance.s}, {"t", instance.t}}},
          {"field", "GF(" + std::to_string(q) + ")"},
          {"points", points},
          {"V(J)", in_J},
          {"V(I_0)", in_I0},
          {"V(I_S)", comps},
          {"union", in_union},
          {"V(J) minus union", J_minus_union},
          {"union minus V(J)", union_minus_J},
          {"witnesses V(J) minus union", wit(J_minus_union_witnesses)},
          {"witnesses union minus V(J)", wit(union_minus_J_witnesses)},
          {"holds", holds()},
          {"scope", "set-theoretic equality over GF(" + std::to_string(q) + ") only"}};
}

PointCensus census(const CensusInstance& inst, std::uint32_t q, std::uint64_t bound, bool force) {
  if (!main_regime(inst.d, inst.k, inst.l, inst.s, inst.t))
    throw RegimeError("census needs 2 <= k <= l <= d, s = 2, t = l");
  if (!is_prime(q)) throw InvalidArgument("census field size " + std::to_string(q) + " is not prime");
  const FieldDesc F = FieldDesc::prime_field(q);
  const Grid grid(inst.k, inst.l);
  const int n = inst.d * inst.k * inst.l;

  PointCensus out;
  out.instance = inst;
  out.q = q;
  out.components = script_L(grid);

  // points = q^n, guarding overflow
  std::uint64_t points = 1;
  bool overflow = false;
  for (int i = 0; i < n; ++i) {
    if (points > (~std::uint64_t{0}) / q) {
      overflow = true;
      break;
    }
    points *= q;
  }
  const std::uint64_t ideals = 2 + out.components.size();
  if (overflow || points > (~std::uint64_t{0}) / ideals)
    throw ResourceError("point space does not fit in 64 bits");
  if (points * ideals > bound && !force)
    throw ResourceError("census needs " + std::to_string(points) + " points x " + std::to_string(ideals) +
                        " ideals, above the bound " + std::to_string(bound) + " (use --force or CIA_POINT_BOUND)");
  out.points = points;

  const CompiledIdeal J = compile(ci_ideal<ModP>(inst.d, inst.k, inst.l, inst.s, inst.t, F));
  const CompiledIdeal I0 = compile(ideal_I0_minimal<ModP>(grid, inst.d, inst.s, inst.t, F));
  std::vector<CompiledIdeal> IS;
  for (const auto& S : out.components) IS.push_back(compile(ideal_IS<ModP>(grid, inst.d, inst.s, S, F)));

  const std::uint64_t chunks = std::min<std::uint64_t>(points, 1024);
  std::vector<Partial> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Partial& p = parts[c];
    p.in_IS.assign(IS.size(), 0);
    std::uint64_t lo = points * c / chunks, hi = points * (c + 1) / chunks;
    std::vector<std::uint32_t> x(n);
    std::uint64_t idx = lo;
    for (int v = n - 1; v >= 0; --v) {
      x[v] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
      bool inJ = vanishes(J, x.data(), q);
      bool in0 = vanishes(I0, x.data(), q);
      bool any = in0;
      for (std::size_t s = 0; s < IS.size(); ++s)
        if (vanishes(IS[s], x.data(), q)) {
          ++p.in_IS[s];
          any = true;
        }
      ++p.points;
      p.in_J += inJ;
      p.in_I0 += in0;
      p.in_union += any;
      if (inJ && !any) {
        ++p.jmu;
        if (p.w_jmu.size() < 10) p.w_jmu.push_back(i);
      }
      if (any && !inJ) {
        ++p.umj;
        if (p.w_umj.size() < 10) p.w_umj.push_back(i);
      }
      // odometer, last variable least significant
      for (int v = n - 1; v >= 0; --v) {
        if (++x[v] < q) break;
        x[v] = 0;
      }
    }
  });
  out.in_IS.assign(IS.size(), 0);
  for (const auto& p : parts) {
    out.in_J += p.in_J;
    out.in_I0 += p.in_I0;
    out.in_union += p.in_union;
    out.J_minus_union += p.jmu;
    out.union_minus_J += p.umj;
    for (std::size_t s = 0; s < IS.size(); ++s) out.in_IS[s] += p.in_IS[s];
    for (auto w : p.w_jmu)
      if (out.J_minus_union_witnesses.size() < 10) out.J_minus_union_witnesses.push_back(w);
    for (auto w : p.w_umj)
      if (out.union_minus_J_witnesses.size() < 10) out.union_minus_J_witnesses.push_back(w);
  }
  return out;
}

template bool evaluate<Rational>(const Ideal<Rational>&, std::span<const Rational>);
template bool evaluate<ModP>(const Ideal<ModP>&, std::span<const ModP>);

}  // namespace cia
