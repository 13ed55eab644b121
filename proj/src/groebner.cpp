#include "cia/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "cia/parallel.hpp"

namespace cia {

namespace {

template <class K>
void check_same_ring(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  for (const auto& g : divisors) {
    if (g.ring() != f.ring() || g.field() != f.field())
      throw IncompatibleError("divisor from another ring or field");
    if (g.is_zero()) throw InvalidArgument("zero divisor in division");
  }
}

template <class K>
int pick_divisor(const Monomial& m, std::span<const Polynomial<K>> divisors) {
  int best = -1;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const Monomial& lm = divisors[i].leading_monomial();
    if (!lm.divides(m)) continue;
    if (best < 0 || lm > divisors[best].leading_monomial()) best = static_cast<int>(i);
  }
  return best;
}

template <class K>
Polynomial<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors,
                     std::vector<ReductionStep<K>>* trace) {
  check_same_ring(f, divisors);
  std::vector<Term<K>> work(f.terms().begin(), f.terms().end());
  std::vector<Term<K>> rem;
  std::vector<Term<K>> next;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term<K>& lead = work[head];
    int idx = pick_divisor(lead.mono, divisors);
    if (idx < 0) {
      rem.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const auto& g = divisors[idx];
    K c = lead.coeff / g.leading_coeff();
    Monomial m = lead.mono / g.leading_monomial();
    // work[head+1..] - c*m*g[1..]; the leading terms cancel by construction
    auto gt = g.terms();
    next.clear();
    next.reserve(work.size() - head + gt.size());
    std::size_t i = head + 1, j = 1;
    while (i < work.size() || j < gt.size()) {
      if (j >= gt.size()) {
        next.push_back(std::move(work[i++]));
        continue;
      }
      Monomial gm = gt[j].mono * m;
      if (i >= work.size()) {
        next.push_back({-(gt[j].coeff * c), std::move(gm)});
        ++j;
        continue;
      }
      auto cmp = work[i].mono <=> gm;
      if (cmp > 0) {
        next.push_back(std::move(work[i++]));
      } else if (cmp < 0) {
        next.push_back({-(gt[j].coeff * c), std::move(gm)});
        ++j;
      } else {
        K s = work[i].coeff - gt[j].coeff * c;
        if (!s.is_zero()) next.push_back({std::move(s), std::move(gm)});
        ++i;
        ++j;
      }
    }
    if (trace) trace->push_back({static_cast<std::size_t>(idx), std::move(c), std::move(m)});
    std::swap(work, next);
    head = 0;
  }
  return Polynomial<K>::from_terms(f.ring(), f.field(), std::move(rem));
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

std::pair<int, int> key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

template <class K>
bool ReductionTrace<K>::replays(std::span<const Polynomial<K>> divisors) const {
  Polynomial<K> acc = input;
  for (const auto& s : steps) {
    if (s.divisor >= divisors.size()) return false;
    acc = acc.add_mul(-s.coeff, s.multiplier, divisors[s.divisor]);
  }
  return acc == remainder;
}

template <class K>
ReductionTrace<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  if (divisors.empty()) throw InvalidArgument("normal form needs a nonempty divisor list");
  ReductionTrace<K> tr;
  tr.input = f;
  tr.remainder = divide(f, divisors, &tr.steps);
  return tr;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  if (divisors.empty()) return f;
  return divide<K>(f, divisors, nullptr);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& g1, const Polynomial<K>& g2) {
  if (g1.is_zero() || g2.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
  Monomial L = lcm(g1.leading_monomial(), g2.leading_monomial());
  Polynomial<K> a = g1.mul_term(g1.leading_coeff().inverse(), L / g1.leading_monomial());
  return a.add_mul(-g2.leading_coeff().inverse(), L / g2.leading_monomial(), g2);
}

template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> basis) {
  std::erase_if(basis, [](const Polynomial<K>& g) { return g.is_zero(); });
  std::stable_sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  std::vector<Polynomial<K>> kept;
  for (auto& g : basis) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) kept.push_back(g.monic());
  }
  std::vector<Polynomial<K>> out;
  out.reserve(kept.size());
  for (const auto& g : kept) {
    const auto& lt = g.leading_term();
    Polynomial<K> tail = g - Polynomial<K>::monomial(g.ring(), g.field(), lt.coeff, lt.mono);
    Polynomial<K> r = reduce<K>(tail, kept);
    out.push_back(r.add_mul(lt.coeff, lt.mono, Polynomial<K>::constant(g.ring(), g.field(), 1)));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return out;
}

template <class K>
GroebnerBasis<K> buchberger(std::span<const Polynomial<K>> generators, const ResourceLimits& limits) {
  if (generators.empty()) throw InvalidArgument("buchberger needs at least one generator");
  const Ring ring = generators.front().ring();
  const FieldDesc field = generators.front().field();
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (limits.max_seconds <= 0) return false;
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    return el.count() > limits.max_seconds;
  };

  std::vector<Polynomial<K>> G;
  std::size_t total_terms = 0;
  for (const auto& g : generators) {
    if (g.ring() != ring || g.field() != field) throw IncompatibleError("generators from different rings");
    if (g.is_zero()) continue;
    auto m = g.monic();
    if (std::find(G.begin(), G.end(), m) != G.end()) continue;
    total_terms += m.size();
    G.push_back(std::move(m));
  }
  if (G.empty()) return {ring, field, {}, true};

  std::vector<Pair> pending;
  std::set<std::pair<int, int>> pending_keys;
  auto add_pairs_for = [&](int n) {
    for (int i = 0; i < n; ++i) {
      pending.push_back({i, n, lcm(G[i].leading_monomial(), G[n].leading_monomial())});
      pending_keys.insert({i, n});
    }
  };
  for (int n = 1; n < static_cast<int>(G.size()); ++n) add_pairs_for(n);

  std::size_t processed = 0;
  while (!pending.empty()) {
    if (out_of_time()) throw ResourceError("buchberger exceeded its time budget");
    // normal strategy: smallest lcm degree, then lex-smallest lcm, then index
    std::sort(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (auto c = a.lcm <=> b.lcm; c != 0) return c < 0;
      return std::pair{a.i, a.j} < std::pair{b.i, b.j};
    });
    int deg = pending.front().lcm.degree();
    if (deg > limits.max_degree) throw ResourceError("S-pair degree " + std::to_string(deg) + " exceeds the limit");
    std::size_t cut = 0;
    while (cut < pending.size() && pending[cut].lcm.degree() == deg) ++cut;
    std::vector<Pair> batch(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(cut));
    pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(cut));

    std::vector<Pair> todo;
    for (auto& p : batch) {
      pending_keys.erase({p.i, p.j});
      const auto& li = G[p.i].leading_monomial();
      const auto& lj = G[p.j].leading_monomial();
      if (li.coprime(lj)) continue;
      if (limits.chain_criterion) {
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
          if (k == p.i || k == p.j) continue;
          if (!G[k].leading_monomial().divides(p.lcm)) continue;
          skip = !pending_keys.contains(key(p.i, k)) && !pending_keys.contains(key(p.j, k));
        }
        if (skip) continue;
      }
      todo.push_back(std::move(p));
    }
    processed += todo.size();
    if (processed > limits.max_pairs) throw ResourceError("buchberger exceeded the pair limit");

    std::vector<Polynomial<K>> results(todo.size());
    std::span<const Polynomial<K>> snapshot(G);
    parallel_for(todo.size(), [&](std::size_t n) {
      results[n] = reduce<K>(s_polynomial(snapshot[todo[n].i], snapshot[todo[n].j]), snapshot);
    });
    for (auto& r : results) {
      if (r.is_zero()) continue;
      r = reduce<K>(r, G);
      if (r.is_zero()) continue;
      if (r.total_degree() > limits.max_degree)
        throw ResourceError("basis element of degree " + std::to_string(r.total_degree()) + " exceeds the limit");
      total_terms += r.size();
      if (total_terms > limits.max_terms) throw ResourceError("buchberger exceeded the term limit");
      G.push_back(r.monic());
      add_pairs_for(static_cast<int>(G.size()) - 1);
    }
  }
  return {ring, field, reduce_basis(std::move(G)), true};
}

template <class K>
VerificationReport is_groebner(std::span<const Polynomial<K>> generators, bool check_traces) {
  VerificationReport rep("groebner-criterion");
  std::vector<std::pair<int, int>> pairs;
  std::size_t coprime = 0;
  for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
    if (generators[i].is_zero()) throw InvalidArgument("zero generator");
    for (int j = i + 1; j < static_cast<int>(generators.size()); ++j) {
      if (generators[i].leading_monomial().coprime(generators[j].leading_monomial()))
        ++coprime;
      else
        pairs.emplace_back(i, j);
    }
  }
  struct Outcome {
    bool zero = true;
    bool replays = true;
    std::string remainder;
  };
  std::vector<Outcome> out(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t n) {
    auto [i, j] = pairs[n];
    auto s = s_polynomial(generators[i], generators[j]);
    if (check_traces) {
      auto tr = normal_form<K>(s, generators);
      out[n].zero = tr.remainder.is_zero();
      out[n].replays = tr.replays(generators);
      if (!out[n].zero) out[n].remainder = tr.remainder.to_string();
    } else {
      auto r = reduce<K>(s, generators);
      out[n].zero = r.is_zero();
      if (!out[n].zero) out[n].remainder = r.to_string();
    }
  });
  std::size_t bad = 0, bad_trace = 0;
  nlohmann::json witness;
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    if (!out[n].replays) ++bad_trace;
    if (out[n].zero) continue;
    if (bad++ == 0) {
      auto [i, j] = pairs[n];
      witness = {{"i", i}, {"j", j}, {"g1", generators[i].to_string()}, {"g2", generators[j].to_string()},
                 {"remainder", out[n].remainder}};
    }
  }
  rep.add("S-polynomials reduce to zero", bad == 0,
          std::to_string(pairs.size() - bad) + "/" + std::to_string(pairs.size()) + " non-coprime pairs, " +
              std::to_string(coprime) + " coprime pairs skipped",
          witness);
  if (check_traces)
    rep.add("reduction traces replay exactly", bad_trace == 0,
            std::to_string(pairs.size() - bad_trace) + "/" + std::to_string(pairs.size()) + " traces");
  return rep;
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> basis_of(const Ideal<K>& ideal, const ResourceLimits& limits) {
  if (auto gb = ideal.cached_basis()) return gb;
  std::shared_ptr<const GroebnerBasis<K>> gb;
  if (ideal.generators().empty())
    gb = std::make_shared<GroebnerBasis<K>>(GroebnerBasis<K>{ideal.ring(), ideal.field(), {}, true});
  else
    gb = std::make_shared<GroebnerBasis<K>>(buchberger<K>(ideal.generators(), limits));
  ideal.install_basis(gb);
  return ideal.cached_basis();
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> adopt_generators_as_basis(const Ideal<K>& ideal) {
  if (auto gb = ideal.cached_basis()) return gb;
  auto rep = is_groebner<K>(ideal.generators(), false);
  if (!rep.passed()) throw InvalidArgument("generators of " + ideal.label() + " are not a Groebner basis");
  auto gb = std::make_shared<GroebnerBasis<K>>(
      GroebnerBasis<K>{ideal.ring(), ideal.field(), reduce_basis(ideal.generators()), true});
  ideal.install_basis(gb);
  return ideal.cached_basis();
}

template <class K>
bool ideal_member(const Ideal<K>& I, const Polynomial<K>& f, const ResourceLimits& limits) {
  auto gb = basis_of(I, limits);
  return reduce<K>(f, gb->elements).is_zero();
}

template <class K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits) {
  if (I.ring() != J.ring() || I.field() != J.field()) throw IncompatibleError("ideals from different rings");
  auto gb = basis_of(I, limits);
  const auto& gens = J.generators();
  std::vector<char> ok(gens.size(), 0);
  parallel_for(gens.size(), [&](std::size_t n) { ok[n] = reduce<K>(gens[n], gb->elements).is_zero(); });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits) {
  return ideal_contains(I, J, limits) && ideal_contains(J, I, limits);
}

template <class K>
RadicalCertificate radical_certificate(const GroebnerBasis<K>& basis) {
  for (const auto& g : basis.elements)
    if (!g.leading_monomial().is_squarefree()) return RadicalCertificate::inconclusive;
  return RadicalCertificate::squarefree;
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const ResourceLimits& limits) {
  if (I.ring() != J.ring() || I.field() != J.field()) throw IncompatibleError("ideals from different rings");
  if (I.ring().aux != 0) throw InvalidArgument("intersect expects ideals without elimination variables");
  const Ring base = I.ring();
  const Ring ext = base.with_aux(1);
  std::vector<int> up(base.nvars()), down(ext.nvars(), -1);
  for (int v = 0; v < base.nvars(); ++v) {
    up[v] = v + 1;
    down[v + 1] = v;
  }
  auto t = Polynomial<K>::variable_at(ext, I.field(), 0);
  auto one_minus_t = Polynomial<K>::constant(ext, I.field(), 1) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.remap(ext, up));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.remap(ext, up));

  std::string label = "(" + I.label() + " cap " + J.label() + ")";
  Ideal<K> result(base, I.k(), I.l(), I.field(), label);
  if (gens.empty()) return result;
  auto gb = buchberger<K>(gens, limits);
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb.elements) {
    if (g.leading_monomial().exponent(0) > 0) continue;  // lex: a t-free lead means a t-free polynomial
    kept.push_back(g.remap(base, down));
  }
  for (const auto& g : kept) result.add(g);
  result.install_basis(std::make_shared<GroebnerBasis<K>>(GroebnerBasis<K>{base, I.field(), kept, true}));
  return result;
}

#define CIA_INSTANTIATE(K)                                                                                 \
  template struct ReductionTrace<K>;                                                                      \
  template ReductionTrace<K> normal_form<K>(const Polynomial<K>&, std::span<const Polynomial<K>>);        \
  template Polynomial<K> reduce<K>(const Polynomial<K>&, std::span<const Polynomial<K>>);                 \
  template Polynomial<K> s_polynomial<K>(const Polynomial<K>&, const Polynomial<K>&);                     \
  template std::vector<Polynomial<K>> reduce_basis<K>(std::vector<Polynomial<K>>);                        \
  template GroebnerBasis<K> buchberger<K>(std::span<const Polynomial<K>>, const ResourceLimits&);         \
  template VerificationReport is_groebner<K>(std::span<const Polynomial<K>>, bool);                       \
  template std::shared_ptr<const GroebnerBasis<K>> basis_of<K>(const Ideal<K>&, const ResourceLimits&);   \
  template std::shared_ptr<const GroebnerBasis<K>> adopt_generators_as_basis<K>(const Ideal<K>&);         \
  template bool ideal_member<K>(const Ideal<K>&, const Polynomial<K>&, const ResourceLimits&);            \
  template bool ideal_contains<K>(const Ideal<K>&, const Ideal<K>&, const ResourceLimits&);               \
  template bool ideal_equal<K>(const Ideal<K>&, const Ideal<K>&, const ResourceLimits&);                  \
  template RadicalCertificate radical_certificate<K>(const GroebnerBasis<K>&);                            \
  template Ideal<K> intersect<K>(const Ideal<K>&, const Ideal<K>&, const ResourceLimits&);

CIA_INSTANTIATE(Rational)
CIA_INSTANTIATE(ModP)

}  // namespace cia
