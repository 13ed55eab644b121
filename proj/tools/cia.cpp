// cia: construct the determinantal ideals, compute with them, and run the
// verification targets. Exit status: 0 pass, 1 verification failure,
// 2 usage or regime error, 3 resource limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "cia/components.hpp"
#include "cia/groebner.hpp"
#include "cia/json_io.hpp"
#include "cia/proofcheck.hpp"
#include "cia/simplicial.hpp"
#include "cia/targets.hpp"
#include "cia/variety.hpp"

using namespace cia;
using nlohmann::json;

namespace {

struct Config {
  int d = 0, k = 2, l = 3, s = 2, t = 0;
  std::string S;
  std::uint32_t q = 2;
  std::string field = "QQ";
  std::string format = "text";
  std::size_t limit_pairs = ResourceLimits{}.max_pairs;
  int limit_degree = ResourceLimits{}.max_degree;
  double budget = 0;
  bool chain = false;
  bool force = false;

  // positional arguments
  std::string ideal = "J";
  std::string other = "I0";
  std::string target;
  std::string path;
  bool basis = false;

  int dd() const { return d > 0 ? d : std::max(l, 2); }
  int tt() const { return t > 0 ? t : l; }
  Instance instance() const { return {k, l, dd()}; }
  FieldDesc fd() const { return FieldDesc::parse(field); }
  ResourceLimits limits() const {
    ResourceLimits r;
    r.max_pairs = limit_pairs;
    r.max_degree = limit_degree;
    r.max_seconds = budget;
    r.chain_criterion = chain;
    return r;
  }
  bool as_json() const { return format == "json"; }
};

int emit(const Config& c, const VerificationReport& r) {
  if (c.as_json()) std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.to_text();
  return r.passed() ? 0 : 1;
}

template <class K>
Ideal<K> build(const Config& c, const std::string& spec) {
  const auto field = c.fd();
  Grid grid(c.k, c.l);
  const int d = c.dd();
  if (spec == "J") return ci_ideal<K>(d, c.k, c.l, c.s, c.tt(), field);
  if (spec == "I0") {
    if (main_regime(d, c.k, c.l, c.s, c.tt())) return ideal_I0_minimal<K>(grid, d, c.s, c.tt(), field);
    auto I = transversal_ideal<K>(grid, d, c.tt(), field);
    I.set_label("I_0");
    return I;
  }
  if (spec == "IS") {
    if (c.S.empty()) throw InvalidArgument("IS needs --S");
    return ideal_IS<K>(grid, d, c.s, parse_cells(c.S), field);
  }
  if (spec.rfind("I_", 0) == 0 && spec.size() > 2) return ideal_IS<K>(grid, d, c.s, parse_cells(spec.substr(2)), field);
  if (spec == "listed:I_14") return ideal_from_labels<K>(3, 2, 4, listed_I14_labels(), field, "I_14");
  if (spec == "listed:I_14*") return ideal_from_labels<K>(3, 2, 4, listed_I14_star_labels(), field, "I_14*");
  if (spec == "listed:I_0") return transversal_ideal<K>(Grid(2, 4), 3, 3, field);
  if (!spec.empty() && spec[0] == '@') return ideal_from_json<K>(read_json_file(spec.substr(1)));
  throw InvalidArgument("unknown ideal '" + spec + "' (J, I0, IS, I_<cells>, listed:I_14, listed:I_14*, listed:I_0, @file)");
}

template <class K>
void print_ideal(const Config& c, const Ideal<K>& I) {
  if (c.as_json()) {
    std::cout << to_json(I).dump(2) << "\n";
    return;
  }
  std::cout << (I.label().empty() ? "ideal" : I.label()) << ": " << I.size() << " generators over " << I.field().name()
            << "\n";
  for (std::size_t i = 0; i < I.size(); ++i) {
    const auto& lab = I.generator_labels()[i];
    std::cout << "  " << (lab.empty() ? "" : lab + " = ") << I.generators()[i].to_string() << "\n";
  }
}

template <class K>
int run_construct(const Config& c) {
  print_ideal(c, build<K>(c, c.ideal));
  return 0;
}

template <class K>
int run_gb(const Config& c) {
  auto I = build<K>(c, c.ideal);
  auto gb = basis_of(I, c.limits());
  bool sq = radical_certificate(*gb) == RadicalCertificate::squarefree;
  if (c.as_json()) {
    auto j = to_json(*gb, I.k(), I.l(), content_hash(I));
    j["squarefree"] = sq;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "reduced " << gb->order() << " basis of " << I.label() << ": " << gb->elements.size() << " elements\n";
  for (const auto& g : gb->elements) std::cout << "  " << g.to_string() << "\n";
  std::cout << "leading terms " << (sq ? "squarefree (radical)" : "not all squarefree (inconclusive)") << "\n";
  return 0;
}

template <class K>
int run_contains(const Config& c) {
  auto I = build<K>(c, c.ideal);
  auto J = build<K>(c, c.other);
  VerificationReport r(c.other + " contained in " + c.ideal);
  for (std::size_t i = 0; i < J.size(); ++i)
    if (!ideal_member(I, J.generators()[i], c.limits())) {
      r.add("generators reduce to zero", false, J.generator_labels()[i] + " has a nonzero normal form");
      return emit(c, r);
    }
  r.add("generators reduce to zero", true, std::to_string(J.size()) + " generators");
  return emit(c, r);
}

template <class K>
int run_intersect(const Config& c) {
  auto I = intersect(build<K>(c, c.ideal), build<K>(c, c.other), c.limits());
  I.set_label(c.ideal + " n " + c.other);
  print_ideal(c, I);
  return 0;
}

template <class K>
int run_dim(const Config& c) {
  auto I = build<K>(c, c.ideal);
  auto complex = sr_complex(*basis_of(I, c.limits()));
  auto r = dimension(complex);
  if (c.as_json()) {
    std::cout << json{{"schema", kSchema}, {"ideal", I.label()}, {"dimension", r.dimension},
                      {"codimension", r.codimension}, {"face", face_to_string(I.ring(), r.face)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "dim R/" << I.label() << " = " << r.dimension << ", codim = " << r.codimension << "\n"
              << "  maximal face " << face_to_string(I.ring(), r.face) << "\n";
  }
  return 0;
}

template <class K>
int run_table(const Config& c) {
  auto rows = component_table<K>(Grid(c.k, c.l), c.dd(), c.fd());
  std::size_t total = 0;
  for (const auto& r : rows) total += r.occurrences;
  if (c.as_json()) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"type", r.type}, {"representative", r.representative}, {"occurrences", r.occurrences},
                     {"generators", r.generators}, {"dimension", r.dimension}, {"codimension", r.codimension}});
    std::cout << json{{"schema", kSchema}, {"instance", c.instance().to_string()}, {"components", total}, {"rows", arr}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << c.instance().to_string() << ": " << total << " components in " << rows.size() << " symmetry classes\n";
  std::cout << "type  representative  occurrences  generators  dim R/I  codim\n";
  for (const auto& r : rows) {
    std::printf("%4d  %-14s  %11zu  %10zu  %7d  %5d\n", r.type, r.representative.c_str(), r.occurrences, r.generators,
                r.dimension, r.codimension);
  }
  std::cout << "dim R/I is the exact Krull dimension; codim is the number of variables minus it.\n";
  return 0;
}

int run_census(const Config& c) {
  auto p = census({c.dd(), c.k, c.l, c.s, c.tt()}, c.q, point_bound_from_env(), c.force);
  if (c.as_json()) std::cout << p.to_json().dump(2) << "\n";
  else {
    std::cout << "census over GF(" << c.q << ") at " << c.instance().to_string() << ": " << p.points << " points\n"
              << "  V(J) " << p.in_J << ", V(I_0) " << p.in_I0 << ", union " << p.in_union << "\n"
              << "  V(J) minus union " << p.J_minus_union << ", union minus V(J) " << p.union_minus_J << "\n"
              << "  set-theoretic equality over GF(" << c.q << ") only: " << (p.holds() ? "holds" : "FAILS") << "\n";
  }
  return p.holds() ? 0 : 1;
}

int run_verify(const Config& c) {
  const auto& t = c.target;
  const auto in = c.instance();
  if (t == "thm2.4") {
    auto r = verify_groebner_property(in, c.fd(), true);
    r.absorb(verify_radical(in, c.fd()), "radical: ");
    return emit(c, r);
  }
  if (t == "thm2.5-steps") return emit(c, verify_primality_steps(in));
  if (t == "thm2.6") return emit(c, verify_decomposition(in, c.q, point_bound_from_env(), c.force, c.limits()));
  if (t == "cor2.7") return emit(c, verify_component_count(in, c.fd()));
  if (t == "prop2.8") return emit(c, verify_dimensions(in, c.fd()));
  if (t == "lemma3.2") return emit(c, verify_nzd_all(in));
  if (t == "lemma3.4") return emit(c, verify_localization(in));
  if (t == "appendix") return emit(c, verify_appendix());
  if (t == "ex4.1") {
    auto lim = c.limits();
    lim.chain_criterion = true;
    return emit(c, verify_delta33(c.fd(), lim));
  }
  if (t == "ex4.3") {
    if (c.fd().kind == FieldDesc::Kind::rational) return emit(c, verify_t_below_l<Rational>(c.fd(), c.limits()));
    return emit(c, verify_t_below_l<ModP>(c.fd(), c.limits()));
  }
  throw InvalidArgument("unknown verification target '" + t + "'");
}

template <class K>
int run_export(const Config& c) {
  auto I = build<K>(c, c.ideal);
  json j = c.basis ? to_json(*basis_of(I, c.limits()), I.k(), I.l(), content_hash(I)) : to_json(I);
  if (c.path.empty() || c.path == "-") std::cout << j.dump(2) << "\n";
  else write_json_file(c.path, j);
  return 0;
}

int run_import(const Config& c) {
  auto j = read_json_file(c.path);
  json out;
  std::string kind;
  if (j.contains("edges")) {
    auto h = hypergraph_from_json(j);
    Grid grid(c.k, c.l);
    if (grid.size() != h.vertex_count())
      throw InvalidArgument("hypergraph has " + std::to_string(h.vertex_count()) + " vertices; --k --l give " +
                            std::to_string(grid.size()));
    auto f = c.fd();
    if (f.kind == FieldDesc::Kind::rational) print_ideal(c, hyperedge_ideal<Rational>(grid, c.dd(), h, f));
    else print_ideal(c, hyperedge_ideal<ModP>(grid, c.dd(), h, f));
    return 0;
  }
  auto f = field_of_document(j);
  bool is_basis = j.contains("elements");
  if (f.kind == FieldDesc::Kind::rational) {
    if (is_basis) {
      auto gb = basis_from_json<Rational>(j);
      out = to_json(gb, j.value("k", 0), j.value("l", 0), j.value("hash", std::string{}));
    } else {
      out = to_json(ideal_from_json<Rational>(j));
    }
  } else {
    if (is_basis) {
      auto gb = basis_from_json<ModP>(j);
      out = to_json(gb, j.value("k", 0), j.value("l", 0), j.value("hash", std::string{}));
    } else {
      out = to_json(ideal_from_json<ModP>(j));
    }
  }
  bool same = out == j;
  std::cerr << "round trip " << (same ? "exact" : "differs") << "\n";
  std::cout << out.dump(2) << "\n";
  return same ? 0 : 1;
}

template <class F>
int dispatch(const Config& c, F&& fn) {
  if (c.fd().kind == FieldDesc::Kind::rational) return fn.template operator()<Rational>();
  return fn.template operator()<ModP>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional-independence ideals with hidden variables"};
  app.require_subcommand(1);
  Config c;
  if (const char* e = std::getenv("CIA_THREADS"); e && std::atoi(e) <= 0)
    std::cerr << "ignoring CIA_THREADS=" << e << "\n";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "rows of P (default l)")->check(CLI::PositiveNumber);
    sub->add_option("--k", c.k, "grid rows")->check(CLI::PositiveNumber);
    sub->add_option("--l", c.l, "grid columns")->check(CLI::PositiveNumber);
    sub->add_option("--s", c.s, "column-block minor size")->check(CLI::PositiveNumber);
    sub->add_option("--t", c.t, "row-block minor size (default l)")->check(CLI::PositiveNumber);
    sub->add_option("--S", c.S, "cell set for I_S, e.g. 14 or 1,4");
    sub->add_option("--q", c.q, "prime for the census")->check(CLI::PositiveNumber);
    sub->add_option("--field", c.field, "QQ or GF(p)");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--limit-pairs", c.limit_pairs, "S-pair limit")->check(CLI::PositiveNumber);
    sub->add_option("--limit-degree", c.limit_degree, "degree limit")->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget, "wall-clock seconds for Groebner computations (0 = none)");
    sub->add_flag("--chain", c.chain, "use Buchberger's chain criterion");
    sub->add_flag("--force", c.force, "run the census beyond CIA_POINT_BOUND");
  };
  const std::string ideal_help = "J, I0, IS (with --S), I_<cells>, listed:I_14, listed:I_14*, listed:I_0 or @file.json";

  auto* construct = app.add_subcommand("construct", "print the generators of an ideal");
  construct->add_option("ideal", c.ideal, ideal_help);
  auto* gb = app.add_subcommand("gb", "reduced lex Groebner basis");
  gb->add_option("ideal", c.ideal, ideal_help);
  auto* contains = app.add_subcommand("contains", "decide whether the second ideal lies in the first");
  contains->add_option("ideal", c.ideal, ideal_help)->required();
  contains->add_option("other", c.other, ideal_help)->required();
  auto* inter = app.add_subcommand("intersect", "intersection of two ideals");
  inter->add_option("ideal", c.ideal, ideal_help)->required();
  inter->add_option("other", c.other, ideal_help)->required();
  auto* dim = app.add_subcommand("dim", "Krull dimension via the Stanley-Reisner complex");
  dim->add_option("ideal", c.ideal, ideal_help);
  auto* table = app.add_subcommand("table", "component table grouped by symmetry class");
  auto* cen = app.add_subcommand("census", "vanishing-set census over GF(q)");
  auto* verify = app.add_subcommand("verify", "run a verification target");
  verify->add_option("target", c.target)
      ->required()
      ->check(CLI::IsMember({"thm2.4", "thm2.5-steps", "thm2.6", "cor2.7", "prop2.8", "lemma3.2", "lemma3.4",
                             "appendix", "ex4.1", "ex4.3"}));
  auto* exp = app.add_subcommand("export", "write an ideal or its basis as JSON");
  exp->add_option("ideal", c.ideal, ideal_help);
  exp->add_option("--out", c.path, "output path (default stdout)");
  exp->add_flag("--gb", c.basis, "export the reduced Groebner basis");
  auto* imp = app.add_subcommand("import", "read an ideal, basis or hypergraph document");
  imp->add_option("path", c.path)->required();
  for (auto* sub : {construct, gb, contains, inter, dim, table, cen, verify, exp, imp}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*construct) return dispatch(c, [&]<class K>() { return run_construct<K>(c); });
    if (*gb) return dispatch(c, [&]<class K>() { return run_gb<K>(c); });
    if (*contains) return dispatch(c, [&]<class K>() { return run_contains<K>(c); });
    if (*inter) return dispatch(c, [&]<class K>() { return run_intersect<K>(c); });
    if (*dim) return dispatch(c, [&]<class K>() { return run_dim<K>(c); });
    if (*table) return dispatch(c, [&]<class K>() { return run_table<K>(c); });
    if (*cen) return run_census(c);
    if (*verify) return run_verify(c);
    if (*exp) return dispatch(c, [&]<class K>() { return run_export<K>(c); });
    if (*imp) return run_import(c);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const RegimeError& e) {
    std::cerr << "regime: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
