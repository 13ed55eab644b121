#include "cia/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cia {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

int member_int(const json& j, const char* key, const std::string& where) {
  return get_int(member(j, key, where), where + "." + key);
}

template <class K>
std::string coeff_string(const K& c) {
  return c.to_string();
}

}  // namespace

template <class K>
nlohmann::json to_json(const Polynomial<K>& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json m = json::array();
    for (auto fac : t.mono.factors()) m.push_back({fac.var, fac.exp});
    terms.push_back({{"c", coeff_string(t.coeff)}, {"m", std::move(m)}});
  }
  return {{"terms", std::move(terms)}};
}

template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j, const Ring& ring, const FieldDesc& field,
                                   const std::string& where) {
  const json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + ".terms", "expected an array");
  std::vector<Term<K>> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string tw = where + ".terms[" + std::to_string(i) + "]";
    const json& c = member(terms[i], "c", tw);
    K coeff;
    try {
      if (c.is_string())
        coeff = K::parse(c.get<std::string>(), field);
      else if (c.is_number_integer())
        coeff = K::from(c.get<long>(), field);
      else
        fail(tw + ".c", "expected a string or integer coefficient");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(tw + ".c", e.what());
    }
    if (coeff.is_zero()) fail(tw + ".c", "zero coefficient");
    const json& m = member(terms[i], "m", tw);
    if (!m.is_array()) fail(tw + ".m", "expected an array");
    std::vector<Monomial::Factor> fs;
    for (std::size_t v = 0; v < m.size(); ++v) {
      std::string fw = tw + ".m[" + std::to_string(v) + "]";
      if (!m[v].is_array() || m[v].size() != 2) fail(fw, "expected [varIndex, exp]");
      int var = get_int(m[v][0], fw + "[0]");
      int exp = get_int(m[v][1], fw + "[1]");
      if (var < 0 || var >= ring.nvars())
        fail(fw, "variable index " + std::to_string(var) + " out of range (ring has " +
                     std::to_string(ring.nvars()) + " variables)");
      if (exp <= 0 || exp > 65535) fail(fw, "exponent " + std::to_string(exp) + " out of range");
      fs.push_back({static_cast<std::uint16_t>(var), static_cast<std::uint16_t>(exp)});
    }
    out.push_back({std::move(coeff), Monomial(std::move(fs))});
  }
  return Polynomial<K>::from_terms(ring, field, std::move(out));
}

nlohmann::json to_json(const Hypergraph& h) { return {{"n", h.vertex_count()}, {"edges", h.edges()}}; }

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  int n = member_int(j, "n", "hypergraph");
  if (n <= 0) fail("hypergraph.n", "vertex count must be positive");
  const json& edges = member(j, "edges", "hypergraph");
  if (!edges.is_array()) fail("hypergraph.edges", "expected an array");
  std::vector<CellSet> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string ew = "hypergraph.edges[" + std::to_string(i) + "]";
    CellSet e;
    if (edges[i].is_string()) {
      try {
        e = parse_cells(edges[i].get<std::string>());
      } catch (const Error& ex) {
        fail(ew, ex.what());
      }
    } else if (edges[i].is_array()) {
      for (std::size_t c = 0; c < edges[i].size(); ++c) e.push_back(get_int(edges[i][c], ew + "[" + std::to_string(c) + "]"));
    } else {
      fail(ew, "expected a list of cells or a label string");
    }
    if (e.empty()) fail(ew, "empty edge");
    for (int c : e)
      if (c < 1 || c > n) fail(ew, "cell " + std::to_string(c) + " out of range [1, " + std::to_string(n) + "]");
    out.push_back(std::move(e));
  }
  try {
    return Hypergraph(n, std::move(out));
  } catch (const Error& ex) {
    fail("hypergraph", ex.what());
  }
}

FieldDesc field_of_document(const nlohmann::json& j) {
  const json& f = member(j, "field", "document");
  if (!f.is_string()) fail("document.field", "expected a field name");
  try {
    return FieldDesc::parse(f.get<std::string>());
  } catch (const Error& e) {
    fail("document.field", e.what());
  }
}

template <class K>
nlohmann::json to_json(const Ideal<K>& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(to_json(g));
  json j{{"schema", kSchema}, {"d", I.d()},           {"k", I.k()},          {"l", I.l()},
         {"field", I.field().name()}, {"label", I.label()}, {"generators", std::move(gens)}};
  bool any_label = std::any_of(I.generator_labels().begin(), I.generator_labels().end(),
                               [](const std::string& s) { return !s.empty(); });
  if (any_label) j["generator_labels"] = I.generator_labels();
  return j;
}

namespace {

template <class K>
void check_field_kind(const FieldDesc& f) {
  bool rational = f.kind == FieldDesc::Kind::rational;
  if (std::is_same_v<K, Rational> != rational)
    fail("document.field", "field " + f.name() + " does not match the requested coefficient type");
}

void check_schema(const json& j, const std::string& where) {
  if (auto it = j.find("schema"); it != j.end() && *it != kSchema)
    fail(where + ".schema", "unsupported schema " + it->dump());
}

}  // namespace

template <class K>
Ideal<K> ideal_from_json(const nlohmann::json& j) {
  check_schema(j, "ideal");
  int d = member_int(j, "d", "ideal"), k = member_int(j, "k", "ideal"), l = member_int(j, "l", "ideal");
  if (d <= 0 || k <= 0 || l <= 0) fail("ideal", "sizes must be positive");
  FieldDesc field = field_of_document(j);
  check_field_kind<K>(field);
  std::string label;
  if (auto it = j.find("label"); it != j.end() && it->is_string()) label = it->get<std::string>();
  Ring ring{d, k * l};
  Ideal<K> I(ring, k, l, field, label);
  const json& gens = member(j, "generators", "ideal");
  if (!gens.is_array()) fail("generators", "expected an array");
  std::vector<std::string> labels;
  if (auto it = j.find("generator_labels"); it != j.end() && it->is_array())
    for (const auto& s : *it) labels.push_back(s.is_string() ? s.get<std::string>() : "");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string w = "generators[" + std::to_string(i) + "]";
    auto g = polynomial_from_json<K>(gens[i], ring, field, w);
    if (g.is_zero()) fail(w, "zero generator");
    I.add(std::move(g), i < labels.size() ? labels[i] : std::string());
  }
  return I;
}

template <class K>
nlohmann::json to_json(const GroebnerBasis<K>& gb, int k, int l, const std::string& hash) {
  json els = json::array();
  for (const auto& g : gb.elements) els.push_back(to_json(g));
  json j{{"schema", kSchema}, {"d", gb.ring.d}, {"k", k}, {"l", l}, {"aux", gb.ring.aux},
         {"field", gb.field.name()}, {"order", gb.order()}, {"reduced", gb.reduced}, {"elements", std::move(els)}};
  if (!hash.empty()) j["hash"] = hash;
  return j;
}

template <class K>
GroebnerBasis<K> basis_from_json(const nlohmann::json& j) {
  check_schema(j, "basis");
  int d = member_int(j, "d", "basis"), k = member_int(j, "k", "basis"), l = member_int(j, "l", "basis");
  int aux = j.contains("aux") ? member_int(j, "aux", "basis") : 0;
  if (d <= 0 || k <= 0 || l <= 0 || aux < 0) fail("basis", "sizes must be positive");
  FieldDesc field = field_of_document(j);
  check_field_kind<K>(field);
  GroebnerBasis<K> gb{Ring{d, k * l, aux}, field, {}, true};
  if (auto it = j.find("reduced"); it != j.end() && it->is_boolean()) gb.reduced = it->get<bool>();
  const json& els = member(j, "elements", "basis");
  if (!els.is_array()) fail("elements", "expected an array");
  for (std::size_t i = 0; i < els.size(); ++i)
    gb.elements.push_back(polynomial_from_json<K>(els[i], gb.ring, field, "elements[" + std::to_string(i) + "]"));
  if (auto it = j.find("order"); it != j.end() && *it != gb.order())
    fail("basis.order", "order " + it->dump() + " does not match the ring");
  return gb;
}

template <class K>
std::string content_hash(const Ideal<K>& I, const std::string& order) {
  json gens = json::array();
  for (const auto& g : I.canonical_generators()) gens.push_back(to_json(g));
  std::string text = order + "|" + I.field().name() + "|" + std::to_string(I.d()) + "x" +
                     std::to_string(I.k() * I.l()) + "|" + gens.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << j.dump(1) << "\n";
}

template <class K>
std::filesystem::path save_basis_cache(const std::filesystem::path& dir, const Ideal<K>& I, const GroebnerBasis<K>& gb) {
  std::filesystem::create_directories(dir);
  std::string hash = content_hash(I, gb.order());
  auto path = dir / (hash + ".json");
  write_json_file(path, to_json(gb, I.k(), I.l(), hash));
  return path;
}

template <class K>
std::optional<GroebnerBasis<K>> load_basis_cache(const std::filesystem::path& dir, const Ideal<K>& I) {
  std::string hash = content_hash(I, "lex");
  auto path = dir / (hash + ".json");
  if (!std::filesystem::exists(path)) return std::nullopt;
  auto j = read_json_file(path);
  if (!j.contains("hash") || j["hash"] != hash) throw ParseError(path.string() + ": hash mismatch");
  auto gb = basis_from_json<K>(j);
  if (gb.ring != I.ring() || gb.field != I.field()) throw ParseError(path.string() + ": ring or field mismatch");
  return gb;
}

#define CIA_INSTANTIATE(K)                                                                                      \
  template nlohmann::json to_json<K>(const Polynomial<K>&);                                                    \
  template Polynomial<K> polynomial_from_json<K>(const nlohmann::json&, const Ring&, const FieldDesc&,         \
                                                 const std::string&);                                          \
  template nlohmann::json to_json<K>(const Ideal<K>&);                                                         \
  template Ideal<K> ideal_from_json<K>(const nlohmann::json&);                                                 \
  template nlohmann::json to_json<K>(const GroebnerBasis<K>&, int, int, const std::string&);                   \
  template GroebnerBasis<K> basis_from_json<K>(const nlohmann::json&);                                         \
  template std::string content_hash<K>(const Ideal<K>&, const std::string&);                                   \
  template std::filesystem::path save_basis_cache<K>(const std::filesystem::path&, const Ideal<K>&,            \
                                                     const GroebnerBasis<K>&);                                 \
  template std::optional<GroebnerBasis<K>> load_basis_cache<K>(const std::filesystem::path&, const Ideal<K>&);

CIA_INSTANTIATE(Rational)
CIA_INSTANTIATE(ModP)

}  // namespace cia
