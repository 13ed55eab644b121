#ifndef CIA_JSON_IO_HPP
#define CIA_JSON_IO_HPP

// JSON forms of polynomials, hypergraphs, ideals and Groebner bases, and the
// on-disk basis cache. Every reader reports malformed input with a path to the
// offending entry, e.g. "generators[3].terms[0].m[1]".

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cia/ideals.hpp"

namespace cia {

inline constexpr const char* kSchema = "cia/1";

template <class K>
nlohmann::json to_json(const Polynomial<K>& f);
/// Variable indices are (row-1)*kl + (col-1) in a ring without aux variables.
template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j, const Ring& ring, const FieldDesc& field,
                                   const std::string& where = "polynomial");

nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

template <class K>
nlohmann::json to_json(const Ideal<K>& I);
/// The field is read from the document; it must be QQ for Rational and GF(p)
/// for ModP.
template <class K>
Ideal<K> ideal_from_json(const nlohmann::json& j);

/// Field recorded in an ideal or basis document.
FieldDesc field_of_document(const nlohmann::json& j);

template <class K>
nlohmann::json to_json(const GroebnerBasis<K>& gb, int k, int l, const std::string& hash = {});
template <class K>
GroebnerBasis<K> basis_from_json(const nlohmann::json& j);

/// FNV-1a over the canonical generators, the order and the field, as 16 hex digits.
template <class K>
std::string content_hash(const Ideal<K>& I, const std::string& order = "lex");

/// Cache files are <dir>/<hash>.json. Loading verifies the stored hash.
template <class K>
std::filesystem::path save_basis_cache(const std::filesystem::path& dir, const Ideal<K>& I, const GroebnerBasis<K>& gb);
template <class K>
std::optional<GroebnerBasis<K>> load_basis_cache(const std::filesystem::path& dir, const Ideal<K>& I);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace cia

#endif  // CIA_JSON_IO_HPP
