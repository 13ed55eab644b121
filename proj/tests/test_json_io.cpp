#include <doctest.h>

#include <filesystem>
#include <random>

#include "cia/groebner.hpp"
#include "cia/json_io.hpp"

using namespace cia;

namespace {

const FieldDesc QQ = FieldDesc::rationals();

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cia_test_" + name + "_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("polynomial round trip") {
  Ring r{3, 6};
  auto f = minor<Rational>(r, QQ, {1, 2, 3}, {1, 3, 5});
  f = f.scale(Rational(mpq_class(3, 7))) + Polynomial<Rational>::constant(r, QQ, -2);
  auto j = to_json(f);
  CHECK(polynomial_from_json<Rational>(j, r, QQ) == f);
  CHECK(to_json(polynomial_from_json<Rational>(j, r, QQ)).dump() == j.dump());

  auto F = FieldDesc::prime_field(32003);
  auto g = reduce_mod(f, F);
  CHECK(polynomial_from_json<ModP>(to_json(g), r, F) == g);
}

TEST_CASE("diagnostics name the offending entry") {
  Grid grid(2, 3);
  auto I = ideal_IS<Rational>(grid, 3, 2, {1, 4});
  auto j = to_json(I);
  j["generators"][3]["terms"][0]["m"][0][0] = 99;
  try {
    ideal_from_json<Rational>(j);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("generators[3].terms[0].m[0]") != std::string::npos);
    CHECK(msg.find("99") != std::string::npos);
  }
  auto wrong_field = to_json(I);
  wrong_field["field"] = "GF(7)";
  CHECK_THROWS_AS(ideal_from_json<Rational>(wrong_field), ParseError);
  auto no_schema = to_json(I);
  no_schema["schema"] = "cia/0";
  CHECK_THROWS_AS(ideal_from_json<Rational>(no_schema), ParseError);
}

TEST_CASE("ideal and basis round trips are exact") {
  Grid grid(2, 3);
  auto I = ideal_IS<Rational>(grid, 3, 2, {1, 4});
  auto j = to_json(I);
  auto back = ideal_from_json<Rational>(j);
  CHECK(back.canonical_generators() == I.canonical_generators());
  CHECK(to_json(back).dump() == j.dump());
  CHECK(field_of_document(j) == QQ);

  auto gb = basis_of(I);
  auto bj = to_json(*gb, 2, 3, content_hash(I));
  auto gb2 = basis_from_json<Rational>(bj);
  CHECK(gb2.elements == gb->elements);
  CHECK(to_json(gb2, 2, 3, content_hash(I)).dump() == bj.dump());
}

TEST_CASE("hypergraph documents") {
  auto h = hypergraph_from_json({{"n", 8}, {"edges", {"1", "4", "56", "57", {5, 8}, "67", "68", "78"}}});
  CHECK(h.size() == 8);
  CHECK(h.to_string() == "{1, 4, 56, 57, 58, 67, 68, 78}");
  CHECK(hypergraph_from_json(to_json(h)) == h);
  CHECK_THROWS_AS(hypergraph_from_json({{"n", 8}, {"edges", {"19"}}}), Error);
}

TEST_CASE("content hash and basis cache") {
  Grid grid(2, 3);
  auto a = ideal_IS<Rational>(grid, 3, 2, {1, 4});
  auto b = ideal_IS<Rational>(grid, 3, 2, {1, 6});
  CHECK(content_hash(a) == content_hash(ideal_IS<Rational>(grid, 3, 2, {1, 4})));
  CHECK(content_hash(a) != content_hash(b));
  CHECK(content_hash(a).size() == 16);

  auto dir = scratch_dir("cache");
  CHECK_FALSE(load_basis_cache(dir, a).has_value());
  auto gb = basis_of(a);
  auto path = save_basis_cache(dir, a, *gb);
  CHECK(std::filesystem::exists(path));
  auto loaded = load_basis_cache(dir, a);
  REQUIRE(loaded.has_value());
  CHECK(loaded->elements == gb->elements);
  CHECK_FALSE(load_basis_cache(dir, b).has_value());
  std::filesystem::remove_all(dir);
}
