#include <doctest.h>

#include "quiltforge/catalog.hpp"

using namespace quiltforge;

TEST_SUITE("catalog") {

TEST_CASE("io round trips") {
  auto t = InvolutionTriple::parse("(1 2)(3 4)", "(2 3)", "", 4);
  CHECK(triple_from_json(to_json(t)) == t);
  CHECK(triple_from_json(Json::parse(to_json(t).dump())) == t);
  TriplePair p{t, t.with_roles({2, 1, 0})};
  CHECK(pair_from_json(to_json(p)) == p);
  RationalMatrix m(2, 3);
  m(0, 1) = Rational(-3, 4);
  m(1, 2) = 5;
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(triple_from_json(Json{{"n", 3}, {"a", "(1 2)"}}), Error);
  CHECK_THROWS_AS(triple_from_json(Json{{"n", -1}, {"a", ""}, {"b", ""}, {"c", ""}}), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1/1"], ["1/1", "0/1"]])")), Error);
  CHECK(file_stem("13a(2)") == "13a-2");
}

TEST_CASE("size 7 catalog") {
  CatalogConfig config;
  config.sizes = {7};
  Catalog cat = run_catalog(config);
  CHECK(cat.ok());
  REQUIRE(cat.quilts.size() == 1);
  CHECK(cat.quilts[0].size() == 3);
  CHECK(cat.json["classCount"] == 3);
  CHECK(cat.svgs.size() == 6);
  CHECK(cat.svgs.count("svg/7-1-left.svg"));
  for (const auto& c : cat.json["quilts"][0]["classes"]) {
    CHECK(c["left"]["treelike"] == true);
    CHECK(c["right"]["treelike"] == true);
    for (const auto& r : c["spectral"]) CHECK(r["passed"] == true);
    for (const auto& [bc, residual] : c["transplantResidual"].items()) CHECK(residual == "0/1");
  }

  Json loaded = Json::parse(cat.json.dump());
  CHECK(reverify_catalog(loaded).empty());

  Json tampered = loaded;
  tampered["quilts"][0]["classes"][1]["intertwiner"][0][0] = "5/1";
  auto f = reverify_catalog(tampered);
  REQUIRE(f.size() == 1);
  CHECK(f[0].label == "7(2)");

  Json isomorphic = loaded;
  auto& cls = isomorphic["quilts"][0]["classes"][0];
  cls["right"] = cls["left"];
  CHECK_FALSE(reverify_catalog(isomorphic).empty());

  Json duplicate = loaded;
  duplicate["quilts"][0]["classes"][2]["label"] = "7(1)";
  CHECK_FALSE(reverify_catalog(duplicate).empty());

  CHECK_THROWS_AS(reverify_catalog(Json::object()), Error);
}

TEST_CASE("sizes 7, 13 and 15 give sixteen classes") {
  CatalogConfig config;
  config.sizes = {7, 13, 15};
  config.spectral = false;
  config.render = false;
  Catalog cat = run_catalog(config);
  CHECK(cat.ok());
  CHECK(cat.json["classCount"] == 16);
  for (const auto& q : cat.json["quilts"])
    for (const auto& c : q["classes"]) {
      CHECK(c["left"]["treelike"] == true);
      CHECK(c["right"]["treelike"] == true);
    }
}

}  // TEST_SUITE
