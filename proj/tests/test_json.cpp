#include <doctest.h>

#include "nakayama/json_io.hpp"
#include "support/helpers.hpp"

using namespace nakayama;

TEST_SUITE_BEGIN("json");

TEST_CASE("modules and resolutions") {
  const auto alg = testing::rad(3, 2);
  CHECK(json::modules(enumerate_indecomposables(alg)).dump() ==
        R"([{"a":1,"b":1},{"a":1,"b":2},{"a":2,"b":2},{"a":2,"b":3},{"a":3,"b":3}])");
  CHECK(json::resolution(projective_resolution(alg, {1, 1})).dump() == "[[1,2],[2,3],[3,3]]");
}

TEST_CASE("hom and ext") {
  CHECK(json::hom(1).dump() == R"({"dim":1,"degree":0})");
  CHECK(json::hom(0).dump() == R"({"dim":0,"degree":null})");
  CHECK(json::ext(3).dump() == R"({"dim":1,"degree":3})");
  CHECK(json::ext(std::nullopt).dump() == R"({"dim":0,"degree":null})");
}

TEST_CASE("report key order") {
  const auto j = json::report(verify(testing::auslander(2), true));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"algebra", "ind_count", "ind_squared", "hom_total",
                                         "ext_total", "exceptional_pairs", "formulas",
                                         "oracle_exceptional_pairs", "oracle_match",
                                         "all_match"});
  CHECK(j["exceptional_pairs"] == 12);
  const auto& first = j["formulas"][0];
  CHECK(first["id"] == "EP_LINEAR");
  CHECK(first["match"].is_null());
  CHECK(first["formula_value"].is_null());
}

TEST_CASE("table") {
  const auto j = json::table(build_table(TableKind::ep, 4));
  CHECK(j.dump() ==
        R"({"kind":"EP","n_max":4,"cells":[{"n":3,"m":2,"value":12},{"n":4,"m":2,"value":35},{"n":4,"m":3,"value":41}]})");
}

TEST_SUITE_END();
