#include <doctest.h>

#include "nakayama/algebra.hpp"
#include "nakayama/error.hpp"
#include "support/helpers.hpp"

using namespace nakayama;
using testing::algebra;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::internal_inconsistency;
}

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("build_algebra validates and computes caps") {
  const auto alg = algebra(3, {{1, 2}});
  CHECK(alg.k() == 1);
  CHECK(alg.cap(1) == 2);
  CHECK(alg.cap(2) == 3);
  CHECK(alg.cap(3) == 3);

  CHECK(error_of([] { algebra(4, {{2, 4}}); }) == Errc::relation_out_of_range);
  CHECK(error_of([] { algebra(4, {{0, 2}}); }) == Errc::relation_out_of_range);
  CHECK(error_of([] { algebra(4, {{1, 1}}); }) == Errc::relation_too_short);
  CHECK(error_of([] { algebra(7, {{1, 4}, {2, 2}}); }) == Errc::non_minimal_set);
  CHECK(error_of([] { algebra(0); }) == Errc::precondition_violated);
}

TEST_CASE("auto_normalize drops implied relations") {
  const std::vector<Relation> rels{{1, 4}, {2, 2}};
  const auto alg = build_algebra(7, rels, true);
  REQUIRE(alg.relations().size() == 1);
  CHECK(alg.relations()[0] == Relation{2, 2});
  // The path 1 -> 5 passes through the zero path 2 -> 4.
  CHECK(alg.cap(1) == 3);
}

TEST_CASE("minimal but unsorted input is accepted in sorted form") {
  const auto alg = algebra(6, {{3, 2}, {1, 2}});
  CHECK(alg.relations() == std::vector<Relation>{{1, 2}, {3, 2}});
}

TEST_CASE("normalize_relations") {
  CHECK(normalize_relations({}).empty());
  const std::vector<Relation> rad2{{1, 2}, {2, 2}, {3, 2}};
  CHECK(normalize_relations(rad2) == rad2);
  const std::vector<Relation> nested{{1, 4}, {2, 2}};
  CHECK(normalize_relations(nested) == std::vector<Relation>{{2, 2}});
  const std::vector<Relation> dup{{1, 2}, {1, 2}};
  CHECK(error_of([&] { normalize_relations(dup); }) == Errc::duplicate_relation);
}

TEST_CASE("cap") {
  CHECK(testing::linear(5).cap(2) == 5);
  CHECK(testing::rad(4, 2).cap(1) == 2);
  CHECK(testing::single(4, 1, 3).cap(1) == 3);
  CHECK(error_of([] { testing::linear(3).cap(4); }) == Errc::vertex_out_of_range);
  CHECK(error_of([] { testing::linear(3).cap(0); }) == Errc::vertex_out_of_range);
}

TEST_CASE("projective, injective and simple modules") {
  const auto lin = testing::linear(5);
  CHECK(projective_of(lin, 2) == IntervalModule{2, 5});
  CHECK(injective_of(lin, 3) == IntervalModule{1, 3});
  CHECK(injective_of(testing::rad(4, 2), 3) == IntervalModule{2, 3});
  for (int v = 1; v <= 5; ++v) CHECK(simple_of(lin, v) == IntervalModule{v, v});
  CHECK(error_of([&] { injective_of(lin, 6); }) == Errc::vertex_out_of_range);
}

TEST_CASE("presets") {
  CHECK(testing::rad(5, 2).relations() == std::vector<Relation>{{1, 2}, {2, 2}, {3, 2}});
  const auto a2 = testing::auslander(2);
  CHECK(a2.n() == 3);
  CHECK(a2.relations() == std::vector<Relation>{{1, 2}});
  const auto a4 = testing::auslander(4);
  CHECK(a4.n() == 7);
  CHECK(a4.relations() == std::vector<Relation>{{1, 2}, {3, 2}, {5, 2}});
  const auto l1 = testing::linear(1);
  CHECK(l1.n() == 1);
  CHECK(l1.k() == 0);

  CHECK(error_of([] { preset(presets::RadPower{4, 4}); }) == Errc::invalid_preset_params);
  CHECK(error_of([] { preset(presets::RadPower{4, 1}); }) == Errc::invalid_preset_params);
  CHECK(error_of([] { preset(presets::Auslander{1}); }) == Errc::invalid_preset_params);
  CHECK(error_of([] { preset(presets::Single{5, 3, 3}); }) == Errc::invalid_preset_params);
  CHECK(error_of([] { preset(presets::Linear{0}); }) == Errc::invalid_preset_params);
}

TEST_CASE("block boundaries and overhangs follow the conventions") {
  const auto alg = algebra(7, {{2, 3}, {5, 2}});
  CHECK(alg.boundary(0) == 0);
  CHECK(alg.boundary(1) == 2);
  CHECK(alg.boundary(2) == 5);
  CHECK(alg.boundary(3) == 7);
  CHECK(alg.overhang(0) == 0);
  CHECK(alg.overhang(1) == 2);
  CHECK(alg.overhang(2) == 1);
  CHECK(alg.overhang(3) == 0);
  CHECK(error_of([&] { alg.boundary(4); }) == Errc::precondition_violated);
}

TEST_CASE("corpus sizes are Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 1; n <= 10; ++n) {
    CHECK(all_algebras(n).size() == static_cast<std::size_t>(catalan[n - 1]));
  }
}

TEST_CASE("overlap-free detection") {
  CHECK(is_overlap_free(testing::linear(4)));
  CHECK(is_overlap_free(algebra(7, {{1, 2}, {3, 3}})));
  CHECK_FALSE(is_overlap_free(algebra(7, {{1, 3}, {2, 3}})));
  CHECK_FALSE(is_overlap_free(testing::rad(5, 2)));
  CHECK(is_overlap_free(testing::auslander(4)));
}

TEST_CASE("describe") {
  CHECK(describe(testing::linear(3)) == "n=3");
  CHECK(describe(algebra(7, {{1, 2}, {4, 3}})) == "n=7; rel=1:2,4:3");
}

TEST_SUITE_END();
