#include <doctest.h>

#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/oracle.hpp"
#include "support/helpers.hpp"

using namespace nakayama;
namespace o = nakayama::oracle;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("to_matrix_rep") {
  const auto a = o::to_matrix_rep(testing::linear(3), {1, 2});
  CHECK(a.dims == std::vector<int>{1, 1, 0});
  CHECK(a.arrow(1)(0, 0) == 1);
  CHECK(a.arrow(2).rows() == 0);

  CHECK(o::to_matrix_rep(testing::rad(4, 2), {2, 3}).dims == std::vector<int>{0, 1, 1, 0});

  const auto s = o::to_matrix_rep(testing::linear(5), {3, 3});
  CHECK(s.dims == std::vector<int>{0, 0, 1, 0, 0});
  for (int v = 1; v < 5; ++v) CHECK(s.arrow(v).is_zero());

  CHECK_THROWS_AS(o::to_matrix_rep(testing::rad(4, 2), {1, 3}), Error);
}

TEST_CASE("relations and morphisms are checked") {
  const auto rad3 = testing::rad(3, 2);
  const auto long_rep = o::to_matrix_rep(testing::linear(3), {1, 3});
  CHECK_FALSE(o::satisfies_relations(long_rep, rad3));
  CHECK(o::satisfies_relations(long_rep, testing::linear(3)));

  const auto lin = testing::linear(3);
  const auto p = o::to_matrix_rep(lin, {1, 3});
  const auto q = o::to_matrix_rep(lin, {1, 2});
  const auto cover = o::projective_cover(lin, q);
  CHECK(cover.tops == std::vector<int>{1});
  CHECK(o::is_morphism(cover.cover, cover.projective, q));
  // [2,3] is the radical of [1,3]; nothing nonzero goes back.
  const auto sub = o::to_matrix_rep(lin, {2, 3});
  CHECK(o::hom_space(sub, p).dim() == 1);
  CHECK(o::hom_space(p, sub).dim() == 0);
}

TEST_CASE("indecomposable projectives come from the relation list") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& alg : all_algebras(n)) {
      for (int v = 1; v <= n; ++v) {
        const auto p = o::indecomposable_projective(alg, v);
        REQUIRE(p.dims == o::to_matrix_rep(alg, projective_of(alg, v)).dims);
        REQUIRE(o::satisfies_relations(p, alg));
      }
    }
  }
}

TEST_CASE("hom_dim_oracle") {
  const auto lin = testing::linear(3);
  CHECK(o::hom_dim_oracle(lin, {1, 3}, {1, 3}) == 1);
  CHECK(o::hom_dim_oracle(lin, {1, 2}, {2, 3}) == 0);
  CHECK(o::hom_dim_oracle(lin, {2, 3}, {1, 2}) == 1);
}

TEST_CASE("ext_dim_oracle") {
  CHECK(o::ext_dim_oracle(testing::linear(3), {1, 1}, {2, 3}, 1) == 1);
  const auto rad4 = testing::rad(4, 2);
  CHECK(o::ext_dim_oracle(rad4, {1, 1}, {2, 3}, 1) == 0);
  CHECK(o::ext_dim_oracle(rad4, {1, 1}, {4, 4}, 3) == 1);
  const auto dims = o::ext_dims_oracle(rad4, {1, 1}, {2, 3});
  CHECK(dims == std::vector<int>{0, 0, 0, 0, 0});
  for (const auto& n : enumerate_indecomposables(rad4).modules()) {
    for (int i = 1; i <= 4; ++i) CHECK(o::ext_dim_oracle(rad4, {3, 4}, n, i) == 0);
  }
  CHECK_THROWS_AS(o::ext_dim_oracle(rad4, {1, 1}, {2, 3}, 0), Error);
}

TEST_CASE("resolutions are exact complexes of projectives") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& alg : all_algebras(n)) {
      for (const auto& m : enumerate_indecomposables(alg).modules()) {
        const auto rep = o::to_matrix_rep(alg, m);
        const auto res = o::resolve(alg, rep);
        const auto fast = projective_resolution(alg, m);
        REQUIRE(res.length() == fast.length());
        for (int t = 0; t <= res.length(); ++t) {
          REQUIRE(res.tops[static_cast<std::size_t>(t)] == std::vector<int>{fast[t].a});
          REQUIRE(o::satisfies_relations(res.terms[static_cast<std::size_t>(t)], alg));
        }
        REQUIRE(o::is_morphism(res.augmentation, res.terms[0], rep));
        for (int t = 1; t <= res.length(); ++t) {
          const auto& f = res.differentials[static_cast<std::size_t>(t - 1)];
          REQUIRE(o::is_morphism(f, res.terms[static_cast<std::size_t>(t)],
                                 res.terms[static_cast<std::size_t>(t - 1)]));
          const auto& before = t == 1 ? res.augmentation : res.differentials[static_cast<std::size_t>(t - 2)];
          for (const auto& c : o::compose(before, f).components) REQUIRE(c.is_zero());
        }

        // The induced Hom complex is a complex as well.
        const auto cx = o::hom_complex(res, rep);
        for (std::size_t t = 1; t < cx.differentials.size(); ++t) {
          REQUIRE((cx.differentials[t] * cx.differentials[t - 1]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("ep_count_oracle") {
  CHECK(o::ep_count_oracle(testing::linear(3)) == 16);
  CHECK(o::ep_count_oracle(testing::single(3, 1, 2)) == 12);
  CHECK(o::ep_count_oracle(testing::single(7, 4, 2)) == 260);
  CHECK(o::ep_count_oracle(testing::linear(1)) == 0);
}

TEST_SUITE_END();
