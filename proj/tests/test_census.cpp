#include <doctest.h>

#include <algorithm>

#include "nakayama/census.hpp"
#include "nakayama/error.hpp"
#include "nakayama/oracle.hpp"
#include "support/helpers.hpp"

using namespace nakayama;

namespace {

const FormulaCheck& entry(const CensusReport& r, FormulaId id) {
  return *std::find_if(r.formulas.begin(), r.formulas.end(),
                       [&](const FormulaCheck& f) { return f.id == id; });
}

FormulaArgs args_n(int n) { return {n, 0, 0, {}}; }
FormulaArgs args_nm(int n, int m) { return {n, m, 0, {}}; }

}  // namespace

TEST_SUITE_BEGIN("census");

TEST_CASE("hom_total and ext_total") {
  CHECK(hom_total(testing::linear(5)) == 70);
  CHECK(ext_total(testing::linear(5)) == 35);
  CHECK(hom_total(testing::rad(5, 2)) == 20);
  // (n-1) + (n-2) + t_{n-3} = 10 at n = 5; the oracle agrees.
  CHECK(ext_total(testing::rad(5, 2)) == 10);
  CHECK(oracle::ep_count_oracle(testing::rad(5, 2)) == 9 * 9 - 20 - 10);
  CHECK(hom_total(testing::single(5, 1, 3)) == 51);
  CHECK(ext_total(testing::single(5, 1, 3)) == 25);
}

TEST_CASE("exceptional_pairs") {
  CHECK(exceptional_pairs(testing::linear(4)) == 50);
  CHECK(oracle::ep_count_oracle(testing::linear(4)) == 50);
  CHECK(exceptional_pairs(testing::single(7, 1, 2)) == 318);
  CHECK(exceptional_pairs(testing::auslander(2)) == 12);
}

TEST_CASE("closed formulas") {
  CHECK(closed_formula(FormulaId::ep_single, args_nm(9, 8)) == 1136);
  CHECK(closed_formula(FormulaId::ep_rad2, args_n(3)) == 12);
  CHECK(closed_formula(FormulaId::ep_auslander, args_nm(0, 3)) == 62);
  CHECK(oracle::ep_count_oracle(testing::auslander(3)) == 62);
  CHECK(closed_formula(FormulaId::h_auslander, args_nm(0, 2)) == 10);
  CHECK(closed_formula(FormulaId::e_auslander, args_nm(0, 2)) == 3);
  CHECK(closed_formula(FormulaId::ep_auslander, args_nm(0, 2)) == 12);
  CHECK(closed_formula(FormulaId::ind_auslander, args_nm(0, 4)) == 15);
  CHECK(closed_formula(FormulaId::ep_linear, args_n(3)) == 16);
  CHECK(closed_formula(FormulaId::h_linear, args_n(5)) == 70);
  CHECK(closed_formula(FormulaId::e_linear, args_n(5)) == 35);
  CHECK(closed_formula(FormulaId::ind_rad_k, {6, 0, 3, {}}) == 15);
  CHECK(closed_formula(FormulaId::h_rad2, args_n(5)) == 20);
  CHECK(closed_formula(FormulaId::e_rad2, args_n(5)) == 10);

  const FormulaArgs of{7, 0, 0, {{1, 2}, {4, 3}}};
  const auto alg = testing::algebra(7, {{1, 2}, {4, 3}});
  CHECK(closed_formula(FormulaId::h_overlap_free, of) == hom_total(alg));
  CHECK(closed_formula(FormulaId::e_overlap_free, of) == ext_total(alg));
  CHECK(closed_formula(FormulaId::ep_overlap_free, of) == exceptional_pairs(alg));
}

TEST_CASE("closed formulas reject arguments outside their family") {
  const auto code = [](FormulaId id, const FormulaArgs& a) {
    try {
      closed_formula(id, a);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal_inconsistency;
  };
  CHECK(code(FormulaId::ep_single, args_nm(5, 5)) == Errc::not_applicable);
  CHECK(code(FormulaId::ep_single, args_nm(5, 1)) == Errc::not_applicable);
  CHECK(code(FormulaId::ep_rad2, args_n(2)) == Errc::not_applicable);
  CHECK(code(FormulaId::ind_rad_k, {4, 0, 4, {}}) == Errc::not_applicable);
  CHECK(code(FormulaId::ep_auslander, args_nm(0, 1)) == Errc::not_applicable);
  CHECK(code(FormulaId::ep_linear, args_n(0)) == Errc::not_applicable);
  CHECK(code(FormulaId::h_overlap_free, {6, 0, 0, {{1, 3}, {2, 3}}}) == Errc::not_applicable);
  CHECK(code(FormulaId::h_overlap_free, {4, 0, 0, {{2, 4}}}) == Errc::not_applicable);
}

TEST_CASE("applicability is structural") {
  CHECK(formula_args(FormulaId::ep_linear, testing::linear(4)));
  CHECK_FALSE(formula_args(FormulaId::ep_linear, testing::single(4, 1, 2)));
  // A hand-entered rad^2 algebra is recognized.
  const auto hand = testing::algebra(5, {{1, 2}, {2, 2}, {3, 2}});
  CHECK(formula_args(FormulaId::ep_rad2, hand));
  CHECK(formula_args(FormulaId::ind_rad_k, hand)->k == 2);
  CHECK_FALSE(formula_args(FormulaId::ep_rad2, testing::algebra(5, {{1, 2}, {2, 2}})));
  CHECK(formula_args(FormulaId::ep_auslander, testing::algebra(5, {{1, 2}, {3, 2}}))->m == 3);
  CHECK_FALSE(formula_args(FormulaId::ep_auslander, testing::algebra(5, {{1, 2}, {2, 2}})));
  CHECK(formula_args(FormulaId::ep_single, testing::single(6, 1, 4))->m == 4);
  CHECK_FALSE(formula_args(FormulaId::ep_single, testing::single(6, 2, 2)));
  CHECK(formula_args(FormulaId::ep_overlap_free, testing::single(6, 2, 2)));
}

TEST_CASE("verify") {
  const auto r = verify(testing::single(4, 1, 3));
  CHECK(r.algebra == "n=4; rel=1:3");
  CHECK(r.counts.ind_squared == 81);
  CHECK(r.counts.hom_total == 28);
  CHECK(r.counts.ext_total == 12);
  CHECK(r.counts.exceptional_pairs == 41);
  CHECK(r.all_match());
  CHECK(entry(r, FormulaId::ep_single).applicable);
  CHECK_FALSE(entry(r, FormulaId::ep_linear).applicable);
  CHECK_FALSE(r.oracle_exceptional_pairs);

  const auto lin = verify(testing::linear(3), true);
  CHECK(lin.counts.exceptional_pairs == 16);
  CHECK(entry(lin, FormulaId::ep_linear).applicable);
  CHECK(entry(lin, FormulaId::ep_linear).match);
  CHECK(lin.oracle_exceptional_pairs == 16);

  const auto rk = verify(testing::rad(6, 3), true);
  CHECK(entry(rk, FormulaId::ind_rad_k).formula_value == 15);
  CHECK(entry(rk, FormulaId::ind_rad_k).match);
  for (const auto& f : rk.formulas) {
    if (quantity_of(f.id) == Quantity::exceptional_pairs) CHECK_FALSE(f.applicable);
  }
  CHECK(rk.oracle_exceptional_pairs == 136);
  CHECK(rk.counts.exceptional_pairs == 136);
  CHECK(rk.all_match());
}

TEST_CASE("|Ind|^2 = EP + H + E and the oracle agrees") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& alg : all_algebras(n)) {
      const auto c = census(alg);
      REQUIRE(c.ind_squared == c.exceptional_pairs + c.hom_total + c.ext_total);
      REQUIRE(oracle::ep_count_oracle(alg) == c.exceptional_pairs);
    }
  }
}

TEST_CASE("all_match reports any disagreement") {
  auto r = verify(testing::rad(4, 2));
  CHECK(r.all_match());
  auto broken = r;
  broken.formulas[static_cast<std::size_t>(FormulaId::ep_rad2)].match = false;
  CHECK_FALSE(broken.all_match());
  broken = r;
  broken.oracle_exceptional_pairs = r.counts.exceptional_pairs + 1;
  CHECK_FALSE(broken.oracle_matches());
  CHECK_FALSE(broken.all_match());
}

TEST_CASE("formula names") {
  CHECK(to_string(FormulaId::ep_overlap_free) == "EP_OVERLAP_FREE");
  CHECK(to_string(FormulaId::ind_rad_k) == "IND_RAD_K");
  CHECK(std::size(kAllFormulas) == 15);
}

TEST_SUITE_END();
