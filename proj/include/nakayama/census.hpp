#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// H: ordered pairs (M, N) of indecomposables with Hom(M, N) != 0.
std::int64_t hom_total(const NakayamaAlgebra& alg);
/// E: ordered pairs (M, N) with Ext^i(M, N) != 0 for some i >= 1.
std::int64_t ext_total(const NakayamaAlgebra& alg);
/// |Ind|^2 - H - E. Hom-pairs and Ext-pairs are disjoint, so this counts the
/// pairs with Hom(N, M) = 0 and every Ext^i(N, M) = 0.
std::int64_t exceptional_pairs(const NakayamaAlgebra& alg);

struct Census {
  std::int64_t ind_count = 0;
  std::int64_t ind_squared = 0;
  std::int64_t hom_total = 0;
  std::int64_t ext_total = 0;
  std::int64_t exceptional_pairs = 0;
};

Census census(const NakayamaAlgebra& alg);

enum class FormulaId {
  ep_linear,
  h_linear,
  e_linear,
  h_overlap_free,
  e_overlap_free,
  ep_overlap_free,
  ep_single,
  ind_rad_k,
  h_rad2,
  e_rad2,
  ep_rad2,
  ind_auslander,
  h_auslander,
  e_auslander,
  ep_auslander,
};

inline constexpr FormulaId kAllFormulas[] = {
    FormulaId::ep_linear,      FormulaId::h_linear,       FormulaId::e_linear,
    FormulaId::h_overlap_free, FormulaId::e_overlap_free, FormulaId::ep_overlap_free,
    FormulaId::ep_single,      FormulaId::ind_rad_k,      FormulaId::h_rad2,
    FormulaId::e_rad2,         FormulaId::ep_rad2,        FormulaId::ind_auslander,
    FormulaId::h_auslander,    FormulaId::e_auslander,    FormulaId::ep_auslander,
};

std::string_view to_string(FormulaId id) noexcept;

/// Which census quantity a formula predicts.
enum class Quantity { ind_count, hom_total, ext_total, exceptional_pairs };
Quantity quantity_of(FormulaId id) noexcept;

/// Parameters of a closed formula. Which fields matter depends on the id:
///   *_LINEAR, *_RAD2: n;  EP_SINGLE: n and m (arrows of the relation at 1);
///   IND_RAD_K: n and k;   *_AUSLANDER: m;  *_OVERLAP_FREE: n and relations.
struct FormulaArgs {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<Relation> relations;
};

/// Exact value of the closed formula. Throws not_applicable if the arguments
/// fall outside the formula's family and internal_inconsistency if a
/// division is not exact.
std::int64_t closed_formula(FormulaId id, const FormulaArgs& args);

/// Arguments under which `alg` belongs to the formula's family, decided from
/// the normalized relation list alone; nullopt if it does not.
std::optional<FormulaArgs> formula_args(FormulaId id, const NakayamaAlgebra& alg);

struct FormulaCheck {
  FormulaId id{};
  bool applicable = false;
  std::optional<std::int64_t> formula_value;
  std::int64_t engine_value = 0;
  bool match = true;  // false only for an applicable formula that disagrees
};

struct CensusReport {
  std::string algebra;  // text form
  Census counts;
  std::vector<FormulaCheck> formulas;
  std::optional<std::int64_t> oracle_exceptional_pairs;

  bool oracle_matches() const noexcept {
    return !oracle_exceptional_pairs || *oracle_exceptional_pairs == counts.exceptional_pairs;
  }
  bool all_match() const noexcept;
};

/// Engine counts, every applicable closed formula, and optionally the
/// brute-force exceptional-pair count. Mismatches are reported, not thrown.
CensusReport verify(const NakayamaAlgebra& alg, bool with_oracle = false);

}  // namespace nakayama
