#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/indec.hpp"

namespace nakayama {

/// Minimal projective resolution 0 -> P_m -> ... -> P_0 -> M -> 0 of an
/// interval module. Every term is an indecomposable projective [a_t, cap(a_t)];
/// the maps are the canonical interval maps and are left implicit.
struct ProjectiveResolution {
  IntervalModule module;
  std::vector<IntervalModule> terms;

  /// Projective dimension m.
  int length() const noexcept { return static_cast<int>(terms.size()) - 1; }
  const IntervalModule& operator[](int t) const { return terms.at(static_cast<std::size_t>(t)); }
};

/// Degree i >= 1 with one-dimensional Ext^i, or nullopt if Ext vanishes in
/// every positive degree. At most one such degree exists.
using ExtProfile = std::optional<int>;

/// dim Hom(M, N) for M = [a,b], N = [c,d]: 1 iff c <= a <= d <= b.
int hom_dim(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n);

/// Number of indecomposables M with Hom(M, N) != 0.
std::int64_t hom_in_count(const NakayamaAlgebra& alg, const IntervalModule& n);

ProjectiveResolution projective_resolution(const NakayamaAlgebra& alg, const IntervalModule& m);

ExtProfile ext_nonzero_degree(const NakayamaAlgebra& alg, const IntervalModule& m,
                              const IntervalModule& n);
/// Same window test against a precomputed resolution of M; N is not validated.
ExtProfile ext_nonzero_degree(const ProjectiveResolution& res, const IntervalModule& n);

/// Number of indecomposables N with Ext^i(M, N) != 0 for some i >= 1.
std::int64_t ext_out_count(const NakayamaAlgebra& alg, const IntervalModule& m);
std::int64_t ext_out_count(const ProjectiveResolution& res);

/// E^i for i = 1..m, each obtained from interval_count_three / _two on the
/// consecutive resolution terms. Sums to ext_out_count.
std::vector<std::int64_t> ext_counts_by_degree(const ProjectiveResolution& res);

/// Intervals [c,d] with Hom([a1,b1],-) = 0, Hom([a2,b2],-) != 0 and
/// Hom([a3,b3],-) = 0, given a1 <= a2 <= b1 <= a3 <= b2 <= b3:
/// a1 (a2 - (b1 + 1)) + a2 (a3 - a2). Only a true count on resolution triples,
/// where a3 = b1 + 1.
std::int64_t interval_count_three(std::int64_t a1, std::int64_t b1, std::int64_t a2,
                                  std::int64_t b2, std::int64_t a3, std::int64_t b3);

/// Intervals [c,d] with Hom([a1,b1],-) = 0 and Hom([a2,b1],-) != 0:
/// (a2 - a1)(b1 + 1 - a2). Requires a1 <= a2 <= b1 + 1.
std::int64_t interval_count_two(std::int64_t a1, std::int64_t b1, std::int64_t a2);

/// Resolutions of every indecomposable of one algebra, built eagerly in the
/// constructor and read-only afterwards.
class ResolutionMemo {
 public:
  explicit ResolutionMemo(const NakayamaAlgebra& alg);

  const NakayamaAlgebra& algebra() const noexcept { return alg_; }
  const IndexedModuleSet& modules() const noexcept { return modules_; }
  const ProjectiveResolution& operator[](const IntervalModule& m) const;

 private:
  NakayamaAlgebra alg_;
  IndexedModuleSet modules_;
  std::vector<std::size_t> block_offset_;
  std::vector<ProjectiveResolution> resolutions_;
};

}  // namespace nakayama
