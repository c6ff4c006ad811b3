#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nakayama/interval.hpp"

namespace nakayama {

/// One monomial zero relation: the composite of `arrows` consecutive arrows
/// starting at vertex `start`, i.e. alpha_start ... alpha_{start+arrows-1}.
struct Relation {
  int start = 0;
  int arrows = 0;

  /// Last vertex reached by a nonzero path leaving `start`.
  constexpr int cap() const noexcept { return start + arrows - 1; }

  friend constexpr auto operator<=>(const Relation&, const Relation&) = default;
};

/// Throws relation_too_short / relation_out_of_range for an inadmissible
/// relation of an A_n quiver.
void check_admissible(const Relation& r, int n);

/// Reduces a relation list to its minimal generating set: a relation is
/// dropped iff another relation's arrow span lies inside its own. The result
/// is sorted with strictly increasing starts and strictly increasing caps.
std::vector<Relation> normalize_relations(std::span<const Relation> relations);

/// Linearly oriented A_n modulo monomial relations. Immutable; construct
/// through build_algebra() or preset().
class NakayamaAlgebra {
 public:
  int n() const noexcept { return n_; }
  /// Number of relations.
  int k() const noexcept { return static_cast<int>(relations_.size()); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  /// Largest b such that the path v -> b is nonzero.
  int cap(int v) const;
  /// Smallest c with cap(c) >= v; the top of the injective hull of S(v).
  int soc_start(int v) const;

  /// Block boundaries with the usual conventions: boundary(0) = 0,
  /// boundary(l) = start of relation l (1 <= l <= k), boundary(k+1) = n.
  int boundary(int l) const;
  /// Relation overhang arrows - 1 for 1 <= l <= k, and 0 for l = 0, k + 1.
  int overhang(int l) const;

  bool is_module(const IntervalModule& m) const noexcept;
  /// Throws not_a_module unless `m` is an indecomposable of this algebra.
  void require_module(const IntervalModule& m) const;
  void require_vertex(int v) const;

  friend bool operator==(const NakayamaAlgebra&, const NakayamaAlgebra&) = default;

 private:
  friend NakayamaAlgebra build_algebra(int n, std::span<const Relation> relations,
                                       bool auto_normalize);
  NakayamaAlgebra(int n, std::vector<Relation> relations);

  int n_ = 0;
  std::vector<Relation> relations_;
  std::vector<int> caps_;  // caps_[v - 1]
};

/// Validates and builds an algebra. Without auto_normalize a non-minimal set
/// is rejected with non_minimal_set; a minimal but unsorted list is sorted.
NakayamaAlgebra build_algebra(int n, std::span<const Relation> relations,
                              bool auto_normalize = false);

inline int cap(const NakayamaAlgebra& alg, int v) { return alg.cap(v); }

IntervalModule projective_of(const NakayamaAlgebra& alg, int v);
IntervalModule injective_of(const NakayamaAlgebra& alg, int v);
IntervalModule simple_of(const NakayamaAlgebra& alg, int v);

namespace presets {
struct Linear {
  int n = 0;
};
/// A single relation of `length` arrows starting at `start`.
struct Single {
  int n = 0;
  int start = 1;
  int length = 2;
};
/// All paths of length k are zero.
struct RadPower {
  int n = 0;
  int k = 2;
};
/// Auslander algebra of the radical-square-zero A_m: 2m - 1 vertices,
/// relations a_{2j-1} a_{2j} = 0.
struct Auslander {
  int m = 2;
};
}  // namespace presets

using AlgebraPreset =
    std::variant<presets::Linear, presets::Single, presets::RadPower, presets::Auslander>;

NakayamaAlgebra preset(const AlgebraPreset& p);

/// Every algebra on n vertices with a minimal relation set (there are
/// Catalan(n - 1) of them), in a deterministic order.
std::vector<NakayamaAlgebra> all_algebras(int n);

/// No arrow occurs in two relations.
bool is_overlap_free(const NakayamaAlgebra& alg);

std::string describe(const NakayamaAlgebra& alg);

}  // namespace nakayama
