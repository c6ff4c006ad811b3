#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// All indecomposables in lexicographic order, with the partition by top
/// vertex: the block of l is {[l, l], ..., [l, cap(l)]}.
class IndexedModuleSet {
 public:
  const std::vector<IntervalModule>& modules() const& noexcept { return modules_; }
  // By value on temporaries, so `for (m : enumerate_indecomposables(a).modules())` is safe.
  std::vector<IntervalModule> modules() && { return std::move(modules_); }
  std::size_t size() const noexcept { return modules_.size(); }

  /// Modules with top vertex l.
  std::span<const IntervalModule> block(int l) const;
  int vertex_count() const noexcept { return static_cast<int>(offsets_.size()) - 1; }

 private:
  friend IndexedModuleSet enumerate_indecomposables(const NakayamaAlgebra& alg);

  std::vector<IntervalModule> modules_;
  std::vector<std::size_t> offsets_;  // block l spans [offsets_[l-1], offsets_[l])
};

IndexedModuleSet enumerate_indecomposables(const NakayamaAlgebra& alg);

/// Closed count sum_{l=1}^{k+1} (i_l - i_{l-1})(i_l + p_l) - n(n-1)/2 over the
/// block boundaries i_l and overhangs p_l.
std::int64_t count_indecomposables_formula(const NakayamaAlgebra& alg);

std::vector<IntervalModule> block_of(const NakayamaAlgebra& alg, int l);

}  // namespace nakayama
