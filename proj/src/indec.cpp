#include "nakayama/indec.hpp"

#include "nakayama/checked.hpp"
#include "nakayama/error.hpp"

namespace nakayama {

std::span<const IntervalModule> IndexedModuleSet::block(int l) const {
  if (l < 1 || l > vertex_count()) {
    throw Error(Errc::vertex_out_of_range, "no block for vertex " + std::to_string(l));
  }
  const auto first = offsets_[static_cast<std::size_t>(l - 1)];
  const auto last = offsets_[static_cast<std::size_t>(l)];
  return std::span(modules_).subspan(first, last - first);
}

IndexedModuleSet enumerate_indecomposables(const NakayamaAlgebra& alg) {
  IndexedModuleSet set;
  set.offsets_.push_back(0);
  for (int a = 1; a <= alg.n(); ++a) {
    for (int b = a; b <= alg.cap(a); ++b) set.modules_.push_back({a, b});
    set.offsets_.push_back(set.modules_.size());
  }
  return set;
}

std::int64_t count_indecomposables_formula(const NakayamaAlgebra& alg) {
  using namespace checked;
  std::int64_t total = 0;
  for (int l = 1; l <= alg.k() + 1; ++l) {
    const std::int64_t width = alg.boundary(l) - alg.boundary(l - 1);
    total = add(total, mul(width, alg.boundary(l) + alg.overhang(l)));
  }
  const std::int64_t n = alg.n();
  return sub(total, mul(n, n - 1) / 2);
}

std::vector<IntervalModule> block_of(const NakayamaAlgebra& alg, int l) {
  std::vector<IntervalModule> out;
  for (int b = l; b <= alg.cap(l); ++b) out.push_back({l, b});
  return out;
}

}  // namespace nakayama
