#include "nakayama/homology.hpp"

#include "nakayama/checked.hpp"
#include "nakayama/error.hpp"

namespace nakayama {

namespace {

bool maps_into(const IntervalModule& m, const IntervalModule& n) {
  return n.a <= m.a && m.a <= n.b && n.b <= m.b;
}

}  // namespace

int hom_dim(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n) {
  alg.require_module(m);
  alg.require_module(n);
  return maps_into(m, n) ? 1 : 0;
}

std::int64_t hom_in_count(const NakayamaAlgebra& alg, const IntervalModule& n) {
  alg.require_module(n);
  using namespace checked;
  std::int64_t caps = 0;
  for (int v = n.a; v <= n.b; ++v) caps = add(caps, alg.cap(v));
  return add(caps, mul(n.length(), 1 - n.b));
}

ProjectiveResolution projective_resolution(const NakayamaAlgebra& alg, const IntervalModule& m) {
  alg.require_module(m);
  ProjectiveResolution res{m, {{m.a, alg.cap(m.a)}}};
  if (m.b == alg.cap(m.a)) return res;

  // Each syzygy [x, y] is covered by [x, cap(x)], leaving [y + 1, cap(x)].
  int x = m.b + 1;
  int y = alg.cap(m.a);
  for (int guard = 0; guard <= alg.n(); ++guard) {
    const int top = alg.cap(x);
    res.terms.push_back({x, top});
    if (top == y) return res;
    x = y + 1;
    y = top;
  }
  throw Error(Errc::internal_inconsistency, "resolution of " + to_string(m) + " did not terminate");
}

ExtProfile ext_nonzero_degree(const ProjectiveResolution& res, const IntervalModule& n) {
  const int m = res.length();
  for (int i = 1; i <= m; ++i) {
    if (!maps_into(res[i], n) || maps_into(res[i - 1], n)) continue;
    if (i == m || !maps_into(res[i + 1], n)) return i;
  }
  return std::nullopt;
}

ExtProfile ext_nonzero_degree(const NakayamaAlgebra& alg, const IntervalModule& m,
                              const IntervalModule& n) {
  alg.require_module(n);
  return ext_nonzero_degree(projective_resolution(alg, m), n);
}

std::int64_t ext_out_count(const ProjectiveResolution& res) {
  using namespace checked;
  const int m = res.length();
  if (m == 0) return 0;
  const std::int64_t a = res.module.a;
  const std::int64_t b = res.module.b;
  std::int64_t total = sub(mul(res[m].a, res[m].b + 1), mul(a, b + 1));
  for (int i = 1; i <= m; ++i) {
    const std::int64_t ai = res[i].a;
    const std::int64_t prev_a = res[i - 1].a;
    const std::int64_t prev_b = res[i - 1].b;
    total = add(total, sub(sub(mul(2 * ai, prev_a), square(ai)), mul(prev_a, prev_b + 1)));
  }
  return total;
}

std::int64_t ext_out_count(const NakayamaAlgebra& alg, const IntervalModule& m) {
  return ext_out_count(projective_resolution(alg, m));
}

std::vector<std::int64_t> ext_counts_by_degree(const ProjectiveResolution& res) {
  const int m = res.length();
  std::vector<std::int64_t> counts;
  for (int i = 1; i < m; ++i) {
    counts.push_back(interval_count_three(res[i - 1].a, res[i - 1].b, res[i].a, res[i].b,
                                          res[i + 1].a, res[i + 1].b));
  }
  if (m >= 1) counts.push_back(interval_count_two(res[m - 1].a, res[m].b, res[m].a));
  return counts;
}

std::int64_t interval_count_three(std::int64_t a1, std::int64_t b1, std::int64_t a2,
                                  std::int64_t b2, std::int64_t a3, std::int64_t b3) {
  if (!(a1 <= a2 && a2 <= b1 && b1 <= a3 && a3 <= b2 && b2 <= b3)) {
    throw Error(Errc::precondition_violated, "need a1 <= a2 <= b1 <= a3 <= b2 <= b3");
  }
  using namespace checked;
  return add(mul(a1, a2 - (b1 + 1)), mul(a2, a3 - a2));
}

std::int64_t interval_count_two(std::int64_t a1, std::int64_t b1, std::int64_t a2) {
  if (!(a1 <= a2 && a2 <= b1 + 1)) {
    throw Error(Errc::precondition_violated, "need a1 <= a2 <= b1 + 1");
  }
  return checked::mul(a2 - a1, b1 + 1 - a2);
}

ResolutionMemo::ResolutionMemo(const NakayamaAlgebra& alg)
    : alg_(alg), modules_(enumerate_indecomposables(alg)) {
  resolutions_.reserve(modules_.size());
  for (const auto& m : modules_.modules()) resolutions_.push_back(projective_resolution(alg_, m));
  std::size_t offset = 0;
  for (int l = 1; l <= alg_.n(); ++l) {
    block_offset_.push_back(offset);
    offset += modules_.block(l).size();
  }
}

const ProjectiveResolution& ResolutionMemo::operator[](const IntervalModule& m) const {
  alg_.require_module(m);
  return resolutions_[block_offset_[static_cast<std::size_t>(m.a - 1)] +
                      static_cast<std::size_t>(m.b - m.a)];
}

}  // namespace nakayama
