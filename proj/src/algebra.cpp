#include "nakayama/algebra.hpp"

#include <algorithm>
#include <ostream>

#include "nakayama/error.hpp"

namespace nakayama {

std::string to_string(const IntervalModule& m) {
  return "[" + std::to_string(m.a) + "," + std::to_string(m.b) + "]";
}

std::ostream& operator<<(std::ostream& os, const IntervalModule& m) { return os << to_string(m); }

namespace {

std::string relation_text(const Relation& r) {
  return std::to_string(r.start) + ":" + std::to_string(r.arrows);
}

void reject_duplicates(std::span<const Relation> relations) {
  std::vector<Relation> sorted(relations.begin(), relations.end());
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(Errc::duplicate_relation, "relation " + relation_text(*dup) + " given twice");
  }
}

// Arrow span of `inner` lies inside the arrow span of `outer`.
bool spans_inside(const Relation& inner, const Relation& outer) {
  return inner.start >= outer.start && inner.cap() <= outer.cap();
}

}  // namespace

void check_admissible(const Relation& r, int n) {
  if (r.arrows < 2) {
    throw Error(Errc::relation_too_short,
                "relation " + relation_text(r) + " must compose at least two arrows");
  }
  if (r.start < 1 || r.start + r.arrows > n) {
    throw Error(Errc::relation_out_of_range,
                "relation " + relation_text(r) + " needs arrows beyond A_" + std::to_string(n));
  }
}

std::vector<Relation> normalize_relations(std::span<const Relation> relations) {
  for (const auto& r : relations) {
    if (r.arrows < 2) {
      throw Error(Errc::relation_too_short,
                  "relation " + relation_text(r) + " must compose at least two arrows");
    }
  }
  reject_duplicates(relations);

  std::vector<Relation> kept;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < relations.size() && !redundant; ++j) {
      redundant = i != j && spans_inside(relations[j], relations[i]);
    }
    if (!redundant) kept.push_back(relations[i]);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

NakayamaAlgebra::NakayamaAlgebra(int n, std::vector<Relation> relations)
    : n_(n), relations_(std::move(relations)), caps_(static_cast<std::size_t>(n), n) {
  // Caps increase with starts, so the first relation starting at or after v
  // bounds every path leaving v.
  std::size_t next = relations_.size();
  for (int v = n; v >= 1; --v) {
    while (next > 0 && relations_[next - 1].start >= v) --next;
    if (next < relations_.size()) caps_[static_cast<std::size_t>(v - 1)] = relations_[next].cap();
  }
}

void NakayamaAlgebra::require_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

int NakayamaAlgebra::cap(int v) const {
  require_vertex(v);
  return caps_[static_cast<std::size_t>(v - 1)];
}

int NakayamaAlgebra::soc_start(int v) const {
  require_vertex(v);
  int c = v;
  while (c > 1 && caps_[static_cast<std::size_t>(c - 2)] >= v) --c;
  return c;
}

int NakayamaAlgebra::boundary(int l) const {
  if (l < 0 || l > k() + 1) {
    throw Error(Errc::precondition_violated, "block index " + std::to_string(l) + " out of range");
  }
  if (l == 0) return 0;
  if (l == k() + 1) return n_;
  return relations_[static_cast<std::size_t>(l - 1)].start;
}

int NakayamaAlgebra::overhang(int l) const {
  if (l < 0 || l > k() + 1) {
    throw Error(Errc::precondition_violated, "block index " + std::to_string(l) + " out of range");
  }
  if (l == 0 || l == k() + 1) return 0;
  return relations_[static_cast<std::size_t>(l - 1)].arrows - 1;
}

bool NakayamaAlgebra::is_module(const IntervalModule& m) const noexcept {
  return m.a >= 1 && m.a <= m.b && m.b <= n_ && m.b <= caps_[static_cast<std::size_t>(m.a - 1)];
}

void NakayamaAlgebra::require_module(const IntervalModule& m) const {
  if (!is_module(m)) {
    throw Error(Errc::not_a_module, to_string(m) + " is not a module of " + describe(*this));
  }
}

NakayamaAlgebra build_algebra(int n, std::span<const Relation> relations, bool auto_normalize) {
  if (n < 1) throw Error(Errc::precondition_violated, "need at least one vertex");
  for (const auto& r : relations) check_admissible(r, n);

  std::vector<Relation> minimal = normalize_relations(relations);
  if (!auto_normalize && minimal.size() != relations.size()) {
    throw Error(Errc::non_minimal_set,
                "a relation's arrow span contains another's; pass auto_normalize to reduce");
  }
  return NakayamaAlgebra(n, std::move(minimal));
}

IntervalModule projective_of(const NakayamaAlgebra& alg, int v) { return {v, alg.cap(v)}; }

IntervalModule injective_of(const NakayamaAlgebra& alg, int v) { return {alg.soc_start(v), v}; }

IntervalModule simple_of(const NakayamaAlgebra& alg, int v) {
  alg.require_vertex(v);
  return {v, v};
}

namespace {

struct PresetBuilder {
  NakayamaAlgebra operator()(const presets::Linear& p) const {
    if (p.n < 1) throw Error(Errc::invalid_preset_params, "linear needs n >= 1");
    return build_algebra(p.n, {});
  }

  NakayamaAlgebra operator()(const presets::Single& p) const {
    if (p.n < 1 || p.start < 1 || p.length < 2 || p.length > p.n - p.start) {
      throw Error(Errc::invalid_preset_params, "single needs 2 <= length <= n - start");
    }
    const Relation r{p.start, p.length};
    return build_algebra(p.n, std::span(&r, 1));
  }

  NakayamaAlgebra operator()(const presets::RadPower& p) const {
    if (p.k < 2 || p.k >= p.n) throw Error(Errc::invalid_preset_params, "rad needs 2 <= k < n");
    std::vector<Relation> rels;
    for (int i = 1; i <= p.n - p.k; ++i) rels.push_back({i, p.k});
    return build_algebra(p.n, rels);
  }

  NakayamaAlgebra operator()(const presets::Auslander& p) const {
    if (p.m < 2) throw Error(Errc::invalid_preset_params, "auslander needs m >= 2");
    std::vector<Relation> rels;
    for (int j = 1; j <= p.m - 1; ++j) rels.push_back({2 * j - 1, 2});
    return build_algebra(2 * p.m - 1, rels);
  }
};

void extend_minimal_sets(int n, int last_start, int last_cap, std::vector<Relation>& current,
                         std::vector<NakayamaAlgebra>& out) {
  out.push_back(build_algebra(n, current));
  for (int s = last_start + 1; s <= n - 2; ++s) {
    for (int arrows = 2; s + arrows <= n; ++arrows) {
      const Relation r{s, arrows};
      if (r.cap() <= last_cap) continue;
      current.push_back(r);
      extend_minimal_sets(n, s, r.cap(), current, out);
      current.pop_back();
    }
  }
}

}  // namespace

NakayamaAlgebra preset(const AlgebraPreset& p) { return std::visit(PresetBuilder{}, p); }

std::vector<NakayamaAlgebra> all_algebras(int n) {
  if (n < 1) throw Error(Errc::precondition_violated, "need at least one vertex");
  std::vector<NakayamaAlgebra> out;
  std::vector<Relation> current;
  extend_minimal_sets(n, 0, 0, current, out);
  return out;
}

bool is_overlap_free(const NakayamaAlgebra& alg) {
  for (int j = 1; j <= alg.k(); ++j) {
    const int p = alg.overhang(j);
    if (p < 1 || p >= alg.boundary(j + 1) - alg.boundary(j)) return false;
  }
  return true;
}

std::string describe(const NakayamaAlgebra& alg) {
  std::string out = "n=" + std::to_string(alg.n());
  if (alg.k() > 0) {
    out += "; rel=";
    for (int l = 0; l < alg.k(); ++l) {
      if (l > 0) out += ",";
      out += relation_text(alg.relations()[static_cast<std::size_t>(l)]);
    }
  }
  return out;
}

}  // namespace nakayama
