#include "nakayama/oracle.hpp"

#include <numeric>

#include "nakayama/error.hpp"
#include "nakayama/indec.hpp"
#include "nakayama/parallel.hpp"

namespace nakayama::oracle {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v - 1); }

MatrixRep zero_rep(int n) {
  MatrixRep rep;
  rep.dims.assign(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) rep.maps.emplace_back(0, 0);
  return rep;
}

// Last vertex w such that the path v -> w avoids every relation's arrow span.
int path_reach(const NakayamaAlgebra& alg, int v) {
  int w = v;
  while (w < alg.n()) {
    bool killed = false;
    for (const auto& r : alg.relations()) {
      killed = killed || (r.start >= v && r.start + r.arrows <= w + 1);
    }
    if (killed) break;
    ++w;
  }
  return w;
}

// Coordinates of Hom(source, target): the component at v is a
// target(v) x source(v) block, stored row-major after the blocks of 1..v-1.
struct HomLayout {
  std::vector<int> offset;
  int unknowns = 0;

  HomLayout(const MatrixRep& source, const MatrixRep& target) {
    for (int v = 1; v <= source.n(); ++v) {
      offset.push_back(unknowns);
      unknowns += target.dim(v) * source.dim(v);
    }
  }
};

Morphism unpack(const Matrix& coords, int col, const HomLayout& layout, const MatrixRep& source,
                const MatrixRep& target) {
  Morphism f;
  for (int v = 1; v <= source.n(); ++v) {
    Matrix block(target.dim(v), source.dim(v));
    for (int r = 0; r < block.rows(); ++r) {
      for (int c = 0; c < block.cols(); ++c) {
        block(r, c) = coords(layout.offset[at(v)] + r * block.cols() + c, col);
      }
    }
    f.components.push_back(std::move(block));
  }
  return f;
}

Matrix pack(const Morphism& f, const HomLayout& layout) {
  Matrix coords(layout.unknowns, 1);
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    const Matrix& block = f.components[v];
    for (int r = 0; r < block.rows(); ++r) {
      for (int c = 0; c < block.cols(); ++c) {
        coords(layout.offset[v] + r * block.cols() + c, 0) = block(r, c);
      }
    }
  }
  return coords;
}

}  // namespace

int MatrixRep::total_dim() const noexcept { return std::accumulate(dims.begin(), dims.end(), 0); }

Morphism compose(const Morphism& after, const Morphism& before) {
  Morphism out;
  for (std::size_t v = 0; v < before.components.size(); ++v) {
    out.components.push_back(after.components[v] * before.components[v]);
  }
  return out;
}

MatrixRep to_matrix_rep(const NakayamaAlgebra& alg, const IntervalModule& m) {
  alg.require_module(m);
  MatrixRep rep = zero_rep(alg.n());
  for (int v = m.a; v <= m.b; ++v) rep.dims[at(v)] = 1;
  for (int v = 1; v < alg.n(); ++v) {
    Matrix arrow(rep.dim(v + 1), rep.dim(v));
    if (m.a <= v && v < m.b) arrow(0, 0) = 1;
    rep.maps[at(v)] = std::move(arrow);
  }
  return rep;
}

bool satisfies_relations(const MatrixRep& rep, const NakayamaAlgebra& alg) {
  for (const auto& r : alg.relations()) {
    Matrix path = Matrix::identity(rep.dim(r.start));
    for (int v = r.start; v <= r.cap(); ++v) path = rep.arrow(v) * path;
    if (!path.is_zero()) return false;
  }
  return true;
}

bool is_morphism(const Morphism& f, const MatrixRep& source, const MatrixRep& target) {
  if (static_cast<int>(f.components.size()) != source.n()) return false;
  for (int v = 1; v <= source.n(); ++v) {
    if (f.at(v).rows() != target.dim(v) || f.at(v).cols() != source.dim(v)) return false;
  }
  for (int v = 1; v < source.n(); ++v) {
    if (!(f.at(v + 1) * source.arrow(v) == target.arrow(v) * f.at(v))) return false;
  }
  return true;
}

MatrixRep indecomposable_projective(const NakayamaAlgebra& alg, int v) {
  alg.require_vertex(v);
  const int reach = path_reach(alg, v);
  MatrixRep rep = zero_rep(alg.n());
  for (int w = v; w <= reach; ++w) rep.dims[at(w)] = 1;
  for (int w = 1; w < alg.n(); ++w) {
    Matrix arrow(rep.dim(w + 1), rep.dim(w));
    if (v <= w && w < reach) arrow(0, 0) = 1;
    rep.maps[at(w)] = std::move(arrow);
  }
  return rep;
}

ProjectiveCover projective_cover(const NakayamaAlgebra& alg, const MatrixRep& module) {
  const int n = module.n();

  // Top generators: at each vertex, extend a basis of the radical (image of
  // the incoming arrow) by unit vectors.
  struct Generator {
    int top;
    int reach;
    Matrix vector;
  };
  std::vector<Generator> gens;
  for (int w = 1; w <= n; ++w) {
    const int d = module.dim(w);
    if (d == 0) continue;
    Matrix span = w > 1 ? module.arrow(w - 1) : Matrix(d, 0);
    int current = linalg::rank(span);
    for (int i = 0; i < d && current < d; ++i) {
      Matrix unit(d, 1);
      unit(i, 0) = 1;
      Matrix extended = linalg::hstack(span, unit);
      const int r = linalg::rank(extended);
      if (r > current) {
        gens.push_back({w, path_reach(alg, w), unit});
        span = std::move(extended);
        current = r;
      }
    }
  }

  ProjectiveCover pc;
  pc.projective = zero_rep(n);
  std::vector<std::vector<int>> active(static_cast<std::size_t>(n));  // summands alive at v
  for (std::size_t j = 0; j < gens.size(); ++j) {
    pc.tops.push_back(gens[j].top);
    for (int v = gens[j].top; v <= gens[j].reach; ++v) active[at(v)].push_back(static_cast<int>(j));
  }
  for (int v = 1; v <= n; ++v) pc.projective.dims[at(v)] = static_cast<int>(active[at(v)].size());

  for (int v = 1; v < n; ++v) {
    Matrix arrow(pc.projective.dim(v + 1), pc.projective.dim(v));
    const auto& here = active[at(v)];
    const auto& next = active[at(v + 1)];
    for (std::size_t c = 0; c < here.size(); ++c) {
      for (std::size_t r = 0; r < next.size(); ++r) {
        if (next[r] == here[c]) arrow(static_cast<int>(r), static_cast<int>(c)) = 1;
      }
    }
    pc.projective.maps[at(v)] = std::move(arrow);
  }

  // Generator j goes to its vector at the top and to the image of that vector
  // along the path below.
  std::vector<Matrix> image(gens.size());
  for (int v = 1; v <= n; ++v) {
    Matrix comp(module.dim(v), pc.projective.dim(v));
    const auto& here = active[at(v)];
    for (std::size_t c = 0; c < here.size(); ++c) {
      const auto j = static_cast<std::size_t>(here[c]);
      if (gens[j].top == v) {
        image[j] = gens[j].vector;
      } else {
        image[j] = module.arrow(v - 1) * image[j];
      }
      for (int r = 0; r < comp.rows(); ++r) comp(r, static_cast<int>(c)) = image[j](r, 0);
    }
    pc.cover.components.push_back(std::move(comp));
  }
  return pc;
}

Kernel kernel(const Morphism& f, const MatrixRep& source) {
  const int n = source.n();
  Kernel k;
  k.rep = zero_rep(n);
  for (int v = 1; v <= n; ++v) {
    Matrix basis = linalg::nullspace(f.at(v));
    k.rep.dims[at(v)] = basis.cols();
    k.inclusion.components.push_back(std::move(basis));
  }
  for (int v = 1; v < n; ++v) {
    const Matrix pushed = source.arrow(v) * k.inclusion.at(v);
    auto restricted = linalg::solve(k.inclusion.at(v + 1), pushed);
    if (!restricted) throw Error(Errc::internal_inconsistency, "kernel is not a subrepresentation");
    k.rep.maps[at(v)] = std::move(*restricted);
  }
  return k;
}

Resolution resolve(const NakayamaAlgebra& alg, const MatrixRep& module) {
  Resolution res;
  ProjectiveCover pc = projective_cover(alg, module);
  res.augmentation = pc.cover;
  Kernel syzygy = kernel(pc.cover, pc.projective);
  res.terms.push_back(std::move(pc.projective));
  res.tops.push_back(std::move(pc.tops));

  for (int guard = 0; !syzygy.rep.is_zero(); ++guard) {
    if (guard > alg.n()) throw Error(Errc::internal_inconsistency, "resolution did not terminate");
    ProjectiveCover next = projective_cover(alg, syzygy.rep);
    res.differentials.push_back(compose(syzygy.inclusion, next.cover));
    Kernel following = kernel(next.cover, next.projective);
    res.terms.push_back(std::move(next.projective));
    res.tops.push_back(std::move(next.tops));
    syzygy = std::move(following);
  }
  return res;
}

HomSpace hom_space(const MatrixRep& source, const MatrixRep& target) {
  const HomLayout layout(source, target);
  int equations = 0;
  for (int v = 1; v < source.n(); ++v) equations += target.dim(v + 1) * source.dim(v);

  // g_{v+1} X_v - Y_v g_v = 0 for every arrow v.
  Matrix system(equations, layout.unknowns);
  int row = 0;
  for (int v = 1; v < source.n(); ++v) {
    const Matrix& x = source.arrow(v);
    const Matrix& y = target.arrow(v);
    const int dx = source.dim(v);
    const int dx_next = source.dim(v + 1);
    for (int r = 0; r < target.dim(v + 1); ++r) {
      for (int c = 0; c < dx; ++c, ++row) {
        for (int s = 0; s < dx_next; ++s) {
          system(row, layout.offset[at(v + 1)] + r * dx_next + s) += x(s, c);
        }
        for (int s = 0; s < target.dim(v); ++s) {
          system(row, layout.offset[at(v)] + s * dx + c) -= y(r, s);
        }
      }
    }
  }
  return {linalg::nullspace(system)};
}

int HomComplex::cohomology(int i) const {
  const int m = static_cast<int>(spaces.size()) - 1;
  if (i < 0) throw Error(Errc::precondition_violated, "negative degree");
  if (i > m) return 0;
  const int outgoing = i < m ? linalg::rank(differentials[static_cast<std::size_t>(i)]) : 0;
  const int incoming = i > 0 ? linalg::rank(differentials[static_cast<std::size_t>(i - 1)]) : 0;
  return spaces[static_cast<std::size_t>(i)] - outgoing - incoming;
}

HomComplex hom_complex(const Resolution& res, const MatrixRep& target) {
  HomComplex cx;
  std::vector<HomSpace> homs;
  for (const auto& term : res.terms) {
    homs.push_back(hom_space(term, target));
    cx.spaces.push_back(homs.back().dim());
  }
  // d_t(g) = g o f_t, written in the basis of Hom(P_t, N).
  for (int t = 1; t <= res.length(); ++t) {
    const MatrixRep& from = res.terms[at(t)];
    const MatrixRep& to = res.terms[at(t + 1)];
    const HomLayout from_layout(from, target);
    const HomLayout to_layout(to, target);
    const HomSpace& src = homs[at(t)];
    const HomSpace& dst = homs[at(t + 1)];
    Matrix images(to_layout.unknowns, src.dim());
    for (int j = 0; j < src.dim(); ++j) {
      const Morphism g = unpack(src.basis, j, from_layout, from, target);
      const Matrix packed = pack(compose(g, res.differentials[at(t)]), to_layout);
      for (int r = 0; r < packed.rows(); ++r) images(r, j) = packed(r, 0);
    }
    auto coords = linalg::solve(dst.basis, images);
    if (!coords) throw Error(Errc::internal_inconsistency, "induced map leaves the Hom space");
    cx.differentials.push_back(std::move(*coords));
  }
  return cx;
}

int hom_dim_oracle(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n) {
  return hom_space(to_matrix_rep(alg, m), to_matrix_rep(alg, n)).dim();
}

std::vector<int> ext_dims_oracle(const NakayamaAlgebra& alg, const IntervalModule& m,
                                 const IntervalModule& n) {
  const HomComplex cx = hom_complex(resolve(alg, to_matrix_rep(alg, m)), to_matrix_rep(alg, n));
  std::vector<int> dims;
  for (int i = 0; i <= alg.n(); ++i) dims.push_back(cx.cohomology(i));
  return dims;
}

int ext_dim_oracle(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n,
                   int i) {
  if (i < 1) throw Error(Errc::precondition_violated, "Ext degree must be at least 1");
  const HomComplex cx = hom_complex(resolve(alg, to_matrix_rep(alg, m)), to_matrix_rep(alg, n));
  return cx.cohomology(i);
}

std::int64_t ep_count_oracle(const NakayamaAlgebra& alg) {
  const auto ind = enumerate_indecomposables(alg).modules();
  std::vector<MatrixRep> reps;
  std::vector<Resolution> resolutions;
  for (const auto& m : ind) {
    reps.push_back(to_matrix_rep(alg, m));
    resolutions.push_back(resolve(alg, reps.back()));
  }

  // Row x counts the pairs (M, N) with N = ind[x].
  return parallel_sum(ind.size(), [&](std::size_t x) {
    std::int64_t count = 0;
    for (std::size_t y = 0; y < ind.size(); ++y) {
      if (hom_space(reps[x], reps[y]).dim() != 0) continue;
      const HomComplex cx = hom_complex(resolutions[x], reps[y]);
      bool exceptional = true;
      for (int i = 1; i <= alg.n() && exceptional; ++i) exceptional = cx.cohomology(i) == 0;
      if (exceptional) ++count;
    }
    return count;
  });
}

}  // namespace nakayama::oracle
