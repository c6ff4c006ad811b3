#pragma once

#include <cstdint>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/linalg.hpp"

// Brute-force homological algebra on explicit quiver representations.
//
// Nothing here uses the interval combinatorics of homology.hpp: projectives
// are read off the relation list, projective covers and kernels are computed
// from matrices, Hom spaces are solution spaces of the commutativity
// equations, and Ext is the cohomology of Hom(P_*, N) with the induced maps.
// Slow on purpose; meant for test-scale algebras.
namespace nakayama::oracle {

using linalg::Matrix;

/// A representation of the A_n quiver: a vector space per vertex and a
/// matrix per arrow. maps[v - 1] is the arrow v -> v + 1, of shape
/// dims[v] x dims[v - 1].
struct MatrixRep {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  int n() const noexcept { return static_cast<int>(dims.size()); }
  int dim(int v) const { return dims.at(static_cast<std::size_t>(v - 1)); }
  const Matrix& arrow(int v) const { return maps.at(static_cast<std::size_t>(v - 1)); }
  int total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
};

/// components[v - 1] : source(v) -> target(v).
struct Morphism {
  std::vector<Matrix> components;

  const Matrix& at(int v) const { return components.at(static_cast<std::size_t>(v - 1)); }
};

Morphism compose(const Morphism& after, const Morphism& before);

MatrixRep to_matrix_rep(const NakayamaAlgebra& alg, const IntervalModule& m);

/// Composites along every relation vanish.
bool satisfies_relations(const MatrixRep& rep, const NakayamaAlgebra& alg);
bool is_morphism(const Morphism& f, const MatrixRep& source, const MatrixRep& target);

/// P(v) spanned by the nonzero paths leaving v, read directly off the
/// relation list.
MatrixRep indecomposable_projective(const NakayamaAlgebra& alg, int v);

struct ProjectiveCover {
  MatrixRep projective;
  std::vector<int> tops;  // top vertex of each indecomposable summand
  Morphism cover;         // projective -> module, surjective
};

ProjectiveCover projective_cover(const NakayamaAlgebra& alg, const MatrixRep& module);

struct Kernel {
  MatrixRep rep;
  Morphism inclusion;
};

Kernel kernel(const Morphism& f, const MatrixRep& source);

/// 0 -> P_m -> ... -> P_1 -> P_0 -> M -> 0 with explicit maps.
struct Resolution {
  std::vector<MatrixRep> terms;
  std::vector<std::vector<int>> tops;
  std::vector<Morphism> differentials;  // differentials[t - 1] : P_t -> P_{t-1}
  Morphism augmentation;                // P_0 -> M

  int length() const noexcept { return static_cast<int>(terms.size()) - 1; }
};

Resolution resolve(const NakayamaAlgebra& alg, const MatrixRep& module);

/// Hom(source, target) as the columns of `basis`, in the coordinates of the
/// stacked component matrices.
struct HomSpace {
  Matrix basis;
  int dim() const noexcept { return basis.cols(); }
};

HomSpace hom_space(const MatrixRep& source, const MatrixRep& target);

/// Hom(P_t, N) for t = 0..m and the induced maps between them.
struct HomComplex {
  std::vector<int> spaces;
  std::vector<Matrix> differentials;  // differentials[t - 1] : Hom(P_{t-1}, N) -> Hom(P_t, N)

  /// dim ker d_{i+1} - rank d_i, with Ext^0 = Hom.
  int cohomology(int i) const;
};

HomComplex hom_complex(const Resolution& res, const MatrixRep& target);

int hom_dim_oracle(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n);

/// dim Ext^i(M, N) for i >= 1.
int ext_dim_oracle(const NakayamaAlgebra& alg, const IntervalModule& m, const IntervalModule& n,
                   int i);

/// dim Ext^i(M, N) for i = 0..n (index i), from one Hom complex.
std::vector<int> ext_dims_oracle(const NakayamaAlgebra& alg, const IntervalModule& m,
                                 const IntervalModule& n);

/// Ordered pairs (M, N) of indecomposables with Hom(N, M) = 0 and
/// Ext^i(N, M) = 0 for 1 <= i <= n.
std::int64_t ep_count_oracle(const NakayamaAlgebra& alg);

}  // namespace nakayama::oracle
