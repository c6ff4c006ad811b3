#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/indec.hpp"
#include "nakayama/oracle.hpp"

namespace testing {

inline nakayama::NakayamaAlgebra algebra(int n, std::initializer_list<nakayama::Relation> rels = {}) {
  return nakayama::build_algebra(n, std::vector<nakayama::Relation>(rels));
}

inline nakayama::NakayamaAlgebra linear(int n) { return nakayama::preset(nakayama::presets::Linear{n}); }

inline nakayama::NakayamaAlgebra single(int n, int start, int arrows) {
  return nakayama::preset(nakayama::presets::Single{n, start, arrows});
}

inline nakayama::NakayamaAlgebra rad(int n, int k) {
  return nakayama::preset(nakayama::presets::RadPower{n, k});
}

inline nakayama::NakayamaAlgebra auslander(int m) {
  return nakayama::preset(nakayama::presets::Auslander{m});
}

inline std::int64_t choose(std::int64_t x, std::int64_t r) {
  if (r < 0 || x < r) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < r; ++i) out = out * (x - i) / (i + 1);
  return out;
}

inline std::int64_t tri(std::int64_t x) { return x * (x + 1) / 2; }

// Oracle dimensions dim Ext^i(M, N), i = 0..n, for every ordered pair of
// indecomposables; each M is resolved once.
struct PairDims {
  nakayama::IntervalModule m;
  nakayama::IntervalModule n;
  std::vector<int> dims;
};

inline std::vector<PairDims> oracle_scan(const nakayama::NakayamaAlgebra& alg) {
  namespace o = nakayama::oracle;
  const auto ind = nakayama::enumerate_indecomposables(alg).modules();
  std::vector<o::MatrixRep> reps;
  std::vector<o::Resolution> resolutions;
  for (const auto& m : ind) {
    reps.push_back(o::to_matrix_rep(alg, m));
    resolutions.push_back(o::resolve(alg, reps.back()));
  }
  std::vector<PairDims> out;
  for (std::size_t x = 0; x < ind.size(); ++x) {
    for (std::size_t y = 0; y < ind.size(); ++y) {
      const auto cx = o::hom_complex(resolutions[x], reps[y]);
      PairDims p{ind[x], ind[y], {}};
      for (int i = 0; i <= alg.n(); ++i) p.dims.push_back(cx.cohomology(i));
      out.push_back(std::move(p));
    }
  }
  return out;
}

// Golden CSV `n,m,value` as {(n, m) -> value}.
inline std::map<std::pair<int, int>, std::int64_t> read_table_csv(const std::string& path) {
  std::ifstream in(path);
  std::map<std::pair<int, int>, std::int64_t> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int n = 0, m = 0;
    std::int64_t v = 0;
    char comma = 0;
    row >> n >> comma >> m >> comma >> v;
    out[{n, m}] = v;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace testing
