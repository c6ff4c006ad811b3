#include "nakayama/census.hpp"

#include "nakayama/checked.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/indec.hpp"
#include "nakayama/oracle.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

std::int64_t hom_total(const NakayamaAlgebra& alg) {
  const auto ind = enumerate_indecomposables(alg);
  std::int64_t total = 0;
  for (const auto& m : ind.modules()) {
    total = checked::add(total, hom_in_count(alg, m));
  }
  return total;
}

std::int64_t ext_total(const NakayamaAlgebra& alg) {
  const ResolutionMemo memo(alg);
  std::int64_t total = 0;
  for (const auto& m : memo.modules().modules()) total = checked::add(total, ext_out_count(memo[m]));
  return total;
}

Census census(const NakayamaAlgebra& alg) {
  Census c;
  c.ind_count = static_cast<std::int64_t>(enumerate_indecomposables(alg).size());
  c.ind_squared = checked::square(c.ind_count);
  c.hom_total = hom_total(alg);
  c.ext_total = ext_total(alg);
  c.exceptional_pairs = checked::sub(checked::sub(c.ind_squared, c.hom_total), c.ext_total);
  return c;
}

std::int64_t exceptional_pairs(const NakayamaAlgebra& alg) { return census(alg).exceptional_pairs; }

std::string_view to_string(FormulaId id) noexcept {
  switch (id) {
    case FormulaId::ep_linear: return "EP_LINEAR";
    case FormulaId::h_linear: return "H_LINEAR";
    case FormulaId::e_linear: return "E_LINEAR";
    case FormulaId::h_overlap_free: return "H_OVERLAP_FREE";
    case FormulaId::e_overlap_free: return "E_OVERLAP_FREE";
    case FormulaId::ep_overlap_free: return "EP_OVERLAP_FREE";
    case FormulaId::ep_single: return "EP_SINGLE";
    case FormulaId::ind_rad_k: return "IND_RAD_K";
    case FormulaId::h_rad2: return "H_RAD2";
    case FormulaId::e_rad2: return "E_RAD2";
    case FormulaId::ep_rad2: return "EP_RAD2";
    case FormulaId::ind_auslander: return "IND_AUSLANDER";
    case FormulaId::h_auslander: return "H_AUSLANDER";
    case FormulaId::e_auslander: return "E_AUSLANDER";
    case FormulaId::ep_auslander: return "EP_AUSLANDER";
  }
  return "UNKNOWN";
}

Quantity quantity_of(FormulaId id) noexcept {
  switch (id) {
    case FormulaId::ind_rad_k:
    case FormulaId::ind_auslander:
      return Quantity::ind_count;
    case FormulaId::h_linear:
    case FormulaId::h_overlap_free:
    case FormulaId::h_rad2:
    case FormulaId::h_auslander:
      return Quantity::hom_total;
    case FormulaId::e_linear:
    case FormulaId::e_overlap_free:
    case FormulaId::e_rad2:
    case FormulaId::e_auslander:
      return Quantity::ext_total;
    default:
      return Quantity::exceptional_pairs;
  }
}

namespace {

Rational triangular(std::int64_t x) { return Rational(checked::mul(x, x + 1), 2); }

Rational binomial(std::int64_t x, int r) {
  if (x < r) return 0;
  Rational out = 1;
  for (int i = 0; i < r; ++i) out = out * Rational(x - i) / Rational(i + 1);
  return out;
}

[[noreturn]] void not_applicable(FormulaId id, const std::string& why) {
  throw Error(Errc::not_applicable, std::string(to_string(id)) + ": " + why);
}

// Per-block quantities of the overlap-free theorems, with the conventions
// boundary(0) = 0, boundary(k+1) = n, overhang(k+1) = 0 and g(k+1) = 0.
struct Block {
  Rational width;     // i_j - i_{j-1}
  Rational overhang;  // p_j
  Rational g;         // i_{j+1} + p_{j+1} + i_{j-1} - 2 i_j - (2 p_j + 1) / 3
  Rational cap;       // i_j + p_j
};

std::vector<Block> overlap_free_blocks(const NakayamaAlgebra& alg) {
  std::vector<Block> blocks;
  for (int j = 1; j <= alg.k() + 1; ++j) {
    Block b;
    b.width = alg.boundary(j) - alg.boundary(j - 1);
    b.overhang = alg.overhang(j);
    b.cap = alg.boundary(j) + alg.overhang(j);
    if (j <= alg.k()) {
      b.g = Rational(alg.boundary(j + 1) + alg.overhang(j + 1) + alg.boundary(j - 1) -
                     2 * alg.boundary(j)) -
            Rational(2 * alg.overhang(j) + 1, 3);
    }
    blocks.push_back(b);
  }
  return blocks;
}

Rational overlap_free_value(FormulaId id, const NakayamaAlgebra& alg) {
  const auto blocks = overlap_free_blocks(alg);
  Rational h = 0;
  Rational e = 0;
  Rational binomials = 0;
  Rational cross = 0;
  Rational ind = 0;
  for (const auto& b : blocks) {
    const std::int64_t w = b.width.to_integer();
    const Rational tp = triangular(b.overhang.to_integer());
    const Rational tw = triangular(w);
    h += binomial(w + 3, 4) + b.overhang * binomial(w + 2, 3) + tp * (3 * tw + b.width * b.g);
    e += binomial(w + 2, 4) + b.overhang * binomial(w + 1, 3) + tp * (b.width * (b.g - 1) + 3 * tw);
    binomials += binomial(w + 3, 4) + binomial(w + 2, 4) +
                 b.overhang * (binomial(w + 2, 3) + binomial(w + 1, 3));
    cross += (6 * tw + b.width * (2 * b.g - 1)) * tp;
    ind += b.width * b.cap;
  }
  switch (id) {
    case FormulaId::h_overlap_free: return h;
    case FormulaId::e_overlap_free: return e;
    default: {
      const Rational count = ind - triangular(alg.n() - 1);
      return count * count - binomials - cross;
    }
  }
}

}  // namespace

std::int64_t closed_formula(FormulaId id, const FormulaArgs& args) {
  const Rational n = args.n;
  const Rational m = args.m;
  switch (id) {
    case FormulaId::ep_linear:
    case FormulaId::h_linear:
    case FormulaId::e_linear:
      if (args.n < 1) not_applicable(id, "needs n >= 1");
      if (id == FormulaId::h_linear) return binomial(args.n + 3, 4).to_integer();
      if (id == FormulaId::e_linear) return binomial(args.n + 2, 4).to_integer();
      return ((n - 1) * n * (n + 1) * (n + 1) / 6).to_integer();

    case FormulaId::h_overlap_free:
    case FormulaId::e_overlap_free:
    case FormulaId::ep_overlap_free: {
      std::optional<NakayamaAlgebra> alg;
      try {
        alg = build_algebra(args.n, args.relations);
      } catch (const Error& err) {
        not_applicable(id, err.what());
      }
      if (!is_overlap_free(*alg)) not_applicable(id, "relations share an arrow");
      return overlap_free_value(id, *alg).to_integer();
    }

    case FormulaId::ep_single:
      if (args.m < 2 || args.m > args.n - 1) not_applicable(id, "needs 2 <= m <= n - 1");
      return ((4 * m * m * m - 3 * m * m * (2 * n + 1) + m * (6 * n * n - 1) +
               (n - 2) * (n - 1) * n * n) /
              6)
          .to_integer();

    case FormulaId::ind_rad_k:
      if (args.k < 2 || args.k >= args.n) not_applicable(id, "needs 2 <= k < n");
      return (Rational(args.k) * n - triangular(args.k - 1)).to_integer();

    case FormulaId::h_rad2:
    case FormulaId::e_rad2:
    case FormulaId::ep_rad2:
      if (args.n < 3) not_applicable(id, "needs n >= 3");
      if (id == FormulaId::h_rad2) return (5 * n - 5).to_integer();
      if (id == FormulaId::e_rad2) return ((n - 1) + (n - 2) + triangular(args.n - 3)).to_integer();
      return ((7 * n * n - 17 * n + 12) / 2).to_integer();

    case FormulaId::ind_auslander:
    case FormulaId::h_auslander:
    case FormulaId::e_auslander:
    case FormulaId::ep_auslander:
      if (args.m < 2) not_applicable(id, "needs m >= 2");
      if (id == FormulaId::ind_auslander) return (5 * (m - 1)).to_integer();
      if (id == FormulaId::h_auslander) return args.m == 2 ? 10 : (18 * m - 27).to_integer();
      if (id == FormulaId::e_auslander) return args.m == 2 ? 3 : (9 * m - 16).to_integer();
      return args.m == 2 ? 12 : (25 * m * m - 77 * m + 68).to_integer();
  }
  not_applicable(id, "unknown formula");
}

std::optional<FormulaArgs> formula_args(FormulaId id, const NakayamaAlgebra& alg) {
  const auto& rels = alg.relations();
  FormulaArgs args;
  args.n = alg.n();

  // Exponent k with rels = {(i, k) : 1 <= i <= n - k}, or 0.
  auto rad_exponent = [&]() -> int {
    if (rels.empty()) return 0;
    const int k = rels.front().arrows;
    if (static_cast<int>(rels.size()) != alg.n() - k) return 0;
    for (int i = 1; i <= alg.n() - k; ++i) {
      if (rels[static_cast<std::size_t>(i - 1)] != Relation{i, k}) return 0;
    }
    return k;
  };

  switch (id) {
    case FormulaId::ep_linear:
    case FormulaId::h_linear:
    case FormulaId::e_linear:
      if (!rels.empty()) return std::nullopt;
      return args;

    case FormulaId::h_overlap_free:
    case FormulaId::e_overlap_free:
    case FormulaId::ep_overlap_free:
      if (!is_overlap_free(alg)) return std::nullopt;
      args.relations = rels;
      return args;

    case FormulaId::ep_single:
      if (rels.size() != 1 || rels.front().start != 1) return std::nullopt;
      args.m = rels.front().arrows;
      return args;

    case FormulaId::ind_rad_k:
      args.k = rad_exponent();
      if (args.k == 0) return std::nullopt;
      return args;

    case FormulaId::h_rad2:
    case FormulaId::e_rad2:
    case FormulaId::ep_rad2:
      if (rad_exponent() != 2 || alg.n() < 3) return std::nullopt;
      return args;

    case FormulaId::ind_auslander:
    case FormulaId::h_auslander:
    case FormulaId::e_auslander:
    case FormulaId::ep_auslander: {
      if (alg.n() % 2 == 0 || alg.n() < 3) return std::nullopt;
      args.m = (alg.n() + 1) / 2;
      if (static_cast<int>(rels.size()) != args.m - 1) return std::nullopt;
      for (int j = 1; j <= args.m - 1; ++j) {
        if (rels[static_cast<std::size_t>(j - 1)] != Relation{2 * j - 1, 2}) return std::nullopt;
      }
      return args;
    }
  }
  return std::nullopt;
}

bool CensusReport::all_match() const noexcept {
  for (const auto& f : formulas) {
    if (!f.match) return false;
  }
  return oracle_matches();
}

CensusReport verify(const NakayamaAlgebra& alg, bool with_oracle) {
  CensusReport report;
  report.algebra = describe(alg);
  report.counts = census(alg);
  for (FormulaId id : kAllFormulas) {
    FormulaCheck check;
    check.id = id;
    switch (quantity_of(id)) {
      case Quantity::ind_count: check.engine_value = report.counts.ind_count; break;
      case Quantity::hom_total: check.engine_value = report.counts.hom_total; break;
      case Quantity::ext_total: check.engine_value = report.counts.ext_total; break;
      case Quantity::exceptional_pairs: check.engine_value = report.counts.exceptional_pairs; break;
    }
    if (const auto args = formula_args(id, alg)) {
      check.applicable = true;
      check.formula_value = closed_formula(id, *args);
      check.match = *check.formula_value == check.engine_value;
    }
    report.formulas.push_back(check);
  }
  if (with_oracle) report.oracle_exceptional_pairs = oracle::ep_count_oracle(alg);
  return report;
}

}  // namespace nakayama
