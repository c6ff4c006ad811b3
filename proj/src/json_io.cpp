#include "nakayama/json_io.hpp"

namespace nakayama::json {

Json modules(const IndexedModuleSet& set) {
  Json out = Json::array();
  for (const auto& m : set.modules()) out.push_back({{"a", m.a}, {"b", m.b}});
  return out;
}

Json resolution(const ProjectiveResolution& res) {
  Json out = Json::array();
  for (const auto& p : res.terms) out.push_back(Json::array({p.a, p.b}));
  return out;
}

Json hom(int dim) {
  Json out;
  out["dim"] = dim;
  out["degree"] = dim != 0 ? Json(0) : Json(nullptr);
  return out;
}

Json ext(const ExtProfile& profile) {
  Json out;
  out["dim"] = profile ? 1 : 0;
  out["degree"] = profile ? Json(*profile) : Json(nullptr);
  return out;
}

Json report(const CensusReport& r) {
  Json out;
  out["algebra"] = r.algebra;
  out["ind_count"] = r.counts.ind_count;
  out["ind_squared"] = r.counts.ind_squared;
  out["hom_total"] = r.counts.hom_total;
  out["ext_total"] = r.counts.ext_total;
  out["exceptional_pairs"] = r.counts.exceptional_pairs;
  Json formulas = Json::array();
  for (const auto& f : r.formulas) {
    Json entry;
    entry["id"] = std::string(to_string(f.id));
    entry["applicable"] = f.applicable;
    entry["formula_value"] = f.formula_value ? Json(*f.formula_value) : Json(nullptr);
    entry["engine_value"] = f.engine_value;
    entry["match"] = f.applicable ? Json(f.match) : Json(nullptr);
    formulas.push_back(std::move(entry));
  }
  out["formulas"] = std::move(formulas);
  if (r.oracle_exceptional_pairs) {
    out["oracle_exceptional_pairs"] = *r.oracle_exceptional_pairs;
    out["oracle_match"] = r.oracle_matches();
  }
  out["all_match"] = r.all_match();
  return out;
}

Json table(const TableGrid& grid) {
  Json out;
  out["kind"] = std::string(to_string(grid.kind()));
  out["n_max"] = grid.n_max();
  Json cells = Json::array();
  for (int n = 3; n <= grid.n_max(); ++n) {
    for (int m = 2; m <= n - 1; ++m) {
      Json cell;
      cell["n"] = n;
      cell["m"] = m;
      cell["value"] = *grid.cell(n, m);
      cells.push_back(std::move(cell));
    }
  }
  out["cells"] = std::move(cells);
  return out;
}

}  // namespace nakayama::json
