// Command-line front end for the Nakayama census engine.
//
//   nakayama count --n 7 --preset single:1,2
//   nakayama resolve --n 4 --rel 1:2,2:2 --module 1,1
//   nakayama table --kind EP --n-max 9 --format csv
//
// Exit status: 0 on success, 1 on usage errors or invalid input, 2 when
// `verify` finds a formula or oracle mismatch.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nakayama/algebra.hpp"
#include "nakayama/census.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/indec.hpp"
#include "nakayama/json_io.hpp"
#include "nakayama/oracle.hpp"
#include "nakayama/sequences.hpp"
#include "nakayama/text_format.hpp"

namespace {

using nakayama::Errc;
using nakayama::Error;
using nakayama::json::Json;

struct AlgebraSource {
  std::string text;
  std::optional<int> n;
  std::string rel;
  std::string preset;
  bool normalize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--algebra", text, "algebra in text form, e.g. \"n=4; rel=1:2\"");
    cmd->add_option("--n", n, "number of vertices");
    cmd->add_option("--rel", rel, "relations start:arrows[,start:arrows...]");
    cmd->add_option("--preset", preset, "linear | single:<s>,<m> | rad:<k> | auslander:<m>");
    cmd->add_flag("--normalize", normalize, "drop relations implied by shorter ones");
  }

  nakayama::NakayamaAlgebra build() const {
    if (!text.empty()) {
      if (n || !rel.empty() || !preset.empty()) {
        throw Error(Errc::parse_error, "--algebra cannot be combined with --n, --rel or --preset");
      }
      return nakayama::text::parse_algebra(text, normalize);
    }
    if (!preset.empty()) {
      if (!rel.empty()) throw Error(Errc::parse_error, "give either --rel or --preset, not both");
      return nakayama::preset(nakayama::text::parse_preset(preset, n));
    }
    if (!n) throw Error(Errc::parse_error, "no algebra given; use --algebra, --n/--rel or --preset");
    const auto relations = nakayama::text::parse_relations(rel);
    return nakayama::build_algebra(*n, relations, normalize);
  }
};

struct Options {
  AlgebraSource algebra;
  std::string format = "json";
  bool oracle = false;
  std::string module;
  std::string source;
  std::string target;
  std::string kind;
  int n_max = 9;
  std::string name;
  int terms = 10;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw Error(Errc::parse_error, "format '" + format + "' not supported by this command");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string run_enumerate(const Options& opt) {
  require_format(opt.format, {"json", "csv", "plain"});
  const auto set = nakayama::enumerate_indecomposables(opt.algebra.build());
  if (opt.format == "json") return dump(nakayama::json::modules(set));
  std::ostringstream out;
  if (opt.format == "csv") out << "a,b\n";
  for (const auto& m : set.modules()) {
    if (opt.format == "csv") {
      out << m.a << ',' << m.b << '\n';
    } else {
      out << m << '\n';
    }
  }
  return out.str();
}

std::string report_text(const nakayama::CensusReport& r, const std::string& format) {
  if (format == "json") return dump(nakayama::json::report(r));
  std::ostringstream out;
  const char sep = format == "csv" ? ',' : ' ';
  if (format == "csv") out << "quantity,value\n";
  out << "ind_count" << sep << r.counts.ind_count << '\n';
  out << "ind_squared" << sep << r.counts.ind_squared << '\n';
  out << "hom_total" << sep << r.counts.hom_total << '\n';
  out << "ext_total" << sep << r.counts.ext_total << '\n';
  out << "exceptional_pairs" << sep << r.counts.exceptional_pairs << '\n';
  if (r.oracle_exceptional_pairs) {
    out << "oracle_exceptional_pairs" << sep << *r.oracle_exceptional_pairs << '\n';
  }
  for (const auto& f : r.formulas) {
    if (!f.applicable) continue;
    out << to_string(f.id) << sep << *f.formula_value << '\n';
  }
  return out.str();
}

std::string run_resolve(const Options& opt) {
  require_format(opt.format, {"json", "plain"});
  if (opt.module.empty()) throw Error(Errc::parse_error, "resolve needs --module a,b");
  const auto alg = opt.algebra.build();
  const auto res = nakayama::projective_resolution(alg, nakayama::text::parse_interval(opt.module));
  if (opt.format == "json") return nakayama::json::resolution(res).dump() + "\n";
  std::ostringstream out;
  for (const auto& p : res.terms) out << p << '\n';
  return out.str();
}

std::string run_hom_or_ext(const Options& opt, bool ext) {
  require_format(opt.format, {"json", "plain"});
  if (opt.source.empty() || opt.target.empty()) {
    throw Error(Errc::parse_error, "--source and --target are required");
  }
  const auto alg = opt.algebra.build();
  const auto m = nakayama::text::parse_interval(opt.source);
  const auto n = nakayama::text::parse_interval(opt.target);
  Json out;
  if (ext) {
    const auto profile = nakayama::ext_nonzero_degree(alg, m, n);
    out = nakayama::json::ext(profile);
    if (opt.oracle) {
      const auto dims = nakayama::oracle::ext_dims_oracle(alg, m, n);
      Json oracle_dims = Json::array();
      for (std::size_t i = 1; i < dims.size(); ++i) oracle_dims.push_back(dims[i]);
      out["oracle_dims"] = std::move(oracle_dims);
    }
  } else {
    out = nakayama::json::hom(nakayama::hom_dim(alg, m, n));
    if (opt.oracle) out["oracle_dim"] = nakayama::oracle::hom_dim_oracle(alg, m, n);
  }
  if (opt.format == "json") return dump(out);
  std::ostringstream plain;
  plain << "dim " << out["dim"].get<int>() << '\n';
  if (!out["degree"].is_null()) plain << "degree " << out["degree"].get<int>() << '\n';
  return plain.str();
}

std::string run_table(const Options& opt) {
  require_format(opt.format, {"json", "csv", "plain"});
  if (opt.kind.empty()) throw Error(Errc::parse_error, "table needs --kind IND_SQ|H|E|EP");
  const auto grid = nakayama::build_table(nakayama::parse_table_kind(opt.kind), opt.n_max);
  if (opt.format == "json") return dump(nakayama::json::table(grid));
  if (opt.format == "csv") return grid.to_csv();
  std::ostringstream out;
  for (int n = 3; n <= grid.n_max(); ++n) {
    out << n;
    for (int m = 2; m <= n - 1; ++m) out << ' ' << *grid.cell(n, m);
    out << '\n';
  }
  return out.str();
}

std::string run_sequence(const Options& opt) {
  if (opt.name.empty()) throw Error(Errc::parse_error, "sequence needs --name");
  if (opt.format == "json") {
    const auto info = nakayama::sequence_info(opt.name);
    Json out;
    out["name"] = info.name;
    out["parameter"] = info.parameter;
    out["first"] = info.first;
    out["terms"] = nakayama::sequence_terms(opt.name, opt.terms);
    return dump(out);
  }
  return nakayama::emit_sequence(opt.name, opt.terms,
                                 nakayama::parse_sequence_format(opt.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indecomposables, Hom/Ext and exceptional pairs of Nakayama algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate = app.add_subcommand("enumerate", "list the indecomposable modules");
  auto* count = app.add_subcommand("count", "census counts and closed formulas");
  auto* verify = app.add_subcommand("verify", "like count; exit 2 on any mismatch");
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a module");
  auto* hom = app.add_subcommand("hom", "dim Hom(source, target)");
  auto* ext = app.add_subcommand("ext", "the degree i >= 1 with Ext^i(source, target) != 0");
  auto* table = app.add_subcommand("table", "tables for single(n, 1, m)");
  auto* sequence = app.add_subcommand("sequence", "integer sequences");

  for (auto* cmd : {enumerate, count, verify, resolve, hom, ext}) opt.algebra.attach(cmd);
  for (auto* cmd : {enumerate, count, verify, resolve, hom, ext, table, sequence}) {
    cmd->add_option("--format", opt.format, "json | csv | plain (sequence: plain | bfile | csv)");
  }
  for (auto* cmd : {count, verify, hom, ext}) {
    cmd->add_flag("--oracle", opt.oracle, "cross-check with the brute-force oracle");
  }
  resolve->add_option("--module", opt.module, "interval a,b");
  for (auto* cmd : {hom, ext}) {
    cmd->add_option("--source", opt.source, "interval a,b");
    cmd->add_option("--target", opt.target, "interval c,d");
  }
  table->add_option("--kind", opt.kind, "IND_SQ | H | E | EP");
  table->add_option("--n-max", opt.n_max, "largest n");
  sequence->add_option("--name", opt.name, "e.g. EP_RAD2, H_COL:2");
  sequence->add_option("--terms", opt.terms, "number of terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::string output;
    int status = 0;
    if (enumerate->parsed()) {
      output = run_enumerate(opt);
    } else if (count->parsed() || verify->parsed()) {
      require_format(opt.format, {"json", "csv", "plain"});
      const auto report = nakayama::verify(opt.algebra.build(), opt.oracle);
      output = report_text(report, opt.format);
      if (verify->parsed() && !report.all_match()) status = 2;
    } else if (resolve->parsed()) {
      output = run_resolve(opt);
    } else if (hom->parsed() || ext->parsed()) {
      output = run_hom_or_ext(opt, ext->parsed());
    } else if (table->parsed()) {
      output = run_table(opt);
    } else if (sequence->parsed()) {
      output = run_sequence(opt);
    }
    std::cout << output << std::flush;
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
