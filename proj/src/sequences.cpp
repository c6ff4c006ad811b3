#include "nakayama/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "nakayama/algebra.hpp"
#include "nakayama/census.hpp"
#include "nakayama/checked.hpp"
#include "nakayama/error.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

std::string_view to_string(TableKind kind) noexcept {
  switch (kind) {
    case TableKind::ind_sq: return "IND_SQ";
    case TableKind::hom: return "H";
    case TableKind::ext: return "E";
    case TableKind::ep: return "EP";
  }
  return "UNKNOWN";
}

namespace {

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::int64_t pick(TableKind kind, const Census& c) {
  switch (kind) {
    case TableKind::ind_sq: return c.ind_squared;
    case TableKind::hom: return c.hom_total;
    case TableKind::ext: return c.ext_total;
    case TableKind::ep: return c.exceptional_pairs;
  }
  return 0;
}

Census single_census(int n, int m) { return census(preset(presets::Single{n, 1, m})); }

}  // namespace

TableKind parse_table_kind(std::string_view text) {
  const std::string key = upper(text);
  for (TableKind kind : {TableKind::ind_sq, TableKind::hom, TableKind::ext, TableKind::ep}) {
    if (key == to_string(kind)) return kind;
  }
  throw Error(Errc::parse_error, "unknown table kind '" + std::string(text) + "'");
}

TableGrid::TableGrid(TableKind kind, int n_max) : kind_(kind), n_max_(n_max) {
  if (n_max < 3) throw Error(Errc::precondition_violated, "tables start at n = 3");
  for (int n = 3; n <= n_max; ++n) rows_.emplace_back(static_cast<std::size_t>(n - 2), 0);
}

std::optional<std::int64_t> TableGrid::cell(int n, int m) const {
  if (!defined(n, m) || n > n_max_) return std::nullopt;
  return rows_[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(m - 2)];
}

void TableGrid::set(int n, int m, std::int64_t value) {
  if (!defined(n, m) || n > n_max_) {
    throw Error(Errc::precondition_violated, "cell outside the table");
  }
  rows_[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(m - 2)] = value;
}

std::string TableGrid::to_csv() const {
  std::ostringstream out;
  out << "n,m,value\n";
  for (int n = 3; n <= n_max_; ++n) {
    for (int m = 2; m <= n - 1; ++m) out << n << ',' << m << ',' << *cell(n, m) << '\n';
  }
  return out.str();
}

TableGrid build_table(TableKind kind, int n_max) {
  TableGrid grid(kind, n_max);
  for (int n = 3; n <= n_max; ++n) {
    for (int m = 2; m <= n - 1; ++m) grid.set(n, m, pick(kind, single_census(n, m)));
  }
  return grid;
}

std::int64_t column_formula(TableKind kind, int col, int n) {
  if (col != 2 || n < 3 || (kind != TableKind::ind_sq && kind != TableKind::ep)) {
    throw Error(Errc::not_applicable, "direct formulas exist only for column 2 of IND_SQ and EP");
  }
  const Rational x = n;
  if (kind == TableKind::ind_sq) {
    const Rational base = x * x - x + 4;
    return (base * base / 4).to_integer();
  }
  return (x * x * x * x / 6 - x * x * x / 2 + Rational(7, 3) * x * x - 4 * x + 3).to_integer();
}

std::int64_t column_recursion(TableKind kind, int n, int m) {
  if (!TableGrid::defined(n, m)) {
    throw Error(Errc::not_applicable, "cell (" + std::to_string(n) + "," + std::to_string(m) +
                                          ") is not in the table");
  }
  const std::int64_t first = column_formula(kind, 2, n);
  if (kind == TableKind::ind_sq) {
    // Column m is the i-th column with i = m - 1.
    const std::int64_t i = m - 1;
    std::int64_t value = checked::add(first, checked::mul(i - 1, std::int64_t{n} * n - n + 5));
    for (std::int64_t h = 2; h <= i; ++h) value = checked::add(value, 2 * (h - 2));
    return value;
  }
  if (m == 2) return first;
  std::int64_t value = first + std::int64_t{n - 3} * (n - 3) + (n - 3) + 4;
  for (std::int64_t t = 3; t <= m - 1; ++t) value = checked::add(value, t * t);
  for (std::int64_t i = n - m; i <= n - 4; ++i) value = checked::add(value, i * (i + 1));
  return value;
}

SequenceFormat parse_sequence_format(std::string_view text) {
  if (text == "plain") return SequenceFormat::plain;
  if (text == "bfile") return SequenceFormat::bfile;
  if (text == "csv") return SequenceFormat::csv;
  throw Error(Errc::parse_error, "unknown sequence format '" + std::string(text) + "'");
}

namespace {

enum class Family { rad2, linear, auslander, column };

struct ResolvedSequence {
  SequenceInfo info;
  Family family;
  TableKind kind;
  int column = 0;
};

ResolvedSequence resolve_sequence(std::string_view name) {
  const std::string key = upper(name);
  const auto unknown = [&]() {
    return Error(Errc::unknown_sequence, "unknown sequence '" + std::string(name) + "'");
  };
  static constexpr TableKind kKinds[] = {TableKind::ind_sq, TableKind::hom, TableKind::ext,
                                         TableKind::ep};

  if (const auto colon = key.find("_COL:"); colon != std::string::npos) {
    const std::string prefix = key.substr(0, colon);
    const std::string digits = key.substr(colon + 5);
    int column = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), column);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || column < 2) throw unknown();
    for (TableKind kind : kKinds) {
      if (prefix == to_string(kind)) {
        return {{key, "n", column + 1}, Family::column, kind, column};
      }
    }
    throw unknown();
  }

  const auto underscore = key.rfind('_');
  if (underscore == std::string::npos) throw unknown();
  const std::string prefix = key.substr(0, underscore);
  const std::string family = key.substr(underscore + 1);
  std::optional<TableKind> kind;
  if (prefix == "IND") kind = TableKind::ind_sq;  // the raw count, not its square
  for (TableKind k : kKinds) {
    if (k != TableKind::ind_sq && prefix == to_string(k)) kind = k;
  }
  if (!kind) throw unknown();

  if (family == "RAD2") return {{key, "n", 3}, Family::rad2, *kind};
  if (family == "LINEAR" && prefix != "IND") return {{key, "n", 1}, Family::linear, *kind};
  if (family == "AUSLANDER" && prefix == "EP") return {{key, "m", 2}, Family::auslander, *kind};
  throw unknown();
}

std::int64_t term_value(const ResolvedSequence& seq, int parameter) {
  switch (seq.family) {
    case Family::rad2: {
      const Census c = census(preset(presets::RadPower{parameter, 2}));
      return seq.kind == TableKind::ind_sq ? c.ind_count : pick(seq.kind, c);
    }
    case Family::linear:
      return pick(seq.kind, census(preset(presets::Linear{parameter})));
    case Family::auslander:
      return pick(seq.kind, census(preset(presets::Auslander{parameter})));
    case Family::column:
      return pick(seq.kind, single_census(parameter, seq.column));
  }
  return 0;
}

}  // namespace

SequenceInfo sequence_info(std::string_view name) { return resolve_sequence(name).info; }

std::vector<std::int64_t> sequence_terms(std::string_view name, int terms) {
  const ResolvedSequence seq = resolve_sequence(name);
  if (terms < 0) throw Error(Errc::precondition_violated, "term count must be non-negative");
  std::vector<std::int64_t> out;
  for (int index = 0; index < terms; ++index) out.push_back(term_value(seq, seq.info.first + index));
  return out;
}

std::string emit_sequence(std::string_view name, int terms, SequenceFormat format) {
  const SequenceInfo info = sequence_info(name);
  const auto values = sequence_terms(name, terms);
  std::ostringstream out;
  if (format == SequenceFormat::csv) out << info.parameter << ",value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    switch (format) {
      case SequenceFormat::plain: out << values[i] << '\n'; break;
      case SequenceFormat::bfile: out << i + 1 << ' ' << values[i] << '\n'; break;
      case SequenceFormat::csv:
        out << info.first + static_cast<int>(i) << ',' << values[i] << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace nakayama
