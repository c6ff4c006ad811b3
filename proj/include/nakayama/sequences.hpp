#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

/// Which census quantity a table tabulates for single(n, 1, m).
enum class TableKind { ind_sq, hom, ext, ep };

std::string_view to_string(TableKind kind) noexcept;
/// Accepts IND_SQ, H, E, EP (case-insensitive). Throws parse_error.
TableKind parse_table_kind(std::string_view text);

/// Rows n = 3..n_max, columns m = 2..n-1.
class TableGrid {
 public:
  TableGrid(TableKind kind, int n_max);

  TableKind kind() const noexcept { return kind_; }
  int n_max() const noexcept { return n_max_; }
  static bool defined(int n, int m) noexcept { return n >= 3 && m >= 2 && m <= n - 1; }

  std::optional<std::int64_t> cell(int n, int m) const;
  void set(int n, int m, std::int64_t value);

  /// Header `n,m,value`, rows by n then m.
  std::string to_csv() const;

 private:
  TableKind kind_;
  int n_max_;
  std::vector<std::vector<std::int64_t>> rows_;  // rows_[n - 3][m - 2]
};

/// Engine values for every defined cell. Throws precondition_violated if
/// n_max < 3.
TableGrid build_table(TableKind kind, int n_max);

/// Direct formula for the first column (col = 2) of the IND_SQ and EP
/// tables. Throws not_applicable otherwise.
std::int64_t column_formula(TableKind kind, int col, int n);

/// Cell (n, m) from the first column via the column recursions (IND_SQ, EP).
std::int64_t column_recursion(TableKind kind, int n, int m);

enum class SequenceFormat { plain, bfile, csv };

/// Throws parse_error.
SequenceFormat parse_sequence_format(std::string_view text);

struct SequenceInfo {
  std::string name;
  std::string parameter;  // "n" or "m"
  int first;              // parameter value at b-file index 1
};

/// Resolves EP_RAD2, H_RAD2, E_RAD2, IND_RAD2, EP_LINEAR, H_LINEAR,
/// E_LINEAR, EP_AUSLANDER, and IND_SQ_COL:<m>, H_COL:<m>, E_COL:<m>,
/// EP_COL:<m>. Throws unknown_sequence.
SequenceInfo sequence_info(std::string_view name);

/// First `terms` values, computed by the census engine.
std::vector<std::int64_t> sequence_terms(std::string_view name, int terms);

/// plain: one value per line; bfile: `index value` from index 1;
/// csv: header `<parameter>,value`.
std::string emit_sequence(std::string_view name, int terms, SequenceFormat format);

}  // namespace nakayama
