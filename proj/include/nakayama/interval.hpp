#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace nakayama {

/// The uniserial module with one-dimensional spaces at vertices a..b and
/// identity maps between them. `a` is the top, `b` the socle.
struct IntervalModule {
  int a = 1;
  int b = 1;

  constexpr int length() const noexcept { return b - a + 1; }

  // Lexicographic by (a, b): the canonical order of every report.
  friend constexpr auto operator<=>(const IntervalModule&, const IntervalModule&) = default;
};

std::string to_string(const IntervalModule& m);
std::ostream& operator<<(std::ostream& os, const IntervalModule& m);

}  // namespace nakayama
