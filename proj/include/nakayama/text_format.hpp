#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

// Algebra text format:
//   n=<int>; rel=<start>:<arrows>[,<start>:<arrows>...]
//   n=<int>; preset=linear | single:<start>,<arrows> | rad:<k>
//   preset=auslander:<m>            (n is implied as 2m - 1)
// Relations are written as start:arrows; the overhang is arrows - 1.
namespace nakayama::text {

std::vector<Relation> parse_relations(std::string_view text);

/// `n` may be absent only for auslander presets.
AlgebraPreset parse_preset(std::string_view text, std::optional<int> n);

IntervalModule parse_interval(std::string_view text);

NakayamaAlgebra parse_algebra(std::string_view text, bool auto_normalize = false);

/// Inverse of parse_algebra (always the explicit rel= form).
std::string format_algebra(const NakayamaAlgebra& alg);

}  // namespace nakayama::text
