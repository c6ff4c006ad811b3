#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakayama {

enum class Errc {
  relation_out_of_range,
  relation_too_short,
  non_minimal_set,
  duplicate_relation,
  vertex_out_of_range,
  invalid_preset_params,
  not_a_module,
  precondition_violated,
  not_applicable,
  internal_inconsistency,
  unknown_sequence,
  parse_error,
  overflow,
};

std::string_view to_string(Errc code) noexcept;

// Every failure the engine reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nakayama
