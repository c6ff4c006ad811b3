#include "nakayama/error.hpp"

namespace nakayama {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::relation_out_of_range: return "RelationOutOfRange";
    case Errc::relation_too_short: return "RelationTooShort";
    case Errc::non_minimal_set: return "NonMinimalSet";
    case Errc::duplicate_relation: return "DuplicateRelation";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::invalid_preset_params: return "InvalidPresetParams";
    case Errc::not_a_module: return "NotAModule";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::unknown_sequence: return "UnknownSequence";
    case Errc::parse_error: return "ParseError";
    case Errc::overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace nakayama
