#include "dmm/error.hpp"

namespace dmm {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::empty_name: return "EmptyName";
    case ErrorCode::forbidden_character: return "ForbiddenCharacter";
    case ErrorCode::unknown_kind: return "UnknownKind";
    case ErrorCode::unknown_type: return "UnknownType";
    case ErrorCode::unknown_field: return "UnknownField";
    case ErrorCode::unknown_port: return "UnknownPort";
    case ErrorCode::unknown_identifier: return "UnknownIdentifier";
    case ErrorCode::duplicate_kind: return "DuplicateKind";
    case ErrorCode::duplicate_type: return "DuplicateType";
    case ErrorCode::duplicate_identifier: return "DuplicateIdentifier";
    case ErrorCode::duplicate_transform: return "DuplicateTransform";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::mask_tail_conflict: return "MaskTailConflict";
    case ErrorCode::cross_kind_weight: return "CrossKindWeight";
    case ErrorCode::malformed_mask: return "MalformedMask";
    case ErrorCode::unbound_transform: return "UnboundTransform";
    case ErrorCode::transform_failure: return "TransformFailure";
    case ErrorCode::invalid_signature: return "InvalidSignature";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::lex_error: return "LexError";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace dmm
