#ifndef DMM_ERROR_HPP
#define DMM_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dmm {

// 1-based line/column of a token or statement in source text.
struct SourcePos {
  int line = 0;
  int col = 0;
  bool operator==(const SourcePos&) const = default;
};

enum class ErrorCode {
  empty_name,
  forbidden_character,
  unknown_kind,
  unknown_type,
  unknown_field,
  unknown_port,
  unknown_identifier,
  duplicate_kind,
  duplicate_type,
  duplicate_identifier,
  duplicate_transform,
  arity_mismatch,
  kind_mismatch,
  mask_tail_conflict,
  cross_kind_weight,
  malformed_mask,
  unbound_transform,
  transform_failure,
  invalid_signature,
  invalid_argument,
  lex_error,
  parse_error,
  io_error,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, std::string message, SourcePos pos)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message +
                           " (line " + std::to_string(pos.line) + ", col " +
                           std::to_string(pos.col) + ")"),
        code_(code),
        pos_(pos) {}

  ErrorCode code() const { return code_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

  // Byte offset within a string, for name-validation failures.
  std::optional<std::size_t> char_index;
  // True when a parse failed only because input ended early (REPL continuation).
  bool incomplete_input = false;

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace dmm

#endif
