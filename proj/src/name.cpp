#include "dmm/name.hpp"

namespace dmm {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

Name validate_name(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::empty_name, "name must be non-empty");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_name_char(text[i])) {
      Error e(ErrorCode::forbidden_character,
              "character '" + std::string(1, text[i]) + "' at offset " +
                  std::to_string(i) + " in \"" + std::string(text) + "\"");
      e.char_index = i;
      throw e;
    }
  }
  return Name(std::string(text));
}

Name::Name(std::string text) : text_(std::move(text)) {
  if (text_.empty()) {
    throw Error(ErrorCode::empty_name, "name must be non-empty");
  }
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (!is_name_char(text_[i])) {
      Error e(ErrorCode::forbidden_character,
              "character '" + std::string(1, text_[i]) + "' at offset " +
                  std::to_string(i) + " in \"" + text_ + "\"");
      e.char_index = i;
      throw e;
    }
  }
}

}  // namespace dmm
