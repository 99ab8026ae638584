#ifndef DMM_NAME_HPP
#define DMM_NAME_HPP

#include <compare>
#include <string>
#include <string_view>

#include "dmm/error.hpp"

namespace dmm {

// True for characters of the base alphabet: ASCII letters, digits, underscore.
// Everything else (space, # ; : , = . and the rest) is structural and reserved.
bool is_name_char(char c);

// An index string over the base alphabet. Rows and columns of the network
// matrix, stream kinds, neuron types, cells and fields are all addressed by
// these. Always valid by construction.
class Name {
 public:
  explicit Name(std::string text);
  explicit Name(const char* text) : Name(std::string(text)) {}

  const std::string& text() const { return text_; }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

 private:
  std::string text_;
};

// Validating constructor in function form; throws Error{empty_name} or
// Error{forbidden_character} with the offending byte offset.
Name validate_name(std::string_view text);

}  // namespace dmm

#endif
