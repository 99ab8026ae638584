#include <cctype>
#include <cstdlib>

#include "dmm/lang.hpp"

namespace dmm {

namespace {

struct Cursor {
  std::string_view src;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  bool done() const { return i >= src.size(); }
  char peek(std::size_t ahead = 0) const {
    return i + ahead < src.size() ? src[i + ahead] : '\0';
  }
  char take() {
    char c = src[i++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  SourcePos pos() const { return {line, col}; }
};

bool starts_number(const Cursor& c) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) return true;
  return ch == '.' && std::isdigit(static_cast<unsigned char>(c.peek(1)));
}

// Unsigned decimal with optional fraction and exponent. Signs are separate
// punctuation so that mask sums like "a + b" and "(-1) * r" parse uniformly.
Token lex_number(Cursor& c) {
  Token t;
  t.kind = Token::Kind::number;
  t.pos = c.pos();
  std::size_t start = c.i;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
  if (c.peek() == '.' && std::isdigit(static_cast<unsigned char>(c.peek(1)))) {
    c.take();
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
  }
  if ((c.peek() == 'e' || c.peek() == 'E') &&
      (std::isdigit(static_cast<unsigned char>(c.peek(1))) ||
       ((c.peek(1) == '+' || c.peek(1) == '-') &&
        std::isdigit(static_cast<unsigned char>(c.peek(2)))))) {
    c.take();
    if (c.peek() == '+' || c.peek() == '-') c.take();
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
  }
  // A name character directly after the digits means this was a name that
  // merely starts with digits ("2nd"); the caller re-lexes.
  if (is_name_char(c.peek())) {
    t.kind = Token::Kind::name;
    while (is_name_char(c.peek())) c.take();
    t.text = std::string(c.src.substr(start, c.i - start));
    return t;
  }
  t.text = std::string(c.src.substr(start, c.i - start));
  t.number = std::strtod(t.text.c_str(), nullptr);
  return t;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  Cursor c{src};
  while (!c.done()) {
    char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      c.take();
      continue;
    }
    if (ch == '/' && c.peek(1) == '/') {
      while (!c.done() && c.peek() != '\n') c.take();
      continue;
    }
    SourcePos pos = c.pos();
    if (ch == '#') {
      c.take();
      std::size_t start = c.i;
      while (is_name_char(c.peek())) c.take();
      if (c.i == start) {
        throw Error(ErrorCode::lex_error, "'#' must start a keyword", pos);
      }
      Token t;
      t.kind = Token::Kind::keyword;
      t.text = std::string(src.substr(start, c.i - start));
      t.pos = pos;
      out.push_back(std::move(t));
      continue;
    }
    if (starts_number(c)) {
      Token t = lex_number(c);
      out.push_back(std::move(t));
      continue;
    }
    if (is_name_char(ch)) {
      std::size_t start = c.i;
      while (is_name_char(c.peek())) c.take();
      Token t;
      t.kind = Token::Kind::name;
      t.text = std::string(src.substr(start, c.i - start));
      t.pos = pos;
      out.push_back(std::move(t));
      continue;
    }
    if (ch == '+' && c.peek(1) == '=') {
      c.take();
      c.take();
      out.push_back({Token::Kind::punct, "+=", 0.0, pos});
      continue;
    }
    if (ch == ':' || ch == ',' || ch == '=' || ch == ';' || ch == '.' ||
        ch == '*' || ch == '+' || ch == '-' || ch == '(' || ch == ')') {
      c.take();
      out.push_back({Token::Kind::punct, std::string(1, ch), 0.0, pos});
      continue;
    }
    throw Error(ErrorCode::lex_error,
                "character '" + std::string(1, ch) + "' cannot start a token",
                pos);
  }
  Token eof;
  eof.kind = Token::Kind::eof;
  eof.pos = c.pos();
  out.push_back(std::move(eof));
  return out;
}

}  // namespace dmm
