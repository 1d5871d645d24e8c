#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stone::dsl {

/// Byte offsets [begin, end) into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
  Ident,
  Number,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Plus,
  Star,
  Minus,
  Pipe,
  Amp,
  Backslash,
  CaretC,  // ^c
  Slash,
  Equals,
  Flag,  // --name
  Keyword,
  Error,
  Eof,
};

std::string_view kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;
};

/// Z P Q B fin cofin let in over check.
bool is_keyword(std::string_view word);

/// Never throws: characters that start no token become Error tokens. The
/// last token is always Eof.
std::vector<Token> tokenize(std::string_view input);

}  // namespace stone::dsl
