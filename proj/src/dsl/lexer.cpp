#include <array>
#include <cctype>

#include "stone/dsl/token.hpp"

namespace stone::dsl {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {"Z", "P", "Q", "B", "fin", "cofin", "let", "in", "over", "check"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Backslash: return "'\\'";
    case TokenKind::CaretC: return "'^c'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Flag: return "flag";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Error: return "invalid character";
    case TokenKind::Eof: return "end of input";
  }
  return "token";
}

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, std::string(input.substr(begin, end - begin)), Span{begin, end}});
  };
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (ident_start(c)) {
      while (i < input.size() && ident_char(input[i])) ++i;
      push(is_keyword(input.substr(begin, i - begin)) ? TokenKind::Keyword : TokenKind::Ident, begin, i);
      continue;
    }
    if (digit(c)) {
      while (i < input.size() && digit(input[i])) ++i;
      push(TokenKind::Number, begin, i);
      continue;
    }
    if (c == '-' && i + 2 < input.size() && input[i + 1] == '-' && ident_start(input[i + 2])) {
      i += 2;
      while (i < input.size() && (ident_char(input[i]) || input[i] == '-')) ++i;
      push(TokenKind::Flag, begin, i);
      continue;
    }
    if (c == '^' && i + 1 < input.size() && input[i + 1] == 'c' &&
        (i + 2 == input.size() || !ident_char(input[i + 2]))) {
      i += 2;
      push(TokenKind::CaretC, begin, i);
      continue;
    }
    TokenKind kind = TokenKind::Error;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      case '+': kind = TokenKind::Plus; break;
      case '*': kind = TokenKind::Star; break;
      case '-': kind = TokenKind::Minus; break;
      case '|': kind = TokenKind::Pipe; break;
      case '&': kind = TokenKind::Amp; break;
      case '\\': kind = TokenKind::Backslash; break;
      case '/': kind = TokenKind::Slash; break;
      case '=': kind = TokenKind::Equals; break;
      default: break;
    }
    // An invalid byte sequence is one error token per byte.
    ++i;
    push(kind, begin, i);
  }
  push(TokenKind::Eof, input.size(), input.size());
  return out;
}

}  // namespace stone::dsl
