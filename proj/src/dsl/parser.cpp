#include "stone/dsl/parser.hpp"

#include <charconv>

namespace stone::dsl {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
      throw SyntaxError(Span{}, "token stream must end with end of input");
    }
  }

  ExprPtr program() {
    ExprPtr e;
    if (at_keyword("check")) {
      e = check();
    } else if (at_keyword("let")) {
      e = let(true);
    } else {
      e = expr();
    }
    expect(TokenKind::Eof, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Keyword && peek(k).lexeme == word;
  }
  bool at_product_x() const { return peek().kind == TokenKind::Ident && peek().lexeme == "x"; }
  std::size_t last_end() const { return pos_ == 0 ? 0 : tokens_[pos_ - 1].span.end; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::Eof) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::Eof ? std::string("end of input") : "'" + t.lexeme + "'";
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) list += i + 1 == expected.size() ? " or " : ", ";
      list += expected[i];
    }
    if (t.kind == TokenKind::Error) throw SyntaxError(t.span, "invalid character " + found, std::move(expected));
    throw SyntaxError(t.span, "expected " + list + ", found " + found, std::move(expected));
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (!at(kind)) fail({what});
    return advance();
  }

  void expect_keyword(std::string_view word) {
    if (!at_keyword(word)) fail({"'" + std::string(word) + "'"});
    advance();
  }

  std::uint64_t number() {
    const Token& t = expect(TokenKind::Number, "number");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
    if (ec != std::errc() || ptr != t.lexeme.data() + t.lexeme.size()) {
      throw SyntaxError(t.span, "number " + t.lexeme + " does not fit in 64 bits");
    }
    return v;
  }

  template <class T>
  ExprPtr node(T n, std::size_t begin) {
    return make_expr(std::move(n), Span{begin, last_end()});
  }

  ExprPtr check() {
    const std::size_t begin = peek().span.begin;
    expect_keyword("check");
    Check c;
    c.suite = expect(TokenKind::Ident, "suite name").lexeme;
    while (at(TokenKind::Flag)) {
      std::string name = advance().lexeme.substr(2);
      c.flags.emplace_back(std::move(name), expr());
    }
    return node(std::move(c), begin);
  }

  ExprPtr let(bool top_level) {
    const std::size_t begin = peek().span.begin;
    expect_keyword("let");
    Let l;
    l.name = expect(TokenKind::Ident, "identifier").lexeme;
    expect(TokenKind::Equals, "'='");
    l.value = expr();
    if (top_level && at(TokenKind::Eof)) return node(std::move(l), begin);
    expect_keyword("in");
    l.body = expr();
    return node(std::move(l), begin);
  }

  ExprPtr expr() {
    if (at_keyword("let")) return let(false);
    const std::size_t begin = peek().span.begin;
    ExprPtr left = term();
    while (true) {
      char op = 0;
      switch (peek().kind) {
        case TokenKind::Plus: op = '+'; break;
        case TokenKind::Minus: op = '-'; break;
        case TokenKind::Pipe: op = '|'; break;
        case TokenKind::Backslash: op = '\\'; break;
        default: break;
      }
      if (!op) return left;
      advance();
      ExprPtr right = term();
      left = node(Binary{op, left, right}, begin);
    }
  }

  ExprPtr term() {
    const std::size_t begin = peek().span.begin;
    ExprPtr left = factor();
    while (at(TokenKind::Star) || at(TokenKind::Amp)) {
      const char op = advance().kind == TokenKind::Star ? '*' : '&';
      ExprPtr right = factor();
      left = node(Binary{op, left, right}, begin);
    }
    return left;
  }

  ExprPtr factor() {
    const std::size_t begin = peek().span.begin;
    ExprPtr e = atom();
    while (at(TokenKind::CaretC)) {
      advance();
      e = node(Complement{e}, begin);
    }
    return e;
  }

  std::vector<std::string> labels() {
    expect(TokenKind::LBrace, "'{'");
    std::vector<std::string> out;
    if (at(TokenKind::RBrace)) {
      advance();
      return out;
    }
    while (true) {
      if (!(at(TokenKind::Ident) || at(TokenKind::Number) || at(TokenKind::Keyword))) fail({"label"});
      out.push_back(advance().lexeme);
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      expect(TokenKind::RBrace, "',' or '}'");
      return out;
    }
  }

  bool at_ring_start() const {
    return (at_keyword("Z") && peek(1).kind == TokenKind::Slash) ||
           (at_keyword("P") && peek(1).kind == TokenKind::LBrace) ||
           ((at_keyword("Q") || at_keyword("B")) && peek(1).kind == TokenKind::LParen);
  }

  ExprPtr atom() {
    const std::size_t begin = peek().span.begin;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LBrace: return node(SetLiteral{labels()}, begin);
      case TokenKind::Number: return node(NumberLit{number()}, begin);
      case TokenKind::Ident: {
        std::string name = advance().lexeme;
        if (!at(TokenKind::LParen)) return node(Var{std::move(name)}, begin);
        return call(std::move(name), begin);
      }
      case TokenKind::LParen: return paren(begin);
      case TokenKind::Keyword:
        if (t.lexeme == "fin" || t.lexeme == "cofin") {
          const bool cofinite = advance().lexeme == "cofin";
          FinCofLiteral lit{cofinite, {}};
          expect(TokenKind::LBrace, "'{'");
          if (!at(TokenKind::RBrace)) {
            while (true) {
              lit.support.push_back(number());
              if (!at(TokenKind::Comma)) break;
              advance();
            }
          }
          expect(TokenKind::RBrace, "',' or '}'");
          return node(std::move(lit), begin);
        }
        if (at_ring_start()) return node(RingLiteral{ring_product(ring_atom())}, begin);
        break;
      default: break;
    }
    fail({"set literal", "ring literal", "number", "identifier", "'('"});
  }

  ExprPtr paren(std::size_t begin) {
    expect(TokenKind::LParen, "'('");
    if (at(TokenKind::RParen)) {
      advance();
      return node(TupleExpr{}, begin);
    }
    ExprPtr first = expr();
    if (at(TokenKind::Comma)) {
      TupleExpr tuple{{first}};
      while (at(TokenKind::Comma)) {
        advance();
        if (at(TokenKind::RParen)) break;
        tuple.items.push_back(expr());
      }
      expect(TokenKind::RParen, "',' or ')'");
      return node(std::move(tuple), begin);
    }
    expect(TokenKind::RParen, "')'");
    if (auto* ring = std::get_if<RingLiteral>(&first->node); ring && at_product_x()) {
      return node(RingLiteral{ring_product(ring->ring)}, begin);
    }
    return first;
  }

  ExprPtr call(std::string name, std::size_t begin) {
    expect(TokenKind::LParen, "'('");
    Call c{std::move(name), {}};
    if (!at(TokenKind::RParen)) {
      while (true) {
        const std::size_t arg_begin = peek().span.begin;
        ExprPtr arg = expr();
        if (at_keyword("over")) {
          advance();
          ExprPtr base = expr();
          arg = node(Over{arg, base}, arg_begin);
        }
        c.args.push_back(std::move(arg));
        if (!at(TokenKind::Comma)) break;
        advance();
      }
    }
    expect(TokenKind::RParen, "',' or ')'");
    return node(std::move(c), begin);
  }

  RingDesc ring_product(RingDesc first) {
    if (!at_product_x()) return first;
    RingDesc product;
    product.kind = RingDesc::Kind::Product;
    product.children.push_back(std::move(first));
    while (at_product_x()) {
      advance();
      product.children.push_back(ring_atom());
    }
    return product;
  }

  RingDesc ring_expr() { return ring_product(ring_atom()); }

  RingDesc ring_atom() {
    RingDesc r;
    if (at_keyword("Z")) {
      advance();
      expect(TokenKind::Slash, "'/'");
      const Span s = peek().span;
      r.kind = RingDesc::Kind::ZMod;
      r.modulus = number();
      if (r.modulus == 0) throw SyntaxError(s, "Z/n needs n >= 1");
      return r;
    }
    if (at_keyword("P")) {
      advance();
      r.kind = RingDesc::Kind::PowerSet;
      r.labels = labels();
      return r;
    }
    if (at_keyword("Q")) {
      advance();
      expect(TokenKind::LParen, "'('");
      r.kind = RingDesc::Kind::Quotient;
      r.children.push_back(ring_expr());
      while (at(TokenKind::Comma)) {
        advance();
        r.generators.push_back(elem_lit());
      }
      expect(TokenKind::RParen, "',' or ')'");
      return r;
    }
    if (at_keyword("B")) {
      advance();
      expect(TokenKind::LParen, "'('");
      r.kind = RingDesc::Kind::Booleanization;
      r.children.push_back(ring_expr());
      expect(TokenKind::RParen, "')'");
      return r;
    }
    if (at(TokenKind::LParen)) {
      advance();
      r = ring_expr();
      expect(TokenKind::RParen, "')'");
      return r;
    }
    fail({"'Z/n'", "'P{...}'", "'Q(...)'", "'B(...)'", "'('"});
  }

  ElemLit elem_lit() {
    if (at(TokenKind::Number)) return ElemLit{number()};
    if (at(TokenKind::LBrace)) return ElemLit{labels()};
    if (at(TokenKind::LParen)) {
      advance();
      ElemLit::Tuple t;
      while (true) {
        t.items.push_back(elem_lit());
        if (!at(TokenKind::Comma)) break;
        advance();
      }
      expect(TokenKind::RParen, "',' or ')'");
      return ElemLit{std::move(t)};
    }
    fail({"number", "set literal", "tuple"});
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

std::string describe(const DslError& e, std::string_view source) {
  const Span s = e.span();
  std::string out = "error at " + std::to_string(s.begin) + ".." + std::to_string(s.end) + ": " + e.what();
  if (!source.empty() && source.find('\n') == std::string_view::npos && s.begin <= source.size()) {
    out += "\n  " + std::string(source) + "\n  " + std::string(s.begin, ' ') +
           std::string(std::max<std::size_t>(1, s.end - s.begin), '^');
  }
  return out;
}

}  // namespace stone::dsl
