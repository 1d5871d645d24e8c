#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stone/dsl/token.hpp"

namespace stone::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// An element written inside a ring literal: Q(Z/12, 4), Q(P{a,b}, {a}).
struct ElemLit {
  struct Tuple {
    std::vector<ElemLit> items;
  };
  std::variant<std::uint64_t, std::vector<std::string>, Tuple> value;
};

/// Z/n, P{..}, Q(base, g..), B(base), and products R x S.
struct RingDesc {
  enum class Kind { ZMod, PowerSet, Quotient, Booleanization, Product };
  Kind kind = Kind::ZMod;
  std::uint64_t modulus = 0;        // ZMod
  std::vector<std::string> labels;  // PowerSet
  std::vector<RingDesc> children;   // base of Quotient / Booleanization, factors of Product
  std::vector<ElemLit> generators;  // Quotient
};

struct SetLiteral {
  std::vector<std::string> labels;
};
struct FinCofLiteral {
  bool cofinite = false;
  std::vector<std::uint64_t> support;
};
struct NumberLit {
  std::uint64_t value = 0;
};
struct Var {
  std::string name;
};
struct Binary {
  char op;  // + - * | & backslash
  ExprPtr left;
  ExprPtr right;
};
struct Complement {
  ExprPtr operand;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};
/// `algebra over base`, only as a call argument.
struct Over {
  ExprPtr algebra;
  ExprPtr base;
};
struct TupleExpr {
  std::vector<ExprPtr> items;
};
struct RingLiteral {
  RingDesc ring;
};
struct Let {
  std::string name;
  ExprPtr value;
  ExprPtr body;  // null for a REPL binding
};
/// `check suite --flag value ...`, only at top level.
struct Check {
  std::string suite;
  std::vector<std::pair<std::string, ExprPtr>> flags;
};

struct Expr {
  using Node = std::variant<SetLiteral, FinCofLiteral, NumberLit, Var, Binary, Complement, Call, Over, TupleExpr,
                            RingLiteral, Let, Check>;
  Node node;
  Span span;
};

template <class T>
ExprPtr make_expr(T node, Span span = {}) {
  return std::make_shared<const Expr>(Expr{std::move(node), span});
}

/// Structural equality; spans are ignored.
bool equal(const Expr& a, const Expr& b);
bool equal(const RingDesc& a, const RingDesc& b);
bool equal(const ElemLit& a, const ElemLit& b);

/// Canonical source text. parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);
std::string print(const RingDesc& r);
std::string print(const ElemLit& e);

}  // namespace stone::dsl
