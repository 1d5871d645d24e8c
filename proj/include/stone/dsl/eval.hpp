#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stone/dsl/ast.hpp"
#include "stone/dsl/errors.hpp"
#include "stone/dsl/value.hpp"
#include "stone/finite_ring.hpp"

namespace stone::dsl {

struct Env {
  /// When unset, each evaluation infers its universe (see infer_universe).
  std::optional<Universe> universe;
  /// Top-level `let NAME = expr` bindings.
  std::map<std::string, Value> bindings;
};

/// Labels sorted with numerals first in numeric order, then the rest
/// lexicographically.
std::vector<std::string> natural_sort(std::vector<std::string> labels);

/// env.universe if set; otherwise every label of every set literal in `e`
/// together with the labels of bound sets that `e` mentions, naturally sorted.
Universe infer_universe(const Expr& e, const Env& env);

Ring build_ring(const RingDesc& desc);
/// A literal read in `ring`. Numbers are n * 1 in Z/n, products and power
/// sets; in quotients and Booleanizations they are read in the base ring.
RingElem coerce(const Ring& ring, const ElemLit& lit);
RingElem coerce(const Ring& ring, const Value& v);

/// Throws DslError (SyntaxError, TypeError, or a wrapped library error).
Value eval(const Expr& e, Env& env);
Value evaluate(std::string_view source, Env& env);

}  // namespace stone::dsl
