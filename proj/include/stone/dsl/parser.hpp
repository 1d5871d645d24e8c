#pragma once

#include <string_view>
#include <vector>

#include "stone/dsl/ast.hpp"
#include "stone/dsl/errors.hpp"
#include "stone/dsl/token.hpp"

namespace stone::dsl {

/// A full program: an expression, `let NAME = expr` (binding without body),
/// or `check SUITE {--flag value}`. Throws SyntaxError.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

}  // namespace stone::dsl
