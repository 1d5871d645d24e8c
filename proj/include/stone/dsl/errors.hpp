#pragma once

#include <string>
#include <vector>

#include "stone/dsl/token.hpp"
#include "stone/error.hpp"

namespace stone::dsl {

/// Any error attributable to a region of DSL source.
class DslError : public Error {
 public:
  DslError(Span span, const std::string& what) : Error(what), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

class SyntaxError : public DslError {
 public:
  SyntaxError(Span span, const std::string& what, std::vector<std::string> expected = {})
      : DslError(span, what), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

/// An ill-typed operand or unknown name.
class TypeError : public DslError {
 public:
  using DslError::DslError;
};

/// "error at 4..7: message" with a caret line under `source`.
std::string describe(const DslError& e, std::string_view source);

}  // namespace stone::dsl
