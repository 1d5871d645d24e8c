#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stone::dsl {

/// Exit statuses of cli().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name.
///
///   repl
///   eval <expr> [--universe a,b,...] [--json]
///   spec <ring> [--json]
///   check <suite> [--size n] [--seed s] [--ring R] [--json]
///   scheme check <size>
///   export <expr> --out <path>
int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);
int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The grammar summary printed on usage errors and by `:help`.
const std::string& grammar_help();

/// Reads lines from `in` until EOF or `:quit`; returns 0.
int repl(std::istream& in, std::ostream& out);

}  // namespace stone::dsl
