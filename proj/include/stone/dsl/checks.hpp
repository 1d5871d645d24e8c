#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stone/dsl/value.hpp"
#include "stone/finite_ring.hpp"

namespace stone::dsl {

struct CheckOptions {
  std::size_t size = 3;  // largest universe, clamped per suite
  std::uint64_t seed = 1;
  /// Restricts ring-based suites to this ring.
  std::optional<Ring> ring;
};

/// stone, maximal, generated, homs, points, fincofin, tensor, dlocus,
/// sheaf, eta, functor, then all.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
Report run_check(const std::string& suite, const CheckOptions& options);

/// The default ring corpus for the stone suite.
std::vector<Ring> stone_corpus(std::size_t max_powerset);

}  // namespace stone::dsl
