#pragma once

#include <cstdint>
#include <string_view>

namespace stone {

/// Default ceiling on the number of elements any exhaustive operation may
/// enumerate (2^20). Power sets of universes larger than 20 are refused.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 20;

std::uint64_t enumeration_limit();
void set_enumeration_limit(std::uint64_t limit);

/// Reads STONE_ENUM_LIMIT from the environment, if set, and installs it.
/// Returns false when the variable is present but not a positive integer.
bool load_enumeration_limit_from_env();

/// Throws CapacityError if `count` exceeds the current limit.
void require_enumerable(std::uint64_t count, std::string_view what);

/// Same check for 2^bits elements, safe for any bit count.
void require_enumerable_power(std::size_t bits, std::string_view what);

/// Restores the previous limit on destruction. Test helper.
class ScopedEnumerationLimit {
 public:
  explicit ScopedEnumerationLimit(std::uint64_t limit) : previous_(enumeration_limit()) {
    set_enumeration_limit(limit);
  }
  ~ScopedEnumerationLimit() { set_enumeration_limit(previous_); }
  ScopedEnumerationLimit(const ScopedEnumerationLimit&) = delete;
  ScopedEnumerationLimit& operator=(const ScopedEnumerationLimit&) = delete;

 private:
  std::uint64_t previous_;
};

}  // namespace stone
