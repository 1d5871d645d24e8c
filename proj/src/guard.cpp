#include "stone/guard.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "stone/error.hpp"

namespace stone {
namespace {

std::atomic<std::uint64_t> g_limit{kDefaultEnumerationLimit};

}  // namespace

std::uint64_t enumeration_limit() { return g_limit.load(std::memory_order_relaxed); }

void set_enumeration_limit(std::uint64_t limit) { g_limit.store(limit, std::memory_order_relaxed); }

bool load_enumeration_limit_from_env() {
  const char* raw = std::getenv("STONE_ENUM_LIMIT");
  if (raw == nullptr) return true;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return false;
  set_enumeration_limit(value);
  return true;
}

void require_enumerable(std::uint64_t count, std::string_view what) {
  if (count > enumeration_limit()) {
    throw CapacityError(std::string(what) + ": " + std::to_string(count) +
                        " elements exceeds the enumeration limit of " +
                        std::to_string(enumeration_limit()) +
                        " (raise it with STONE_ENUM_LIMIT)");
  }
}

void require_enumerable_power(std::size_t bits, std::string_view what) {
  if (bits >= 63) {
    throw CapacityError(std::string(what) + ": 2^" + std::to_string(bits) +
                        " elements exceeds the enumeration limit");
  }
  require_enumerable(std::uint64_t{1} << bits, what);
}

}  // namespace stone
