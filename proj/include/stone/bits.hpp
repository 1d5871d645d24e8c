#pragma once

#include <cstdint>

#include <boost/dynamic_bitset.hpp>

namespace stone {

using BitSet = boost::dynamic_bitset<std::uint64_t>;

}  // namespace stone
