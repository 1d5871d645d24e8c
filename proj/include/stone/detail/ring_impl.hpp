#pragma once

// Index-level arithmetic behind Ring. Element i of a ring is its i-th
// element in enumeration order.

#include <cstdint>
#include <string>

#include "stone/finite_ring.hpp"

namespace stone::detail {

class RingImpl {
 public:
  explicit RingImpl(RingKind kind) : kind_(kind) {}
  virtual ~RingImpl() = default;

  RingKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }

  virtual std::uint64_t size() const = 0;
  virtual std::uint64_t zero() const = 0;
  virtual std::uint64_t one() const = 0;
  virtual std::uint64_t add(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::uint64_t neg(std::uint64_t a) const = 0;
  virtual std::string render(std::uint64_t a) const = 0;

 protected:
  std::string descriptor_;

 private:
  RingKind kind_;
};

}  // namespace stone::detail
