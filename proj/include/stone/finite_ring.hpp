#pragma once

// Finite commutative rings given structurally: Z/n, finite products, power
// set rings, quotients by finitely generated ideals, and Booleanizations.
// Every ring enumerates its elements in a fixed order; a RingElem is an index
// into that order, and arithmetic is computed from the descriptor.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "stone/bits.hpp"
#include "stone/powerset_ring.hpp"

namespace stone {

enum class RingKind { ZMod, Product, PowerSet, Quotient, Booleanization };

class Ideal;
class RingElem;

namespace detail {
class RingImpl;
}

class Ring {
 public:
  /// Z/n, n >= 1. Z/1 is the zero ring.
  static Ring zmod(std::uint64_t n);
  /// Componentwise product of one or more factors.
  static Ring product(std::vector<Ring> factors);
  /// P(X). Element indices are membership masks, so |X| <= 63.
  static Ring power_set(Universe universe);
  /// base/(generators). Power set bases use the closed form P(X)/P(A) = P(A^c);
  /// other bases enumerate cosets and keep the least-index representative.
  static Ring quotient(const Ring& base, std::span<const RingElem> generators);
  /// The idempotents of `base` with e (+) f = e + f - 2ef and the inherited product.
  static Ring booleanization(const Ring& base);

  RingKind kind() const;
  std::uint64_t size() const;
  /// `Z/12`, `Z/2 x Z/2`, `P{a,b,c}`, `Q(Z/12, 4)`, `B(Z/12)`.
  std::string descriptor() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem element(std::uint64_t index) const;
  /// n * 1.
  RingElem from_integer(std::int64_t n) const;
  /// Every element in index order. Guarded by the enumeration limit.
  std::vector<RingElem> elements() const;

  /// Additive order of 1 (1 for the zero ring).
  std::uint64_t characteristic() const;
  bool is_zero_ring() const { return size() == 1; }

  // Descriptor-specific accessors. Each throws DomainError on the wrong kind.
  std::uint64_t modulus() const;
  const std::vector<Ring>& factors() const;
  const Universe& universe() const;
  /// Base ring of a Quotient or Booleanization.
  const Ring& base() const;
  /// Generators of a Quotient's ideal, as base elements.
  const std::vector<RingElem>& quotient_generators() const;

  RingElem tuple(const std::vector<RingElem>& components) const;
  RingElem component(const RingElem& e, std::size_t factor) const;
  RingElem subset(const SetElem& s) const;
  SetElem as_subset(const RingElem& e) const;
  /// Quotient: class of a base element. Booleanization: the base idempotent as
  /// an element of B(R) (DomainError if not idempotent).
  RingElem from_base(const RingElem& e) const;
  /// Quotient: least-index representative. Booleanization: the idempotent itself.
  RingElem to_base(const RingElem& e) const;

  friend bool operator==(const Ring& a, const Ring& b);

  const detail::RingImpl& impl() const { return *impl_; }

 private:
  explicit Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::RingImpl> impl_;
};

class RingElem {
 public:
  RingElem(Ring ring, std::uint64_t index);

  const Ring& ring() const { return ring_; }
  std::uint64_t index() const { return index_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_idempotent() const;
  std::string to_string() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator<(const RingElem& a, const RingElem& b) { return a.index_ < b.index_; }

 private:
  Ring ring_;
  std::uint64_t index_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& e);

/// An ideal stored as a membership mask over the ring's enumeration order.
class Ideal {
 public:
  /// The additive span of all multiples r*g. Requires an enumerable ring.
  static Ideal generated_by(const Ring& ring, std::span<const RingElem> generators);
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const BitSet& mask() const { return members_; }
  bool contains(const RingElem& e) const;
  std::uint64_t size() const { return members_.count(); }
  bool is_proper() const;
  std::vector<RingElem> members() const;
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.ring_ == b.ring_ && a.members_ == b.members_; }

 private:
  Ideal(Ring ring, BitSet members) : ring_(std::move(ring)), members_(std::move(members)) {}
  Ring ring_;
  BitSet members_;
};

/// A tabulated ring homomorphism, validated on construction.
class RingHom {
 public:
  /// Throws DomainError if the table does not preserve 0, 1, + and *.
  RingHom(Ring source, Ring target, std::vector<std::uint64_t> table);

  template <class F>
  static RingHom tabulate(const Ring& source, const Ring& target, F&& f) {
    std::vector<std::uint64_t> table;
    for (const auto& e : source.elements()) table.push_back(f(e).index());
    return RingHom(source, target, std::move(table));
  }

  static RingHom identity(const Ring& ring);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<std::uint64_t>& table() const { return table_; }
  RingElem operator()(const RingElem& e) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  friend bool operator==(const RingHom& f, const RingHom& g);

 private:
  Ring source_;
  Ring target_;
  std::vector<std::uint64_t> table_;
};

/// `after` composed with `before`.
RingHom compose(const RingHom& after, const RingHom& before);

/// Why `table` is not a ring hom source -> target, or nullopt if it is.
std::optional<std::string> hom_violation(const Ring& source, const Ring& target,
                                         std::span<const std::uint64_t> table);

/// The tabulated form of a power set hom, between Ring::power_set rings.
RingHom to_ring_hom(const RingHomPS& phi);

std::vector<RingElem> idempotents(const Ring& ring);

/// e (+) f = e + f - 2ef, computed in the ring that contains e and f.
RingElem oplus(const RingElem& e, const RingElem& f);

Ring booleanize(const Ring& ring);

/// Restriction of phi to idempotents, as a hom B(R) -> B(S).
RingHom booleanize_hom(const RingHom& phi);

struct Localization {
  Ring ring;
  RingHom projection;
};

/// R_e realized as R/(1-e) with its canonical surjection. DomainError unless e*e = e.
Localization localize_at_idempotent(const Ring& ring, const RingElem& e);

bool is_boolean(const Ring& ring);
/// Minimal nonzero elements under e <= f iff ef = e. DomainError unless Boolean.
std::vector<RingElem> atoms(const Ring& ring);

}  // namespace stone
