#pragma once

// The power set ring P(X) of a finite labeled universe X: symmetric difference
// as addition, intersection as multiplication, the empty set as zero and X as
// one. Also function-induced homomorphisms P(f): P(Y) -> P(X) and the
// (always principal) ideals P(A).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stone/bits.hpp"

namespace stone {

class SetElem;

/// A finite ordered set of distinct labels. Label i occupies bit i of every
/// SetElem over this universe. Two universes compare equal iff their label
/// sequences are identical.
class Universe {
 public:
  Universe();  // the empty universe
  explicit Universe(std::vector<std::string> labels);

  /// Labels "first", "first+1", ... as decimal strings.
  static Universe numbered(std::size_t count, std::size_t first = 1);

  std::size_t size() const;
  const std::string& label(std::size_t index) const;
  const std::vector<std::string>& labels() const;
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws DomainError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  SetElem empty_set() const;
  SetElem full_set() const;
  SetElem singleton(std::size_t index) const;
  SetElem singleton(std::string_view label) const;
  SetElem subset(const std::vector<std::string>& labels) const;
  /// Bit i of `mask` selects label i. Requires size() <= 64.
  SetElem from_mask(std::uint64_t mask) const;

  /// Every subset, ordered by mask value. Guarded by the enumeration limit.
  std::vector<SetElem> all_subsets() const;

  /// The universe whose labels are the members of `subset`, in this order.
  Universe restrict_to(const SetElem& subset) const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// An element of P(X): a membership mask over a universe.
class SetElem {
 public:
  SetElem(Universe universe, BitSet bits);

  const Universe& universe() const { return universe_; }
  const BitSet& bits() const { return bits_; }

  bool contains(std::size_t index) const { return bits_.test(index); }
  bool contains(std::string_view label) const;
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_subset_of(const SetElem& other) const;
  SetElem complement() const;
  std::vector<std::size_t> indices() const;
  /// Requires universe().size() <= 64.
  std::uint64_t mask() const;

  /// Canonical text `{a,b,c}` in universe order; `{}` when empty.
  std::string to_string() const;
  /// Parses the canonical text form over `universe`.
  static SetElem parse(const Universe& universe, std::string_view text);

  /// `{"universe": [labels], "bits": "0101..."}`, character i is label i.
  nlohmann::json to_json() const;
  static SetElem from_json(const nlohmann::json& j);

  friend bool operator==(const SetElem& a, const SetElem& b);
  /// Orders by universe size first and then by mask; only meaningful within
  /// one universe.
  friend bool operator<(const SetElem& a, const SetElem& b);

 private:
  Universe universe_;
  BitSet bits_;
};

std::ostream& operator<<(std::ostream& os, const SetElem& s);

/// The set with the same member labels over `target`. DomainError if some
/// member label is missing from `target`.
SetElem transfer(const SetElem& s, const Universe& target);

/// Symmetric difference. Throws DomainError on universe mismatch.
SetElem ps_add(const SetElem& a, const SetElem& b);
/// Intersection.
SetElem ps_mul(const SetElem& a, const SetElem& b);
/// Ring negation; every element is its own negative.
SetElem ps_neg(const SetElem& a);
/// A + B - AB, checked against the bitwise union.
SetElem ps_union(const SetElem& a, const SetElem& b);
/// A - AB, checked against the set difference.
SetElem ps_diff(const SetElem& a, const SetElem& b);
/// 1 - A.
SetElem ps_complement(const SetElem& a);

inline SetElem operator+(const SetElem& a, const SetElem& b) { return ps_add(a, b); }
inline SetElem operator-(const SetElem& a, const SetElem& b) { return ps_add(a, b); }
inline SetElem operator*(const SetElem& a, const SetElem& b) { return ps_mul(a, b); }

/// A function X -> Z/2, stored as one value in {0, 1} per label.
struct Z2Function {
  Universe domain;
  std::vector<std::uint8_t> values;

  friend Z2Function operator+(const Z2Function& f, const Z2Function& g);
  friend Z2Function operator*(const Z2Function& f, const Z2Function& g);
  friend bool operator==(const Z2Function& f, const Z2Function& g) = default;
};

/// A -> characteristic function of A.
Z2Function char_iso(const SetElem& a);
/// Inverse of char_iso. Throws DomainError on values outside {0, 1}.
SetElem char_inverse(const Z2Function& f);

/// A total function between universes, stored as codomain indices.
class SetFunction {
 public:
  SetFunction(Universe domain, Universe codomain, std::vector<std::size_t> images);

  static SetFunction identity(const Universe& x);
  static SetFunction constant(const Universe& domain, const Universe& codomain,
                              std::size_t target);

  const Universe& domain() const { return domain_; }
  const Universe& codomain() const { return codomain_; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t operator()(std::size_t x) const { return images_[x]; }

  SetElem preimage(const SetElem& a) const;
  SetElem image(const SetElem& a) const;
  bool is_injective() const;
  bool is_surjective() const;

  /// "a->1, b->2".
  std::string to_string() const;

  friend bool operator==(const SetFunction& f, const SetFunction& g);

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<std::size_t> images_;
};

/// g after f.
SetFunction compose(const SetFunction& g, const SetFunction& f);

/// All |Y|^|X| functions X -> Y in lexicographic order of image tuples
/// (last domain element varies fastest). Guarded by the enumeration limit.
std::vector<SetFunction> all_functions(const Universe& domain, const Universe& codomain);

/// A unital ring homomorphism P(source) -> P(target), determined by the
/// images of the source singletons. Those images must be pairwise disjoint
/// and cover the target; the map is their additive extension.
class RingHomPS {
 public:
  RingHomPS(Universe source, Universe target, std::vector<SetElem> atom_images);

  static RingHomPS identity(const Universe& x);

  const Universe& source() const { return source_; }
  const Universe& target() const { return target_; }
  const std::vector<SetElem>& atom_images() const { return atom_images_; }

  SetElem operator()(const SetElem& a) const;
  /// Image of every source subset, ordered by mask value.
  std::vector<SetElem> table() const;

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const RingHomPS& f, const RingHomPS& g);

 private:
  Universe source_;
  Universe target_;
  std::vector<SetElem> atom_images_;
};

/// `after` composed with `before`.
RingHomPS compose(const RingHomPS& after, const RingHomPS& before);

/// P(f): P(Y) -> P(X), A -> f^{-1}(A), for f: X -> Y.
RingHomPS induced_hom(const SetFunction& f);

/// The ideal P(A) of P(X). Constructed from generators, it is normalized to
/// the union of those generators; the generator list is kept for printing.
class PSIdeal {
 public:
  PSIdeal(Universe universe, std::vector<SetElem> generators);

  const Universe& universe() const { return carrier_.universe(); }
  const SetElem& carrier() const { return carrier_; }
  const std::vector<SetElem>& generators() const { return generators_; }

  bool contains(const SetElem& a) const;
  bool is_zero() const { return carrier_.empty(); }
  bool is_proper() const { return carrier_.count() != carrier_.universe().size(); }
  /// Every subset of the carrier. Guarded.
  std::vector<SetElem> members() const;

  /// "P({a,b})".
  std::string to_string() const;

  friend bool operator==(const PSIdeal& a, const PSIdeal& b) { return a.carrier_ == b.carrier_; }

 private:
  SetElem carrier_;
  std::vector<SetElem> generators_;
};

PSIdeal principal_ideal(const SetElem& a);
/// (A_1, ..., A_n) = P(A_1 u ... u A_n). An empty list gives the zero ideal.
PSIdeal ideal_generated(const Universe& universe, std::span<const SetElem> generators);

/// P(X)/P(A) realized as P(A^c) with the surjection B -> B n A^c.
struct PSQuotient {
  Universe ring;
  RingHomPS projection;
  PSIdeal kernel;
};

PSQuotient quotient_by_subset(const SetElem& a);

/// m_x = P(X \ {x}). Throws DomainError for unknown labels.
PSIdeal point_maximal_ideal(const Universe& universe, std::string_view label);

/// {m_x : x in X}, in universe order. Empty for the empty universe.
std::vector<PSIdeal> maximal_ideals(const Universe& universe);

}  // namespace stone
