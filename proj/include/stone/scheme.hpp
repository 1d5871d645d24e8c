#pragma once

// The structure sheaf A -> P(A) on a finite discrete space, the morphism
// (eta, eta#) to Spec P(X), stalks, and the functor from sets to schemes.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stone/finite_ring.hpp"
#include "stone/powerset_ring.hpp"
#include "stone/spectrum.hpp"

namespace stone {

/// Spaces up to this size have every open and restriction tabulated.
inline constexpr std::size_t kMaxTabulatedSheaf = 10;

/// A finite set with every subset open.
class DiscreteSpace {
 public:
  explicit DiscreteSpace(Universe points) : points_(std::move(points)) {}
  const Universe& points() const { return points_; }
  /// Every subset. Guarded.
  std::vector<SetElem> opens() const { return points_.all_subsets(); }

 private:
  Universe points_;
};

/// Sections over A are the subsets of A, i.e. the ring P(A). Sections are
/// passed around as subsets of X.
class StructureSheaf {
 public:
  /// Throws CapacityError when |X| exceeds kMaxTabulatedSheaf.
  explicit StructureSheaf(Universe x);

  const DiscreteSpace& space() const { return space_; }
  const Universe& universe() const { return space_.points(); }

  /// The universe A, whose power set is O(A).
  Universe section_universe(const SetElem& a) const;
  Ring sections(const SetElem& a) const;
  /// P(B) -> P(A), S -> S n A, for A a subset of B.
  RingHomPS restriction(const SetElem& b, const SetElem& a) const;
  /// S n A for a section S over some open containing A.
  SetElem restrict(const SetElem& section, const SetElem& a) const;

  struct PresheafEvidence {
    std::size_t pairs = 0;
    std::size_t triples = 0;
    bool identity = true;     // restriction along A to A
    bool composition = true;  // C -> B -> A equals C -> A
    bool holds() const { return identity && composition; }
  };
  /// Every A subset-of B subset-of C.
  PresheafEvidence check_presheaf() const;

 private:
  DiscreteSpace space_;
};

StructureSheaf structure_sheaf(const Universe& x);

/// The union of `sections`, after checking each is a subset of its cover
/// member, the cover has union A, and sections agree on every overlap.
/// Throws CompatibilityError naming the first disagreeing pair.
SetElem check_gluing(const SetElem& a, std::span<const SetElem> cover, std::span<const SetElem> sections);

struct SheafEvidence {
  std::size_t covers = 0;
  std::size_t families = 0;
  std::size_t incompatible_families = 0;
  bool locality = true;  // sections agreeing on every member are equal
  bool gluing = true;    // compatible families glue, incompatible ones are refused
  bool holds() const { return locality && gluing; }
};

/// Every cover of every open and every family of sections on it.
SheafEvidence check_sheaf_exhaustive(const Universe& x);
/// `trials` random covers with random families, from a fixed seed.
SheafEvidence check_sheaf_random(const Universe& x, std::size_t trials, std::uint64_t seed);

struct RingedSpaceMorphism {
  Universe x;
  SpecSpace target;
  std::vector<std::size_t> point_map;  // x index -> point of target
  bool bijective = false;
  bool homeomorphism = false;
  bool preimage_of_basic = false;  // eta^{-1}(D(A)) = A for every A
  /// eta#_A : R_A -> P(A), indexed by the mask of A.
  std::vector<RingHom> sharp;
  bool sharp_isomorphisms = false;
  bool sharp_compatible = false;  // commutes with restrictions along A subset-of B
  bool all() const {
    return bijective && homeomorphism && preimage_of_basic && sharp_isomorphisms && sharp_compatible;
  }
};

/// x -> m_x with eta#_A the chain R_A = R/P(A^c) = P(A). Requires |X| <= 6.
RingedSpaceMorphism eta(const Universe& x);

struct Stalk {
  Ring ring;  // P({x})
  bool is_field = false;
};

/// The colimit of O(A) over opens A containing x, which is O({x}).
Stalk stalk(const Universe& x, std::string_view label);
/// The image of a section in the stalk at x: its membership bit.
std::uint8_t germ(const SetElem& section, std::string_view label);

struct AffineEvidence {
  bool affine = false;
  bool eta_homeomorphism = false;
  bool eta_sharp_iso = false;
  std::string note;
};

AffineEvidence is_affine(const Universe& x);

/// (f, f#) with f#_A = P(f_A) for f_A : f^{-1}(A) -> A.
class SchemeMorphism {
 public:
  explicit SchemeMorphism(SetFunction f) : f_(std::move(f)) {}

  const SetFunction& map() const { return f_; }
  /// P(A) -> P(f^{-1}(A)) for A a subset of the codomain.
  RingHomPS sharp(const SetElem& a) const;
  /// f# commutes with restriction along every A subset-of B.
  bool compatible_with_restrictions() const;

 private:
  SetFunction f_;
};

SchemeMorphism scheme_morphism(const SetFunction& f);
/// Same point map and the same comap on every open.
bool same_morphism(const SchemeMorphism& a, const SchemeMorphism& b);

struct FunctorEvidence {
  std::size_t morphisms = 0;
  std::size_t compositions = 0;
  bool identity = true;
  bool composition = true;
  bool compatibility = true;
  bool faithful = true;  // distinct functions give distinct global comaps
  bool holds() const { return identity && composition && compatibility && faithful; }
};

/// Functor laws over every universe {1..n}, n <= max_size, and every pair of
/// composable functions between them.
FunctorEvidence check_functor_laws(std::size_t max_size);
/// Faithfulness alone for all |X|, |Y| <= max_size.
bool check_faithful(std::size_t max_size);

struct SeparatednessEvidence {
  std::size_t pairs = 0;
  bool generated = true;       // O(U n V) is spanned by products of restrictions
  bool tensor_matches = true;  // P(U) (x) P(V) = P(U n V) via the canonical map
  std::string note;
  bool holds() const { return generated && tensor_matches; }
};

/// For every pair of opens U, V of a finite discrete space.
SeparatednessEvidence separatedness_witness(const Universe& x);

}  // namespace stone
