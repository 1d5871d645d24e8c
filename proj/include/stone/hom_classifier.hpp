#pragma once

// Ring homs P(Y) -> P(X) between finite power set rings: every one is P(f)
// for a unique f: X -> Y.

#include <optional>
#include <string>
#include <vector>

#include "stone/powerset_ring.hpp"

namespace stone {

/// Images of the atoms {y} of P(Y) in P(X).
struct AtomAssignment {
  Universe source;  // Y
  Universe target;  // X
  std::vector<SetElem> images;

  /// Pairwise disjoint with union X.
  bool valid() const;
  /// Throws DomainError unless valid().
  RingHomPS to_hom() const;
};

/// Bound on |Y| and |X| for enumerate_homs.
inline constexpr std::size_t kMaxHomUniverse = 5;

AtomAssignment assignment_of(const RingHomPS& phi);

/// Every unital ring hom P(Y) -> P(X), one per function X -> Y, in the order
/// of all_functions(X, Y).
std::vector<RingHomPS> enumerate_homs(const Universe& y, const Universe& x);

/// The f: X -> Y with phi = P(f): x goes to the y with phi^{-1}(m_x) = m_y.
/// Throws ConsistencyError if P(f) differs from phi.
SetFunction hom_to_function(const RingHomPS& phi);

struct ImageCharacterization {
  bool condition = false;  // Fin(Y) + phi^{-1}(m_x) = P(Y) for every x
  bool induced = false;    // phi = P(hom_to_function(phi))
  std::string note;
  bool holds() const { return condition && induced; }
};

ImageCharacterization image_characterization_check(const RingHomPS& phi);

/// P(A) as a subset of the universe of all subsets of X, labeled by
/// SetElem::to_string in mask order.
SetElem powerset_of(const SetElem& a, const Universe& subsets_universe);
/// The universe whose labels are the subsets of X.
Universe subsets_universe(const Universe& x);

struct PowersetMapReport {
  bool multiplicative = true;
  bool unital = true;
  bool additive = true;
  /// First pair A, B (in mask order) with P(A + B) != P(A) + P(B).
  std::optional<std::pair<SetElem, SetElem>> counterexample;
};

/// Checks A -> P(A), P(X) -> P(P(X)), on every pair of subsets.
PowersetMapReport powerset_map_report(const Universe& x);

}  // namespace stone
