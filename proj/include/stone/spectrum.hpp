#pragma once

// Prime spectra of finite rings with their Zariski topology, the clopen
// algebra, the D-locus map and the isomorphism B(R) -> Clop(Spec R).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stone/bits.hpp"
#include "stone/finite_ring.hpp"

namespace stone {

/// A subset of the points of a SpecSpace: bit i is point i.
using PointSet = std::uint64_t;

/// Spectra with more points than this are refused (open sets are enumerated).
inline constexpr std::size_t kMaxSpecPoints = 20;

enum class PrimeSource { Structural, BruteForce };

struct PrimeIdeal {
  Ring ring;
  BitSet members;  // over the ring's enumeration order
  PrimeSource source = PrimeSource::Structural;
  std::string name;  // "(2)", "m_a", ...

  bool contains(const RingElem& e) const;
  std::uint64_t size() const { return members.count(); }
  /// Member renderings in enumeration order.
  std::vector<std::string> member_strings() const;
};

/// True iff `members` is a proper ideal closed under + and absorbing under *,
/// with ab in P implying a in P or b in P.
bool is_prime_ideal(const Ring& ring, const BitSet& members);
/// True iff R/members has no ideals besides 0 and itself.
bool is_maximal_ideal(const Ring& ring, const BitSet& members);

class SpecSpace {
 public:
  SpecSpace(Ring ring, std::vector<PrimeIdeal> points);

  const Ring& ring() const { return ring_; }
  const std::vector<PrimeIdeal>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  PointSet all() const { return points_.empty() ? 0 : (~PointSet{0} >> (64 - points_.size())); }

  /// D(f) = primes not containing f.
  PointSet basic(const RingElem& f) const;
  /// Every Zariski open set, ascending as masks.
  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(all() & ~s); }
  /// Smallest open set containing point i.
  PointSet minimal_open(std::size_t i) const { return minimal_open_[i]; }

  /// Point names like "[(2), (3)]".
  std::string to_string(PointSet s) const;

 private:
  Ring ring_;
  std::vector<PrimeIdeal> points_;
  std::vector<PointSet> minimal_open_;
  std::vector<PointSet> opens_;
};

/// Spec(R) by structural rules; rings with at most 16 elements are also
/// searched exhaustively and the two answers must agree.
SpecSpace spec(const Ring& ring);
/// Every prime ideal found by testing all subsets of R. Requires |R| <= 16.
std::vector<PrimeIdeal> spec_brute_force(const Ring& ring);

PointSet d_locus(const RingElem& f, const SpecSpace& space);

/// The clopen subsets of a spectrum under symmetric difference and intersection.
class ClopenAlgebra {
 public:
  explicit ClopenAlgebra(const SpecSpace& space);

  const std::vector<PointSet>& clopens() const { return clopens_; }
  std::size_t size() const { return clopens_.size(); }
  bool contains(PointSet s) const;
  PointSet zero() const { return 0; }
  PointSet one() const { return all_; }
  static PointSet add(PointSet a, PointSet b) { return a ^ b; }
  static PointSet mul(PointSet a, PointSet b) { return a & b; }

 private:
  PointSet all_;
  std::vector<PointSet> clopens_;
};

ClopenAlgebra clop(const SpecSpace& space);

struct StoneEvidence {
  bool injective = false;
  bool onto_clopens = false;
  bool additive = false;        // D(e (+) f) = D(e) xor D(f)
  bool multiplicative = false;  // D(ef) = D(e) n D(f)
  bool unital = false;          // D(1) = Spec, D(0) = empty
  bool all() const { return injective && onto_clopens && additive && multiplicative && unital; }
};

/// The map e -> D(e) from B(R) to Clop(Spec R), tabulated over the idempotents.
struct StoneMap {
  Ring booleanization;
  SpecSpace spectrum;
  std::vector<PointSet> locus;  // indexed by element of `booleanization`
  StoneEvidence evidence;
};

/// Builds and verifies the map; throws ConsistencyError if verification fails.
StoneMap stone_map(const Ring& ring);

/// Checks that D(f) -> D'(f), Clop(Spec R) -> Clop(Spec B(R)), is a
/// well-defined ring isomorphism.
bool clopens_match_booleanization(const Ring& ring);

/// A hom R -> Z/2 determined by its kernel.
struct F2Hom {
  Ring source;
  PrimeIdeal kernel;
  std::uint8_t operator()(const RingElem& e) const { return kernel.contains(e) ? 0 : 1; }
};

/// Homs R -> Z/2: exactly the primes whose quotient has two elements.
std::vector<F2Hom> homs_to_f2(const Ring& ring);

struct HomSpecCorrespondence {
  std::vector<F2Hom> homs;
  std::vector<std::size_t> kernel_point;  // spec point index of each kernel
  bool bijective = false;
};

/// The map phi -> phi^{-1}(0) into spec(R).
HomSpecCorrespondence hom_spectrum_correspondence(const Ring& ring);

/// Returns A subset-of B and checks it against D(A) subset-of D(B) in
/// Spec P(X); throws ConsistencyError if they disagree.
bool dlocus_order_check(const SetElem& a, const SetElem& b);

/// Points as member lists, opens, clopens and the Stone map table.
nlohmann::json spec_to_json(const SpecSpace& space);

}  // namespace stone
