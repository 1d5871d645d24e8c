#include "stone/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "stone/detail/ring_impl.hpp"
#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone {
namespace {

constexpr std::uint64_t kBruteForceMaxSize = 16;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

template <class Pred>
BitSet members_where(const Ring& ring, Pred pred) {
  require_enumerable(ring.size(), "spectrum of " + ring.descriptor());
  BitSet members(ring.size());
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    if (pred(ring.element(i))) members.set(i);
  }
  return members;
}

std::vector<PrimeIdeal> structural_primes(const Ring& ring) {
  std::vector<PrimeIdeal> out;
  switch (ring.kind()) {
    case RingKind::ZMod: {
      for (std::uint64_t p : prime_factors(ring.modulus())) {
        out.push_back({ring, members_where(ring, [p](const RingElem& e) { return e.index() % p == 0; }),
                       PrimeSource::Structural, "(" + std::to_string(p) + ")"});
      }
      break;
    }
    case RingKind::Product: {
      const auto& factors = ring.factors();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& q : structural_primes(factors[i])) {
          out.push_back({ring,
                         members_where(ring, [&](const RingElem& e) { return q.members.test(ring.component(e, i).index()); }),
                         PrimeSource::Structural, "#" + std::to_string(i + 1) + q.name});
        }
      }
      break;
    }
    case RingKind::PowerSet: {
      const Universe& u = ring.universe();
      for (std::size_t x = 0; x < u.size(); ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        out.push_back({ring, members_where(ring, [bit](const RingElem& e) { return (e.index() & bit) == 0; }),
                       PrimeSource::Structural, "m_" + u.label(x)});
      }
      break;
    }
    case RingKind::Quotient: {
      const Ring& base = ring.base();
      for (const auto& p : structural_primes(base)) {
        const auto& gens = ring.quotient_generators();
        const bool contains_ideal =
            std::all_of(gens.begin(), gens.end(), [&](const RingElem& g) { return p.members.test(g.index()); });
        if (!contains_ideal) continue;
        out.push_back({ring,
                       members_where(ring, [&](const RingElem& e) { return p.members.test(ring.to_base(e).index()); }),
                       PrimeSource::Structural, p.name});
      }
      break;
    }
    case RingKind::Booleanization: {
      for (const auto& a : atoms(ring)) {
        out.push_back({ring, members_where(ring, [&](const RingElem& e) { return (e * a).is_zero(); }),
                       PrimeSource::Structural, "ann(" + a.to_string() + ")"});
      }
      break;
    }
  }
  return out;
}

std::set<std::vector<std::uint64_t>> member_signature(const std::vector<PrimeIdeal>& primes) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& p : primes) {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(p.members, std::back_inserter(blocks));
    out.insert(std::move(blocks));
  }
  return out;
}

std::string point_list(const SpecSpace& space, PointSet s) {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!((s >> i) & 1U)) continue;
    if (!first) out += ", ";
    out += space.points()[i].name;
    first = false;
  }
  return out + "]";
}

nlohmann::json indices_json(PointSet s) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < 64; ++i) {
    if ((s >> i) & 1U) arr.push_back(i);
  }
  return arr;
}

}  // namespace

bool PrimeIdeal::contains(const RingElem& e) const {
  if (!(e.ring() == ring)) throw DomainError("PrimeIdeal::contains: element of another ring");
  return members.test(e.index());
}

std::vector<std::string> PrimeIdeal::member_strings() const {
  std::vector<std::string> out;
  for (auto i = members.find_first(); i != BitSet::npos; i = members.find_next(i)) {
    out.push_back(ring.element(i).to_string());
  }
  return out;
}

bool is_prime_ideal(const Ring& ring, const BitSet& members) {
  const auto elems = ring.elements();
  if (members.size() != elems.size()) return false;
  if (!members.test(ring.zero().index()) || members.test(ring.one().index())) return false;
  for (const auto& a : elems) {
    const bool a_in = members.test(a.index());
    for (const auto& b : elems) {
      const bool b_in = members.test(b.index());
      if (a_in && b_in && !members.test((a + b).index())) return false;
      if (a_in && !members.test((a * b).index())) return false;
      if (!a_in && !b_in && members.test((a * b).index())) return false;
    }
  }
  return true;
}

bool is_maximal_ideal(const Ring& ring, const BitSet& members) {
  if (!is_prime_ideal(ring, members)) return false;
  // R/I is a field iff each a outside I has some b with ab - 1 in I.
  const auto elems = ring.elements();
  const RingElem one = ring.one();
  for (const auto& a : elems) {
    if (members.test(a.index())) continue;
    const bool invertible = std::any_of(elems.begin(), elems.end(),
                                        [&](const RingElem& b) { return members.test((a * b - one).index()); });
    if (!invertible) return false;
  }
  return true;
}

std::vector<PrimeIdeal> spec_brute_force(const Ring& ring) {
  const std::uint64_t n = ring.size();
  if (n > kBruteForceMaxSize) {
    throw CapacityError("spec_brute_force: " + ring.descriptor() + " has more than 16 elements");
  }
  const auto& r = ring.impl();
  std::vector<std::uint32_t> multiples(n, 0);  // mask of r*a for each a
  std::vector<std::vector<std::uint64_t>> add(n, std::vector<std::uint64_t>(n));
  std::vector<std::vector<std::uint64_t>> mul(n, std::vector<std::uint64_t>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a][b] = r.add(a, b);
      mul[a][b] = r.mul(a, b);
      multiples[a] |= std::uint32_t{1} << mul[a][b];
    }
  }
  const std::uint32_t zero_bit = std::uint32_t{1} << r.zero();
  const std::uint32_t one_bit = std::uint32_t{1} << r.one();
  std::vector<PrimeIdeal> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (!(m & zero_bit) || (m & one_bit)) continue;
    bool ok = true;
    for (std::uint64_t a = 0; a < n && ok; ++a) {
      if (!((m >> a) & 1U)) continue;
      if (multiples[a] & ~m) ok = false;
      for (std::uint64_t b = a; b < n && ok; ++b) {
        if (((m >> b) & 1U) && !((m >> add[a][b]) & 1U)) ok = false;
      }
    }
    for (std::uint64_t a = 0; a < n && ok; ++a) {
      if ((m >> a) & 1U) continue;
      for (std::uint64_t b = a; b < n && ok; ++b) {
        if (!((m >> b) & 1U) && ((m >> mul[a][b]) & 1U)) ok = false;
      }
    }
    if (!ok) continue;
    BitSet members(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) members.set(i);
    }
    out.push_back({ring, std::move(members), PrimeSource::BruteForce, "P" + std::to_string(out.size())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// SpecSpace

SpecSpace::SpecSpace(Ring ring, std::vector<PrimeIdeal> points) : ring_(std::move(ring)), points_(std::move(points)) {
  if (points_.size() > kMaxSpecPoints) {
    throw CapacityError("spectrum of " + ring_.descriptor() + " has " + std::to_string(points_.size()) +
                        " points; at most " + std::to_string(kMaxSpecPoints) + " are supported");
  }
  const std::size_t k = points_.size();
  minimal_open_.assign(k, all());
  for (const auto& f : ring_.elements()) {
    const PointSet d = basic(f);
    for (std::size_t i = 0; i < k; ++i) {
      if ((d >> i) & 1U) minimal_open_[i] &= d;
    }
  }
  // In a finite space a set is open iff it contains the minimal open
  // neighbourhood of each of its points.
  for (PointSet v = 0; v <= all(); ++v) {
    bool open = true;
    for (std::size_t i = 0; i < k && open; ++i) {
      if ((v >> i) & 1U) open = (minimal_open_[i] & ~v) == 0;
    }
    if (open) opens_.push_back(v);
    if (v == all()) break;
  }
}

PointSet SpecSpace::basic(const RingElem& f) const {
  if (!(f.ring() == ring_)) throw DomainError("D(f): " + f.to_string() + " is not in " + ring_.descriptor());
  PointSet out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!points_[i].members.test(f.index())) out |= PointSet{1} << i;
  }
  return out;
}

bool SpecSpace::is_open(PointSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

std::string SpecSpace::to_string(PointSet s) const { return point_list(*this, s); }

SpecSpace spec(const Ring& ring) {
  auto primes = structural_primes(ring);
  if (ring.size() <= kBruteForceMaxSize) {
    if (member_signature(primes) != member_signature(spec_brute_force(ring))) {
      throw ConsistencyError("spec: structural and exhaustive spectra of " + ring.descriptor() + " differ");
    }
  }
  return SpecSpace(ring, std::move(primes));
}

PointSet d_locus(const RingElem& f, const SpecSpace& space) { return space.basic(f); }

// ---------------------------------------------------------------------------
// Clopens and the Stone map

ClopenAlgebra::ClopenAlgebra(const SpecSpace& space) : all_(space.all()) {
  for (PointSet v : space.opens()) {
    if (space.is_closed(v)) clopens_.push_back(v);
  }
}

bool ClopenAlgebra::contains(PointSet s) const { return std::binary_search(clopens_.begin(), clopens_.end(), s); }

ClopenAlgebra clop(const SpecSpace& space) { return ClopenAlgebra(space); }

StoneMap stone_map(const Ring& ring) {
  Ring b = booleanize(ring);
  SpecSpace s = spec(ring);
  const ClopenAlgebra c = clop(s);
  const auto elems = b.elements();
  std::vector<PointSet> locus;
  locus.reserve(elems.size());
  for (const auto& e : elems) locus.push_back(s.basic(b.to_base(e)));

  StoneEvidence ev;
  std::vector<PointSet> sorted = locus;
  std::sort(sorted.begin(), sorted.end());
  ev.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  ev.onto_clopens = sorted == c.clopens();
  ev.additive = true;
  ev.multiplicative = true;
  for (const auto& e : elems) {
    for (const auto& f : elems) {
      const PointSet de = locus[e.index()];
      const PointSet df = locus[f.index()];
      if (locus[(e + f).index()] != ClopenAlgebra::add(de, df)) ev.additive = false;
      if (locus[(e * f).index()] != ClopenAlgebra::mul(de, df)) ev.multiplicative = false;
    }
  }
  ev.unital = locus[b.one().index()] == s.all() && locus[b.zero().index()] == 0;
  if (!ev.all()) throw ConsistencyError("stone_map: verification failed for " + ring.descriptor());
  return StoneMap{std::move(b), std::move(s), std::move(locus), ev};
}

bool clopens_match_booleanization(const Ring& ring) {
  const Ring b = booleanize(ring);
  const SpecSpace s = spec(ring);
  const SpecSpace sb = spec(b);
  const ClopenAlgebra cb = clop(sb);
  const ClopenAlgebra c = clop(s);
  std::vector<std::pair<PointSet, PointSet>> pairs;
  for (const auto& e : b.elements()) pairs.emplace_back(s.basic(b.to_base(e)), sb.basic(e));
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) return false;  // D(e) determines e
  }
  std::vector<PointSet> sources;
  std::vector<PointSet> images;
  for (const auto& [d, dp] : pairs) {
    sources.push_back(d);
    images.push_back(dp);
  }
  std::sort(images.begin(), images.end());
  if (sources != c.clopens() || images != cb.clopens()) return false;
  auto image_of = [&](PointSet d) {
    return std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(d, PointSet{0}))->second;
  };
  for (const auto& [d1, i1] : pairs) {
    for (const auto& [d2, i2] : pairs) {
      if (image_of(d1 ^ d2) != (i1 ^ i2)) return false;
      if (image_of(d1 & d2) != (i1 & i2)) return false;
    }
  }
  return image_of(c.one()) == cb.one();
}

std::vector<F2Hom> homs_to_f2(const Ring& ring) {
  std::vector<F2Hom> out;
  const Ring f2 = Ring::zmod(2);
  const SpecSpace space = spec(ring);
  for (const auto& p : space.points()) {
    if (ring.size() != 2 * p.size()) continue;
    F2Hom h{ring, p};
    if (ring.size() <= 4096) {
      std::vector<std::uint64_t> table;
      for (const auto& e : ring.elements()) table.push_back(h(e));
      if (auto why = hom_violation(ring, f2, table)) throw ConsistencyError("homs_to_f2: " + *why);
    }
    out.push_back(std::move(h));
  }
  return out;
}

HomSpecCorrespondence hom_spectrum_correspondence(const Ring& ring) {
  HomSpecCorrespondence out;
  out.homs = homs_to_f2(ring);
  const SpecSpace s = spec(ring);
  std::vector<bool> hit(s.size(), false);
  bool injective = true;
  for (const auto& h : out.homs) {
    const auto& pts = s.points();
    auto it = std::find_if(pts.begin(), pts.end(), [&](const PrimeIdeal& p) { return p.members == h.kernel.members; });
    if (it == pts.end()) throw ConsistencyError("hom kernel is not a point of the spectrum");
    const auto idx = static_cast<std::size_t>(it - pts.begin());
    if (hit[idx]) injective = false;
    hit[idx] = true;
    out.kernel_point.push_back(idx);
  }
  out.bijective = injective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return out;
}

bool dlocus_order_check(const SetElem& a, const SetElem& b) {
  const bool subset = a.is_subset_of(b);
  const Ring r = Ring::power_set(a.universe());
  const SpecSpace s = spec(r);
  const PointSet da = s.basic(r.subset(a));
  const PointSet db = s.basic(r.subset(b));
  const bool contained = (da & ~db) == 0;
  if (subset != contained) {
    throw ConsistencyError("dlocus_order_check: A subset B and D(A) subset D(B) disagree for " + a.to_string() +
                           ", " + b.to_string());
  }
  return subset;
}

nlohmann::json spec_to_json(const SpecSpace& space) {
  nlohmann::json j;
  j["ring"] = space.ring().descriptor();
  j["point_names"] = nlohmann::json::array();
  j["points"] = nlohmann::json::array();
  for (const auto& p : space.points()) {
    j["point_names"].push_back(p.name);
    j["points"].push_back(p.member_strings());
  }
  j["opens"] = nlohmann::json::array();
  for (PointSet v : space.opens()) j["opens"].push_back(indices_json(v));
  j["clopens"] = nlohmann::json::array();
  const ClopenAlgebra clopens = clop(space);
  for (PointSet v : clopens.clopens()) j["clopens"].push_back(indices_json(v));
  j["stone_map"] = nlohmann::json::array();
  for (const auto& e : idempotents(space.ring())) {
    j["stone_map"].push_back({{"idempotent", e.to_string()}, {"locus", indices_json(space.basic(e))}});
  }
  return j;
}

}  // namespace stone
