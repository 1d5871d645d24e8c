#include "stone/scheme.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "stone/error.hpp"
#include "stone/guard.hpp"
#include "stone/tensor.hpp"

namespace stone {

namespace {

bool is_submask(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// Every family of subsets of `a` whose union is `a`, as masks over P(a)
// indexed by subset mask. Families are visited as masks, so each appears once.
template <class F>
void for_each_cover(std::uint64_t a, F&& visit) {
  std::vector<std::uint64_t> subs;
  for (std::uint64_t s = a;; s = (s - 1) & a) {
    subs.push_back(s);
    if (s == 0) break;
  }
  std::sort(subs.begin(), subs.end());
  require_enumerable_power(subs.size(), "cover enumeration");
  const std::uint64_t families = std::uint64_t{1} << subs.size();
  std::vector<std::uint64_t> cover;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    std::uint64_t u = 0;
    cover.clear();
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if ((fam >> k) & 1U) {
        cover.push_back(subs[k]);
        u |= subs[k];
      }
    }
    if (u == a) visit(cover);
  }
}

std::vector<SetElem> to_sets(const Universe& x, const std::vector<std::uint64_t>& masks) {
  std::vector<SetElem> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(x.from_mask(m));
  return out;
}

bool compatible_masks(const std::vector<std::uint64_t>& cover, const std::vector<std::uint64_t>& sections) {
  for (std::size_t k = 0; k < cover.size(); ++k) {
    for (std::size_t l = k + 1; l < cover.size(); ++l) {
      if ((sections[k] & cover[l]) != (sections[l] & cover[k])) return false;
    }
  }
  return true;
}

// Checks one family through check_gluing; returns false if its verdict is wrong.
bool glue_one(const Universe& x, std::uint64_t a, const std::vector<std::uint64_t>& cover,
              const std::vector<std::uint64_t>& sections, SheafEvidence& ev) {
  const bool compatible = compatible_masks(cover, sections);
  const auto cs = to_sets(x, cover);
  const auto ss = to_sets(x, sections);
  ++ev.families;
  try {
    SetElem glued = check_gluing(x.from_mask(a), cs, ss);
    if (!compatible) return false;
    for (std::size_t k = 0; k < cover.size(); ++k) {
      if ((glued.mask() & cover[k]) != sections[k]) return false;
    }
    return true;
  } catch (const CompatibilityError&) {
    ++ev.incompatible_families;
    return !compatible;
  }
}

// Distinct sections over `a` have distinct restriction tuples.
bool local_on(std::uint64_t a, const std::vector<std::uint64_t>& cover) {
  std::set<std::vector<std::uint64_t>> seen;
  std::size_t count = 0;
  for (std::uint64_t s = a;; s = (s - 1) & a) {
    std::vector<std::uint64_t> tuple;
    for (auto c : cover) tuple.push_back(s & c);
    seen.insert(std::move(tuple));
    ++count;
    if (s == 0) break;
  }
  return seen.size() == count;
}

Universe sub(const Universe& x, const SetElem& a) { return x.restrict_to(a); }

}  // namespace

// ---------------------------------------------------------------------------
// StructureSheaf

StructureSheaf::StructureSheaf(Universe x) : space_(std::move(x)) {
  if (universe().size() > kMaxTabulatedSheaf) {
    throw CapacityError("structure_sheaf: " + std::to_string(universe().size()) + " points exceeds the tabulation bound " +
                        std::to_string(kMaxTabulatedSheaf));
  }
  require_enumerable_power(universe().size(), "structure_sheaf");
}

Universe StructureSheaf::section_universe(const SetElem& a) const { return sub(universe(), a); }

Ring StructureSheaf::sections(const SetElem& a) const { return Ring::power_set(section_universe(a)); }

RingHomPS StructureSheaf::restriction(const SetElem& b, const SetElem& a) const {
  if (!a.is_subset_of(b)) throw DomainError("restriction: " + a.to_string() + " is not inside " + b.to_string());
  const Universe ub = section_universe(b);
  const Universe ua = section_universe(a);
  std::vector<SetElem> images;
  images.reserve(ub.size());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    auto j = ua.find(ub.label(i));
    images.push_back(j ? ua.singleton(*j) : ua.empty_set());
  }
  return RingHomPS(ub, ua, std::move(images));
}

SetElem StructureSheaf::restrict(const SetElem& section, const SetElem& a) const { return ps_mul(section, a); }

StructureSheaf::PresheafEvidence StructureSheaf::check_presheaf() const {
  PresheafEvidence ev;
  const Universe& x = universe();
  const std::uint64_t n = std::uint64_t{1} << x.size();
  for (std::uint64_t c = 0; c < n; ++c) {
    const SetElem sc = x.from_mask(c);
    if (!(restriction(sc, sc) == RingHomPS::identity(section_universe(sc)))) ev.identity = false;
    for (std::uint64_t b = c;; b = (b - 1) & c) {
      const SetElem sb = x.from_mask(b);
      ++ev.pairs;
      const RingHomPS cb = restriction(sc, sb);
      for (std::uint64_t a = b;; a = (a - 1) & b) {
        const SetElem sa = x.from_mask(a);
        ++ev.triples;
        if (!(compose(restriction(sb, sa), cb) == restriction(sc, sa))) ev.composition = false;
        if (a == 0) break;
      }
      if (b == 0) break;
    }
  }
  return ev;
}

StructureSheaf structure_sheaf(const Universe& x) { return StructureSheaf(x); }

SetElem check_gluing(const SetElem& a, std::span<const SetElem> cover, std::span<const SetElem> sections) {
  if (cover.size() != sections.size()) throw DomainError("check_gluing: one section per cover member required");
  SetElem covered = a.universe().empty_set();
  for (std::size_t k = 0; k < cover.size(); ++k) {
    if (!cover[k].is_subset_of(a)) throw DomainError("check_gluing: cover member " + cover[k].to_string() + " leaves A");
    if (!sections[k].is_subset_of(cover[k])) {
      throw DomainError("check_gluing: section " + sections[k].to_string() + " is not over " + cover[k].to_string());
    }
    covered = ps_union(covered, cover[k]);
  }
  if (!(covered == a)) throw DomainError("check_gluing: members do not cover " + a.to_string());
  for (std::size_t k = 0; k < cover.size(); ++k) {
    for (std::size_t l = k + 1; l < cover.size(); ++l) {
      if (!(ps_mul(sections[k], cover[l]) == ps_mul(sections[l], cover[k]))) {
        throw CompatibilityError(k, l,
                                 "sections " + std::to_string(k) + " and " + std::to_string(l) +
                                     " disagree on " + ps_mul(cover[k], cover[l]).to_string());
      }
    }
  }
  SetElem glued = a.universe().empty_set();
  for (const auto& s : sections) glued = ps_union(glued, s);
  return glued;
}

SheafEvidence check_sheaf_exhaustive(const Universe& x) {
  if (x.size() > 3) throw CapacityError("check_sheaf_exhaustive: at most 3 points");
  SheafEvidence ev;
  const std::uint64_t n = std::uint64_t{1} << x.size();
  for (std::uint64_t a = 0; a < n; ++a) {
    for_each_cover(a, [&](const std::vector<std::uint64_t>& cover) {
      ++ev.covers;
      if (!local_on(a, cover)) ev.locality = false;
      // Every tuple of sections S_k subset-of A_k, compatible or not.
      std::vector<std::uint64_t> sections(cover.size(), 0);
      while (true) {
        if (!glue_one(x, a, cover, sections, ev)) ev.gluing = false;
        std::size_t k = 0;
        for (; k < cover.size(); ++k) {
          // Next submask of cover[k] in increasing order.
          sections[k] = (sections[k] - cover[k]) & cover[k];
          if (sections[k] != 0) break;
        }
        if (k == cover.size()) break;
      }
    });
  }
  return ev;
}

SheafEvidence check_sheaf_random(const Universe& x, std::size_t trials, std::uint64_t seed) {
  if (x.size() > 20) throw CapacityError("check_sheaf_random: at most 20 points");
  SheafEvidence ev;
  if (x.size() == 0) return ev;
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t a = rng() & full;
    std::vector<std::uint64_t> cover;
    std::uint64_t u = 0;
    const std::size_t members = 1 + rng() % 4;
    for (std::size_t k = 0; k < members; ++k) {
      cover.push_back(rng() & a);
      u |= cover.back();
    }
    if (u != a) cover.push_back(a & ~u);
    ++ev.covers;
    if (!local_on(a, cover)) ev.locality = false;
    const std::uint64_t global = rng() & a;
    std::vector<std::uint64_t> sections;
    for (auto c : cover) sections.push_back(global & c);
    if (!glue_one(x, a, cover, sections, ev)) ev.gluing = false;
    // Flip one point of one member: incompatible exactly when that point
    // lies in some other member.
    const std::size_t k = rng() % cover.size();
    if (cover[k] != 0) {
      std::uint64_t bit;
      do {
        bit = std::uint64_t{1} << (rng() % x.size());
      } while ((cover[k] & bit) == 0);
      sections[k] ^= bit;
      if (!glue_one(x, a, cover, sections, ev)) ev.gluing = false;
    }
  }
  return ev;
}

// ---------------------------------------------------------------------------
// eta

RingedSpaceMorphism eta(const Universe& x) {
  if (x.size() > 6) throw CapacityError("eta: at most 6 points");
  const Ring r = Ring::power_set(x);
  RingedSpaceMorphism out{x, spec(r), {}, false, false, false, {}, false, false};
  const SpecSpace& target = out.target;
  const std::size_t n = x.size();
  const std::uint64_t subsets = std::uint64_t{1} << n;

  // eta(x) is the prime whose members are the subsets missing x.
  std::vector<bool> hit(target.size(), false);
  out.bijective = target.size() == n;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> found;
    for (std::size_t p = 0; p < target.size(); ++p) {
      bool match = true;
      for (std::uint64_t m = 0; m < subsets && match; ++m) {
        match = target.points()[p].members.test(m) == (((m >> i) & 1U) == 0);
      }
      if (match) found = p;
    }
    if (!found) throw ConsistencyError("eta: m_" + x.label(i) + " is missing from the spectrum");
    out.point_map.push_back(*found);
    if (hit[*found]) out.bijective = false;
    hit[*found] = true;
  }

  auto image = [&](std::uint64_t a) {
    PointSet s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((a >> i) & 1U) s |= PointSet{1} << out.point_map[i];
    }
    return s;
  };
  auto preimage = [&](PointSet s) {
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> out.point_map[i]) & 1U) a |= std::uint64_t{1} << i;
    }
    return a;
  };

  // X is discrete, so continuity is automatic; openness needs every image open.
  bool open_map = true;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if (!target.is_open(image(a))) open_map = false;
  }
  out.homeomorphism = out.bijective && open_map;

  out.preimage_of_basic = true;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if (preimage(target.basic(r.element(a))) != a) out.preimage_of_basic = false;
  }

  std::vector<Localization> local;
  out.sharp_isomorphisms = true;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    const SetElem sa = x.from_mask(a);
    Localization loc = localize_at_idempotent(r, r.element(a));
    const Universe ua = x.restrict_to(sa);
    const Ring pa = Ring::power_set(ua);
    RingHom h = RingHom::tabulate(loc.ring, pa, [&](const RingElem& q) {
      return pa.subset(transfer(ps_mul(r.as_subset(loc.ring.to_base(q)), sa), ua));
    });
    if (!h.is_isomorphism()) out.sharp_isomorphisms = false;
    out.sharp.push_back(std::move(h));
    local.push_back(std::move(loc));
  }

  out.sharp_compatible = true;
  for (std::uint64_t b = 0; b < subsets; ++b) {
    const Ring& rb = local[b].ring;
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      const Ring& ra = local[a].ring;
      const Universe ua = x.restrict_to(x.from_mask(a));
      for (const auto& q : rb.elements()) {
        const RingElem ea = out.sharp[a](ra.from_base(rb.to_base(q)));
        const RingElem eb = out.sharp[b](q);
        const SetElem via_a = ea.ring().as_subset(ea);
        const SetElem via_b = eb.ring().as_subset(eb);
        if (!(transfer(ps_mul(transfer(via_b, x), x.from_mask(a)), ua) == via_a)) out.sharp_compatible = false;
      }
      if (a == 0) break;
    }
  }
  return out;
}

Stalk stalk(const Universe& x, std::string_view label) {
  const SetElem point = x.singleton(label);
  Ring ring = Ring::power_set(x.restrict_to(point));
  const bool field = ring.size() == 2 && !(ring.one() == ring.zero());
  return Stalk{std::move(ring), field};
}

std::uint8_t germ(const SetElem& section, std::string_view label) { return section.contains(label) ? 1 : 0; }

AffineEvidence is_affine(const Universe& x) {
  const RingedSpaceMorphism m = eta(x);
  AffineEvidence ev;
  ev.eta_homeomorphism = m.homeomorphism;
  ev.eta_sharp_iso = m.sharp_isomorphisms && m.sharp_compatible;
  ev.affine = ev.eta_homeomorphism && ev.eta_sharp_iso && m.preimage_of_basic;
  ev.note = "X is finite, so (eta, eta#) identifies it with Spec P(X); infinite X is out of scope";
  return ev;
}

// ---------------------------------------------------------------------------
// Scheme morphisms

RingHomPS SchemeMorphism::sharp(const SetElem& a) const {
  const Universe& y = f_.codomain();
  const Universe& x = f_.domain();
  if (!(a.universe() == y)) throw DomainError("sharp: open set outside the codomain");
  const SetElem pre = f_.preimage(a);
  const Universe ua = y.restrict_to(a);
  const Universe upre = x.restrict_to(pre);
  std::vector<std::size_t> images;
  images.reserve(upre.size());
  for (std::size_t i : pre.indices()) images.push_back(ua.index_of(y.label(f_(i))));
  return induced_hom(SetFunction(upre, ua, std::move(images)));
}

bool SchemeMorphism::compatible_with_restrictions() const {
  const Universe& y = f_.codomain();
  const Universe& x = f_.domain();
  require_enumerable_power(2 * y.size(), "compatible_with_restrictions");
  const StructureSheaf oy(y);
  const StructureSheaf ox(x);
  const std::uint64_t n = std::uint64_t{1} << y.size();
  for (std::uint64_t b = 0; b < n; ++b) {
    const SetElem sb = y.from_mask(b);
    const RingHomPS fb = sharp(sb);
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      const SetElem sa = y.from_mask(a);
      const RingHomPS lhs = compose(ox.restriction(f_.preimage(sb), f_.preimage(sa)), fb);
      const RingHomPS rhs = compose(sharp(sa), oy.restriction(sb, sa));
      if (!(lhs == rhs)) return false;
      if (a == 0) break;
    }
  }
  return true;
}

SchemeMorphism scheme_morphism(const SetFunction& f) { return SchemeMorphism(f); }

bool same_morphism(const SchemeMorphism& a, const SchemeMorphism& b) {
  if (!(a.map() == b.map())) return false;
  for (const auto& s : a.map().codomain().all_subsets()) {
    if (!(a.sharp(s) == b.sharp(s))) return false;
  }
  return true;
}

FunctorEvidence check_functor_laws(std::size_t max_size) {
  if (max_size > 3) throw CapacityError("check_functor_laws: at most 3 points per set");
  FunctorEvidence ev;
  std::vector<Universe> sets;
  for (std::size_t k = 0; k <= max_size; ++k) sets.push_back(Universe::numbered(k));
  for (const auto& x : sets) {
    const SchemeMorphism id = scheme_morphism(SetFunction::identity(x));
    for (const auto& a : x.all_subsets()) {
      if (!(id.sharp(a) == RingHomPS::identity(x.restrict_to(a)))) ev.identity = false;
    }
    for (const auto& y : sets) {
      for (const auto& f : all_functions(x, y)) {
        const SchemeMorphism mf = scheme_morphism(f);
        ++ev.morphisms;
        if (!mf.compatible_with_restrictions()) ev.compatibility = false;
        for (const auto& z : sets) {
          for (const auto& g : all_functions(y, z)) {
            const SchemeMorphism mg = scheme_morphism(g);
            const SchemeMorphism mgf = scheme_morphism(compose(g, f));
            ++ev.compositions;
            for (const auto& a : z.all_subsets()) {
              if (!(mgf.sharp(a) == compose(mf.sharp(g.preimage(a)), mg.sharp(a)))) ev.composition = false;
            }
          }
        }
      }
    }
  }
  ev.faithful = check_faithful(max_size);
  return ev;
}

bool check_faithful(std::size_t max_size) {
  for (std::size_t m = 0; m <= max_size; ++m) {
    for (std::size_t k = 0; k <= max_size; ++k) {
      const Universe x = Universe::numbered(m);
      const Universe y = Universe::numbered(k);
      const auto fs = all_functions(x, y);
      std::vector<RingHomPS> global;
      for (const auto& f : fs) global.push_back(scheme_morphism(f).sharp(y.full_set()));
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          if (global[i] == global[j]) return false;
        }
      }
    }
  }
  return true;
}

SeparatednessEvidence separatedness_witness(const Universe& x) {
  if (x.size() > 4) throw CapacityError("separatedness_witness: at most 4 points");
  SeparatednessEvidence ev;
  const std::uint64_t n = std::uint64_t{1} << x.size();
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      ++ev.pairs;
      const std::uint64_t w = u & v;
      std::set<std::uint64_t> products;
      for (std::uint64_t s = u;; s = (s - 1) & u) {
        for (std::uint64_t t = v;; t = (t - 1) & v) {
          products.insert((s & w) & (t & w));
          if (t == 0) break;
        }
        if (s == 0) break;
      }
      std::size_t expected = 0;
      for (std::uint64_t s = w;; s = (s - 1) & w) {
        ++expected;
        if (!products.count(s) || !is_submask(s, w)) ev.generated = false;
        if (s == 0) break;
      }
      if (products.size() != expected) ev.generated = false;
      const TensorAlgebra t = tensor_product(AlgebraPresentation(x, x.from_mask(u)), AlgebraPresentation(x, x.from_mask(v)));
      if (t.dimension() != x.from_mask(w).count() || !t.verify_canonical_iso().all()) ev.tensor_matches = false;
    }
  }
  ev.note = "finite instances only; separatedness for infinite X is not checked";
  return ev;
}

}  // namespace stone
