#include "stone/dsl/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "stone/error.hpp"
#include "stone/fincofin.hpp"
#include "stone/hom_classifier.hpp"
#include "stone/scheme.hpp"
#include "stone/spectrum.hpp"
#include "stone/tensor.hpp"

namespace stone::dsl {

namespace {

std::size_t clamp(std::size_t size, std::size_t cap) { return std::min(size, cap); }

std::string bits_name(const Universe& x, std::uint64_t mask) { return x.from_mask(mask).to_string(); }

// ---------------------------------------------------------------------------

Report stone_suite(const CheckOptions& opt) {
  Report r{"stone", {}, {}, {}};
  const std::vector<Ring> rings = opt.ring ? std::vector<Ring>{*opt.ring} : stone_corpus(clamp(opt.size, 5));
  for (const auto& ring : rings) {
    const std::string name = ring.descriptor();
    try {
      const StoneMap m = stone_map(ring);
      r.record("bijective onto clopens", m.evidence.injective && m.evidence.onto_clopens, name);
      r.record("D(e (+) f) = D(e) xor D(f)", m.evidence.additive, name);
      r.record("D(ef) = D(e) n D(f)", m.evidence.multiplicative, name);
      r.record("D(1) = Spec, D(0) = empty", m.evidence.unital, name);
    } catch (const ConsistencyError& e) {
      r.record("bijective onto clopens", false, name + ": " + e.what());
    }
    r.record("Clop(Spec R) = Clop(Spec B(R))", clopens_match_booleanization(ring), name);
    if (is_boolean(ring)) {
      bool agree = idempotents(ring).size() == ring.size();
      for (const auto& e : ring.elements()) {
        for (const auto& f : ring.elements()) agree = agree && oplus(e, f) == e + f;
      }
      r.record("Boolean R: defined on all of R and (+) = +", agree, name);
    }
  }
  return r;
}

// Every ideal of P(X) as a mask over its 2^n elements, n <= 4.
std::vector<std::uint32_t> powerset_ideals(std::size_t n) {
  const std::uint32_t size = 1U << n;
  std::vector<std::uint32_t> out;
  const std::uint64_t candidates = std::uint64_t{1} << size;
  for (std::uint64_t m = 0; m < candidates; ++m) {
    if (!(m & 1U)) continue;
    bool ok = true;
    for (std::uint32_t a = 0; a < size && ok; ++a) {
      if (!((m >> a) & 1U)) continue;
      for (std::uint32_t b = 0; b < size && ok; ++b) {
        if (!((m >> (a & b)) & 1U)) ok = false;
        if (((m >> b) & 1U) && !((m >> (a ^ b)) & 1U)) ok = false;
      }
    }
    if (ok) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

std::uint32_t down_set(std::size_t n, std::uint32_t top) {
  std::uint32_t m = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if ((s & ~top) == 0) m |= 1U << s;
  }
  return m;
}

Report maximal_suite(const CheckOptions& opt) {
  Report r{"maximal", {}, {}, {}};
  for (std::size_t n = 0; n <= clamp(opt.size, 4); ++n) {
    const Universe x = Universe::numbered(n);
    const std::uint32_t full = (1U << (1U << n)) - 1;
    const auto ideals = powerset_ideals(n);
    std::vector<std::uint32_t> proper;
    for (auto i : ideals) {
      if (i != full) proper.push_back(i);
    }
    std::vector<std::uint32_t> maximal;
    for (auto i : proper) {
      const bool contained = std::any_of(proper.begin(), proper.end(), [&](std::uint32_t j) { return j != i && (i & ~j) == 0; });
      if (!contained) maximal.push_back(i);
    }
    std::vector<std::uint32_t> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back(down_set(n, ((1U << n) - 1) & ~(1U << i)));
    std::sort(maximal.begin(), maximal.end());
    std::sort(points.begin(), points.end());
    r.record("maximal ideals are exactly the m_x", maximal == points, "|X| = " + std::to_string(n));

    std::uint32_t meet = full;
    for (auto p : points) meet &= p;
    r.record("intersection of the m_x is 0", meet == 1U, "|X| = " + std::to_string(n));

    bool principal = true;
    for (auto i : ideals) {
      std::uint32_t top = 0;
      for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if ((i >> s) & 1U) top |= s;
      }
      if (down_set(n, top) != i) principal = false;
    }
    r.record("every ideal is principal (noetherian)", principal, "|X| = " + std::to_string(n));

    const SpecSpace s = spec(Ring::power_set(x));
    std::vector<std::uint32_t> spec_masks;
    for (const auto& p : s.points()) {
      std::uint32_t m = 0;
      for (std::uint32_t e = 0; e < (1U << n); ++e) {
        if (p.members.test(e)) m |= 1U << e;
      }
      spec_masks.push_back(m);
    }
    std::sort(spec_masks.begin(), spec_masks.end());
    r.record("Spec P(X) = Max P(X) = {m_x}", spec_masks == points, "|X| = " + std::to_string(n));
  }
  r.notes.push_back("the Artinian equivalence has no separate finite observable");
  return r;
}

Report generated_suite(const CheckOptions& opt) {
  Report r{"generated", {}, {}, {}};
  for (std::size_t n = 1; n <= clamp(opt.size, 5); ++n) {
    const Universe x = Universe::numbered(n);
    const Ring ring = Ring::power_set(x);
    const std::uint64_t count = std::uint64_t{1} << n;
    auto check = [&](const std::vector<std::uint64_t>& g, const char* axiom) {
      std::vector<RingElem> elems;
      std::vector<SetElem> sets;
      std::uint64_t u = 0;
      for (auto m : g) {
        elems.push_back(ring.element(m));
        sets.push_back(x.from_mask(m));
        u |= m;
      }
      const Ideal closure = Ideal::generated_by(ring, elems);
      const PSIdeal formula = ideal_generated(x, sets);
      bool same = formula.carrier() == x.from_mask(u);
      for (std::uint64_t e = 0; e < count && same; ++e) same = closure.mask().test(e) == ((e & ~u) == 0);
      std::string gens;
      for (const auto& s : sets) gens += s.to_string();
      r.record(axiom, same, gens);
    };
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a; b < count; ++b) {
        check({a, b}, "(A, B) = P(A u B)");
        for (std::uint64_t c = b; c < count; ++c) check({a, b, c}, "(A, B, C) = P(A u B u C)");
      }
    }
  }
  return r;
}

Report homs_suite(const CheckOptions& opt) {
  Report r{"homs", {}, {}, {}};
  const std::size_t cap = clamp(opt.size, 3);
  for (std::size_t m = 0; m <= cap; ++m) {
    for (std::size_t n = 0; n <= cap; ++n) {
      const Universe y = Universe::numbered(m);
      std::vector<std::string> xl;
      for (std::size_t i = 0; i < n; ++i) xl.push_back(std::string(1, static_cast<char>('a' + i)));
      const Universe xu(xl);
      const std::string inst = "|Y| = " + std::to_string(m) + ", |X| = " + std::to_string(n);
      const auto homs = enumerate_homs(y, xu);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= m;
      r.record("|Hom(P(Y), P(X))| = |Y|^|X|", homs.size() == expected, inst);

      // Atom tuples that pass the hom axioms on full tables.
      const Ring py = Ring::power_set(y);
      const Ring px = Ring::power_set(xu);
      const std::uint64_t px_size = px.size();
      std::uint64_t tuples = 1;
      for (std::size_t i = 0; i < m; ++i) tuples *= px_size;
      std::uint64_t valid = 0;
      std::vector<std::uint64_t> atom(m, 0);
      for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < m; ++i) {
          atom[i] = rest % px_size;
          rest /= px_size;
        }
        std::vector<std::uint64_t> table(py.size());
        for (std::uint64_t s = 0; s < py.size(); ++s) {
          std::uint64_t img = 0;
          for (std::size_t i = 0; i < m; ++i) {
            if ((s >> i) & 1U) img ^= atom[i];
          }
          table[s] = img;
        }
        if (!hom_violation(py, px, table)) ++valid;
      }
      r.record("atom-tuple oracle count matches", valid == homs.size(), inst);

      const auto fs = all_functions(xu, y);
      bool round_trip = fs.size() == homs.size();
      bool faithful = true;
      for (std::size_t i = 0; i < fs.size() && round_trip; ++i) {
        round_trip = hom_to_function(homs[i]) == fs[i] && induced_hom(fs[i]) == homs[i];
        for (std::size_t j = i + 1; j < fs.size(); ++j) faithful = faithful && !(homs[i] == homs[j]);
      }
      r.record("hom_to_function and P(-) are inverse", round_trip, inst);
      r.record("P(-) is faithful", faithful, inst);
      bool image = true;
      for (const auto& h : homs) image = image && image_characterization_check(h).holds();
      r.record("every hom satisfies the image condition and is induced", image, inst);
    }
  }
  const PowersetMapReport pm = powerset_map_report(Universe::numbered(2));
  r.record("A -> P(A) is multiplicative and unital", pm.multiplicative && pm.unital);
  r.record("A -> P(A) is not additive", !pm.additive && pm.counterexample.has_value());
  if (pm.counterexample) {
    r.notes.push_back("A -> P(A) fails additivity at A = " + pm.counterexample->first.to_string() +
                      ", B = " + pm.counterexample->second.to_string());
  }
  r.notes.push_back("Y is finite, so Fin(Y) = P(Y) and the image condition is automatic");
  return r;
}

Report points_suite(const CheckOptions& opt) {
  Report r{"points", {}, {}, {}};
  std::vector<Ring> rings;
  if (opt.ring) {
    rings.push_back(*opt.ring);
  } else {
    for (std::size_t n = 0; n <= clamp(opt.size, 5); ++n) rings.push_back(Ring::power_set(Universe::numbered(n)));
  }
  for (const auto& ring : rings) {
    const auto c = hom_spectrum_correspondence(ring);
    if (ring.kind() == RingKind::PowerSet) {
      r.record("|Mor(P(X), Z/2)| = |X|", c.homs.size() == ring.universe().size(), ring.descriptor());
    }
    r.record("kernel map is a bijection onto Spec", c.bijective, ring.descriptor());
  }
  return r;
}

FinCofElem random_fincof(std::mt19937_64& rng) {
  std::vector<std::uint64_t> support;
  const std::size_t k = rng() % 7;
  for (std::size_t i = 0; i < k; ++i) support.push_back(rng() % 31);
  return FinCofElem(rng() % 2 ? FinCofElem::Mode::Cofinite : FinCofElem::Mode::Finite, std::move(support));
}

// Membership of a + b and ab on a window past every support.
bool window_agrees(const FinCofElem& a, const FinCofElem& b) {
  std::uint64_t top = 0;
  for (const auto* e : {&a, &b}) {
    if (e->max_index()) top = std::max(top, *e->max_index());
  }
  const FinCofElem sum = a + b;
  const FinCofElem prod = a * b;
  for (std::uint64_t i = 0; i <= top + 2; ++i) {
    if (sum.contains(i) != (a.contains(i) != b.contains(i))) return false;
    if (prod.contains(i) != (a.contains(i) && b.contains(i))) return false;
  }
  // Beyond the window every membership is decided by the mode.
  return sum.is_finite() == (a.is_finite() == b.is_finite()) && prod.is_finite() == (a.is_finite() || b.is_finite());
}

Report fincofin_suite(const CheckOptions& opt) {
  Report r{"fincofin", {}, {}, {}};
  std::mt19937_64 rng(opt.seed);
  const std::size_t samples = 10000;
  std::vector<FinCofElem> pool;
  pool.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) pool.push_back(random_fincof(rng));
  for (std::size_t i = 0; i < samples; ++i) {
    const FinCofElem& a = pool[i];
    const FinCofElem& b = pool[(i * 7919 + 1) % samples];
    r.record("case tables agree with the windowed oracle", window_agrees(a, b), a.to_string() + ", " + b.to_string());
    const auto fv = shom_violation(frechet_hom(), a, b);
    r.record("Frechet quotient is a ring hom", !fv, fv.value_or(""));
    const SHom p = point_hom(rng() % 40);
    const auto pv = shom_violation(p, a, b);
    r.record("point evaluation is a ring hom", !pv, pv.value_or(""));
    if (a.is_finite()) {
      const std::uint64_t x = fin_not_principal_witness(a);
      r.record("Fin is not principal", !(FinCofElem::fin({x}) == FinCofElem::fin({x}) * a), a.to_string());
    }
  }
  const auto ideal = fin_is_ideal_witness(std::span<const FinCofElem>(pool.data(), std::min<std::size_t>(pool.size(), 300)));
  r.record("Fin is a proper ideal of S", ideal.holds());
  for (std::uint64_t x = 0; x <= 100; ++x) {
    const auto w = non_induced_witness(x);
    r.record("cofin{x} separates Frechet from eval(x)", w.separates(), std::to_string(x));
    const auto k = kernel_classify(point_hom(x));
    r.record("ker eval(x) = m_x n S, maximal", k.family == KernelClass::Family::PointKernel && k.point == x &&
                                                   k.quotient_is_field);
    r.record("Fin + ker eval(x) = S", image_condition(point_hom(x)).holds);
  }
  const auto kf = kernel_classify(frechet_hom());
  r.record("ker Frechet = Fin, maximal", kf.family == KernelClass::Family::FinKernel && kf.quotient_is_field);
  r.record("Fin + ker Frechet != S", !image_condition(frechet_hom()).holds);
  return r;
}

Report tensor_suite(const CheckOptions& opt) {
  Report r{"tensor", {}, {}, {}};
  bool overlap_seen = false;
  for (std::size_t n = 0; n <= clamp(opt.size, 4); ++n) {
    const Universe x = Universe::numbered(n);
    const std::uint64_t count = std::uint64_t{1} << n;
    const Ring px = Ring::power_set(x);
    for (std::uint64_t a = 0; a < count; ++a) {
      const SetElem sa = x.from_mask(a);
      for (std::uint64_t b = 0; b < count; ++b) {
        const SetElem sb = x.from_mask(b);
        const std::string inst = sa.to_string() + ", " + sb.to_string() + " in " + x.full_set().to_string();
        const TensorAlgebra t = tensor_product(AlgebraPresentation(x, sa), AlgebraPresentation(x, sb));
        r.record("dim P(A) (x) P(B) = |A n B|", t.dimension() == (sa * sb).count(), inst);
        r.record("P(A) (x) P(B) = P(A n B) as rings", t.verify_canonical_iso().all(), inst);
        const ProductMap pm = product_map(sa, sb);
        r.record("C -> (C n A, C n B) is injective", pm.injective, inst);
        r.record("C -> (C n A, C n B) is onto iff A n B = 0", pm.surjective == pm.disjoint, inst);
        if (!pm.disjoint) overlap_seen = true;

        // P(B^c) extended along P(X) -> P(A).
        const Universe ua = x.restrict_to(sa);
        const Ring pa = Ring::power_set(ua);
        const RingHom restrict = RingHom::tabulate(px, pa, [&](const RingElem& e) {
          return pa.subset(transfer(px.as_subset(e) * sa, ua));
        });
        const Ideal i = Ideal::generated_by(px, std::vector<RingElem>{px.subset(sb.complement())});
        const Ideal ie = extend_ideal(restrict, i);
        const SetElem expect = transfer(ps_diff(sa, sb), ua);
        bool ok = true;
        for (const auto& e : pa.elements()) ok = ok && ie.contains(e) == pa.as_subset(e).is_subset_of(expect);
        r.record("P(B^c) extends to P(A \\ B)", ok, inst);
      }
      const TensorAlgebra z = tensor_product(AlgebraPresentation(x, sa), AlgebraPresentation(x, sa.complement()));
      r.record("P(A) (x) P(A^c) = 0", z.dimension() == 0, sa.to_string());
      r.record("R/Fin(X) (x) P(A) = 0 = P(A)/Fin(A)", tensor_with_fin_quotient(sa).is_zero(), sa.to_string());
    }
  }
  if (overlap_seen) {
    r.notes.push_back("for overlapping A, B the map P(A u B) -> P(A) x P(B) is a monomorphism, not an isomorphism");
  }
  return r;
}

Report dlocus_suite(const CheckOptions& opt) {
  Report r{"dlocus", {}, {}, {}};
  for (std::size_t n = 0; n <= clamp(opt.size, 4); ++n) {
    const Universe x = Universe::numbered(n);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        bool ok = true;
        try {
          ok = dlocus_order_check(x.from_mask(a), x.from_mask(b)) == ((a & ~b) == 0);
        } catch (const ConsistencyError&) {
          ok = false;
        }
        r.record("A subset B iff D(A) subset D(B)", ok, bits_name(x, a) + ", " + bits_name(x, b));
      }
    }
  }
  return r;
}

Report sheaf_suite(const CheckOptions& opt) {
  Report r{"sheaf", {}, {}, {}};
  for (std::size_t n = 0; n <= clamp(opt.size, 4); ++n) {
    const auto ev = structure_sheaf(Universe::numbered(n)).check_presheaf();
    const std::string inst = "|X| = " + std::to_string(n);
    r.record("restriction along A = A is the identity", ev.identity, inst);
    r.record("restrictions compose", ev.composition, inst);
  }
  for (std::size_t n = 0; n <= clamp(opt.size, 3); ++n) {
    const auto ev = check_sheaf_exhaustive(Universe::numbered(n));
    const std::string inst = "|X| = " + std::to_string(n);
    r.record("locality on every cover", ev.locality, inst);
    r.record("gluing on every cover", ev.gluing, inst);
  }
  const auto rnd = check_sheaf_random(Universe::numbered(6), 500, opt.seed);
  r.record("locality and gluing on random covers, |X| = 6", rnd.holds());
  return r;
}

Report eta_suite(const CheckOptions& opt) {
  Report r{"eta", {}, {}, {}};
  for (std::size_t n = 0; n <= clamp(opt.size, 4); ++n) {
    const Universe x = Universe::numbered(n);
    const std::string inst = "|X| = " + std::to_string(n);
    const RingedSpaceMorphism m = eta(x);
    r.record("eta is bijective", m.bijective, inst);
    r.record("eta is a homeomorphism", m.homeomorphism, inst);
    r.record("eta^{-1}(D(A)) = A", m.preimage_of_basic, inst);
    r.record("eta# components are isomorphisms", m.sharp_isomorphisms, inst);
    r.record("eta# commutes with restrictions", m.sharp_compatible, inst);
    for (std::size_t i = 0; i < n; ++i) {
      const Stalk s = stalk(x, x.label(i));
      r.record("stalks are two-element fields", s.is_field, x.label(i));
      bool germs = true;
      for (const auto& sec : x.all_subsets()) germs = germs && germ(sec, x.label(i)) == (sec.contains(i) ? 1 : 0);
      r.record("germ at x is membership of x", germs, x.label(i));
    }
    r.record("X is affine", is_affine(x).affine, inst);
    r.record("opens pairwise separated", separatedness_witness(x).holds(), inst);
  }
  r.notes.push_back("finite X only; infinite X is out of scope");
  return r;
}

Report functor_suite(const CheckOptions& opt) {
  Report r{"functor", {}, {}, {}};
  const std::size_t cap = clamp(opt.size, 2);
  const FunctorEvidence ev = check_functor_laws(cap);
  const std::string inst = "sets of size <= " + std::to_string(cap);
  r.record("identity law", ev.identity, inst);
  r.record("composition law", ev.composition, inst);
  r.record("comaps commute with restrictions", ev.compatibility, inst);
  r.record("faithful", check_faithful(clamp(opt.size, 3)), "sets of size <= " + std::to_string(clamp(opt.size, 3)));
  return r;
}

using SuiteFn = std::function<Report(const CheckOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"stone", stone_suite},     {"maximal", maximal_suite},   {"generated", generated_suite},
      {"homs", homs_suite}, {"points", points_suite}, {"fincofin", fincofin_suite},
      {"tensor", tensor_suite},   {"dlocus", dlocus_suite}, {"sheaf", sheaf_suite},
      {"eta", eta_suite},         {"functor", functor_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    out.push_back("all");
    return out;
  }();
  return names;
}

Report run_check(const std::string& suite, const CheckOptions& options) {
  if (suite == "all") {
    Report all{"all", {}, {}, {}};
    for (const auto& [name, fn] : suites()) all.merge(fn(options));
    return all;
  }
  for (const auto& [name, fn] : suites()) {
    if (name == suite) return fn(options);
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown check suite '" + suite + "' (known: " + known + ")");
}

std::vector<Ring> stone_corpus(std::size_t max_powerset) {
  std::vector<Ring> out;
  for (std::uint64_t n = 2; n <= 60; ++n) out.push_back(Ring::zmod(n));
  const Ring z2 = Ring::zmod(2), z3 = Ring::zmod(3), z4 = Ring::zmod(4), z5 = Ring::zmod(5), z6 = Ring::zmod(6);
  out.push_back(Ring::product({z2, z3}));
  out.push_back(Ring::product({z2, z2}));
  out.push_back(Ring::product({z2, z2, z2}));
  out.push_back(Ring::product({z4, z6}));
  out.push_back(Ring::product({z2, z3, z5}));
  out.push_back(Ring::product({z4, z3, z2}));
  for (std::size_t n = 0; n <= max_powerset; ++n) out.push_back(Ring::power_set(Universe::numbered(n)));
  out.push_back(Ring::product({z6, Ring::power_set(Universe::numbered(2))}));
  const Ring z12 = Ring::zmod(12);
  const Ring z30 = Ring::zmod(30);
  out.push_back(Ring::quotient(z12, std::vector<RingElem>{z12.element(4)}));
  out.push_back(Ring::quotient(z30, std::vector<RingElem>{z30.element(6)}));
  const Ring p3 = Ring::power_set(Universe::numbered(3));
  out.push_back(Ring::quotient(p3, std::vector<RingElem>{p3.element(1)}));
  out.push_back(Ring::booleanization(z12));
  out.push_back(Ring::booleanization(z30));
  out.push_back(Ring::booleanization(Ring::product({z2, z4})));
  return out;
}

}  // namespace stone::dsl
