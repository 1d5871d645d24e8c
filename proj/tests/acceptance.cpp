// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_cases.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "stone/dsl/checks.hpp"
#include "stone/dsl/eval.hpp"
#include "stone/dsl/parser.hpp"
#include "stone/error.hpp"
#include "stone/fincofin.hpp"
#include "stone/hom_classifier.hpp"
#include "stone/scheme.hpp"
#include "stone/spectrum.hpp"
#include "stone/tensor.hpp"

using namespace stone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

// ---------------------------------------------------------------------------

Outcome stone_corpus_criterion() {
  Outcome o;
  const auto corpus = dsl::stone_corpus(5);
  o.require(corpus.size() >= 30, "corpus has fewer than 30 rings");
  bool has_triple = false, has_quotient = false, has_p5 = false;
  for (const auto& r : corpus) {
    has_triple = has_triple || (r.kind() == RingKind::Product && r.factors().size() == 3);
    has_quotient = has_quotient || r.kind() == RingKind::Quotient;
    has_p5 = has_p5 || (r.kind() == RingKind::PowerSet && r.universe().size() == 5);
    try {
      const StoneMap m = stone_map(r);
      o.require(m.evidence.injective && m.evidence.onto_clopens, r.descriptor() + ": not bijective");
      o.require(m.evidence.additive, r.descriptor() + ": D(e (+) f) != D(e) xor D(f)");
      o.require(m.evidence.multiplicative, r.descriptor() + ": D(ef) != D(e) n D(f)");
      o.require(m.evidence.unital, r.descriptor() + ": D(1) != Spec");
      // The number of clopens is 2^(connected components) = 2^|B(R) atoms|.
      o.require(m.locus.size() == clop(m.spectrum).size(), r.descriptor() + ": |B(R)| != |Clop|");
    } catch (const Error& e) {
      o.require(false, r.descriptor() + ": " + e.what());
    }
  }
  for (std::uint64_t n = 2; n <= 60; ++n) {
    o.require(idempotents(Ring::zmod(n)).size() == std::size_t{1} << oracle::prime_divisors(n).size(),
              "Z/" + std::to_string(n) + ": idempotent count");
  }
  o.require(has_triple && has_quotient && has_p5, "corpus lacks a 3-factor product, quotient or P(X) with |X| = 5");
  return o;
}

Outcome boolean_criterion() {
  Outcome o;
  std::size_t boolean_rings = 0;
  for (const auto& r : dsl::stone_corpus(5)) {
    if (!is_boolean(r)) continue;
    ++boolean_rings;
    o.require(idempotents(r).size() == r.size(), r.descriptor() + ": not every element idempotent");
    const StoneMap m = stone_map(r);
    o.require(m.locus.size() == r.size(), r.descriptor() + ": Stone map not defined on all of R");
    for (const auto& e : r.elements()) {
      for (const auto& f : r.elements()) o.require(oplus(e, f) == e + f, r.descriptor() + ": (+) != +");
    }
  }
  o.require(boolean_rings >= 8, "fewer than 8 Boolean rings in the corpus");
  return o;
}

// Ideals of P({0..n-1}) as masks over its 2^n elements.
std::vector<std::uint32_t> brute_ideals(std::size_t n) {
  const std::uint32_t size = 1U << n;
  std::vector<std::uint32_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << size); m += 2) {
    bool ok = true;
    for (std::uint32_t a = 0; a < size && ok; ++a) {
      if (!((m >> a) & 1U)) continue;
      for (std::uint32_t b = 0; b < size && ok; ++b) {
        ok = ((m >> (a & b)) & 1U) && (!((m >> b) & 1U) || ((m >> (a ^ b)) & 1U));
      }
    }
    if (ok) out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

std::uint32_t lower_set(std::size_t n, std::uint32_t top) {
  std::uint32_t m = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if ((s & ~top) == 0) m |= 1U << s;
  }
  return m;
}

Outcome maximal_criterion() {
  Outcome o;
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    const std::uint32_t full = (1U << (1U << n)) - 1;
    const auto ideals = brute_ideals(n);
    std::vector<std::uint32_t> maximal;
    for (auto i : ideals) {
      if (i == full) continue;
      bool is_max = true;
      for (auto j : ideals) {
        if (j != full && j != i && (i & ~j) == 0) is_max = false;
      }
      if (is_max) maximal.push_back(i);
    }
    std::vector<std::uint32_t> library;
    for (const auto& m : maximal_ideals(x)) library.push_back(lower_set(n, static_cast<std::uint32_t>(m.carrier().mask())));
    std::sort(maximal.begin(), maximal.end());
    std::sort(library.begin(), library.end());
    o.require(maximal == library, "|X| = " + std::to_string(n) + ": maximal ideals are not the m_x");
    std::uint32_t meet = full;
    for (auto m : maximal) meet &= m;
    o.require(meet == 1U, "|X| = " + std::to_string(n) + ": intersection of the m_x is not 0");
    for (auto i : ideals) {
      std::uint32_t top = 0;
      for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if ((i >> s) & 1U) top |= s;
      }
      o.require(lower_set(n, top) == i, "|X| = " + std::to_string(n) + ": non-principal ideal");
    }
    o.require(spec(Ring::power_set(x)).size() == n, "|X| = " + std::to_string(n) + ": |Spec P(X)| != |X|");
  }
  const dsl::Report r = dsl::run_check("maximal", dsl::CheckOptions{4, 1, std::nullopt});
  o.require(r.ok(), "maximal suite: " + r.counterexample.value_or(""));
  return o;
}

Outcome generated_criterion() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const Universe x = Universe::numbered(n);
    const Ring ring = Ring::power_set(x);
    const std::uint64_t count = std::uint64_t{1} << n;
    auto check = [&](const std::vector<std::uint64_t>& g) {
      const auto expect = oracle::closure_ideal(n, g);
      std::vector<SetElem> sets;
      std::vector<RingElem> elems;
      std::uint64_t u = 0;
      for (auto m : g) {
        sets.push_back(x.from_mask(m));
        elems.push_back(ring.element(m));
        u |= m;
      }
      const PSIdeal formula = ideal_generated(x, sets);
      const Ideal closure = Ideal::generated_by(ring, elems);
      o.require(formula.carrier().mask() == u, "carrier is not the union");
      for (std::uint64_t e = 0; e < count; ++e) {
        const bool in_union = (e & ~u) == 0;
        o.require(expect[e] == in_union, "closure oracle differs from P(union)");
        o.require(closure.mask().test(e) == in_union, "library closure differs from P(union)");
        o.require(formula.contains(x.from_mask(e)) == in_union, "ideal_generated differs from P(union)");
      }
    };
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a; b < count; ++b) {
        check({a, b});
        for (std::uint64_t c = b; c < count; ++c) check({a, b, c});
      }
    }
  }
  return o;
}

Outcome homs_criterion() {
  Outcome o;
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const std::string inst = "|Y| = " + std::to_string(m) + ", |X| = " + std::to_string(n);
      const Universe y = Universe::numbered(m), x = Universe::numbered(n);
      const auto tables = oracle::powerset_hom_tables(m, n);
      const auto homs = enumerate_homs(y, x);
      std::uint64_t power = 1;
      for (std::size_t i = 0; i < n; ++i) power *= m;
      o.require(tables.size() == power, inst + ": oracle count != |Y|^|X|");
      o.require(homs.size() == power, inst + ": library count != |Y|^|X|");
      std::vector<std::vector<std::uint64_t>> ours;
      for (const auto& h : homs) {
        std::vector<std::uint64_t> t;
        for (const auto& s : h.table()) t.push_back(s.mask());
        ours.push_back(t);
      }
      auto expect = tables;
      std::sort(expect.begin(), expect.end());
      std::sort(ours.begin(), ours.end());
      o.require(ours == expect, inst + ": hom sets differ from the oracle");
      const auto fs = all_functions(x, y);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        o.require(hom_to_function(homs[i]) == fs[i], inst + ": hom_to_function(P(f)) != f");
        o.require(induced_hom(hom_to_function(homs[i])) == homs[i], inst + ": P(hom_to_function(phi)) != phi");
        o.require(image_characterization_check(homs[i]).holds(), inst + ": image condition");
      }
    }
  }
  const auto pm = powerset_map_report(Universe::numbered(3));
  o.require(pm.multiplicative && pm.unital && !pm.additive, "A -> P(A) report");
  return o;
}

Outcome points_criterion() {
  Outcome o;
  for (std::size_t n = 0; n <= 5; ++n) {
    const Ring r = Ring::power_set(Universe::numbered(n));
    const auto c = hom_spectrum_correspondence(r);
    o.require(c.homs.size() == n, "|X| = " + std::to_string(n) + ": |Mor(P(X), Z/2)| != |X|");
    o.require(c.bijective, "|X| = " + std::to_string(n) + ": kernel map not a bijection onto Spec");
    std::vector<std::size_t> pts = c.kernel_point;
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) o.require(pts[i] == i, "kernel points are not all of Spec");
  }
  return o;
}

Outcome fincofin_criterion() {
  Outcome o;
  std::mt19937_64 rng(20240);
  auto rand_elem = [&] {
    std::vector<std::uint64_t> s(rng() % 8);
    for (auto& v : s) v = rng() % 48;
    return FinCofElem(rng() % 2 ? FinCofElem::Mode::Cofinite : FinCofElem::Mode::Finite, s);
  };
  auto win = [](const FinCofElem& a) { return oracle::Window::make(!a.is_finite(), a.support()); };
  std::vector<FinCofElem> pool;
  for (int i = 0; i < 10000; ++i) pool.push_back(rand_elem());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const FinCofElem& a = pool[i];
    const FinCofElem& b = pool[(i + 1) % pool.size()];
    o.require(win(a + b) == win(a) + win(b), "sum differs from windowed oracle: " + a.to_string());
    o.require(win(a * b) == win(a) * win(b), "product differs from windowed oracle: " + a.to_string());
    // Hom axioms read off the oracle: the Frechet quotient is the tail bit.
    const auto wa = win(a);
    o.require(frechet_hom()(a) == (wa.tail ? 1 : 0), "Frechet value differs from the tail");
    const std::uint64_t x = rng() % 60;
    o.require(point_hom(x)(a) == (wa.head[x] ? 1 : 0), "point value differs from membership");
    o.require(!shom_violation(frechet_hom(), a, b), "Frechet quotient violates a hom axiom");
    o.require(!shom_violation(point_hom(x), a, b), "evaluation violates a hom axiom");
  }
  for (std::uint64_t x = 0; x <= 100; ++x) {
    const auto w = non_induced_witness(x);
    o.require(w.separates(), "no separating element at " + std::to_string(x));
    o.require(frechet_hom()(w.element) != point_hom(x)(w.element), "witness does not separate at " + std::to_string(x));
  }
  return o;
}

Outcome tensor_criterion() {
  Outcome o;
  bool noted = false;
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      const SetElem sa = x.from_mask(a);
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        const SetElem sb = x.from_mask(b);
        const std::string inst = sa.to_string() + ", " + sb.to_string();
        const auto t = tensor_product(AlgebraPresentation(x, sa), AlgebraPresentation(x, sb));
        const std::size_t expect = oracle::tensor_dimension(n, a, b);
        o.require(t.dimension() == expect, inst + ": dimension differs from oracle");
        o.require(t.dimension() == (sa * sb).count(), inst + ": dimension != |A n B|");
        o.require(t.verify_canonical_iso().all(), inst + ": canonical map not an isomorphism");
        const ProductMap pm = product_map(sa, sb);
        o.require(pm.injective, inst + ": product map not injective");
        o.require(pm.surjective == (sa * sb).empty(), inst + ": product map iso != disjoint");
        if (!pm.disjoint && !noted) {
          std::cout << "  note: " << pm.note << '\n';
          noted = true;
        }
      }
      o.require(tensor_product(AlgebraPresentation(x, sa), AlgebraPresentation(x, sa.complement())).dimension() == 0,
                "P(A) (x) P(A^c) != 0");
    }
  }
  return o;
}

Outcome dlocus_criterion() {
  Outcome o;
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    const Ring r = Ring::power_set(x);
    const SpecSpace s = spec(r);
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      // D(A) is the set of m_x with A outside m_x, i.e. x in A.
      PointSet expect = 0;
      for (std::size_t p = 0; p < s.size(); ++p) {
        const std::string& name = s.points()[p].name;
        if (x.from_mask(a).contains(std::string_view(name).substr(2))) expect |= PointSet{1} << p;
      }
      o.require(s.basic(r.element(a)) == expect, "D(A) is not {m_x : x in A}");
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        try {
          o.require(dlocus_order_check(x.from_mask(a), x.from_mask(b)) == ((a & ~b) == 0), "order check");
        } catch (const ConsistencyError& e) {
          o.require(false, e.what());
        }
      }
    }
  }
  return o;
}

Outcome scheme_criterion() {
  Outcome o;
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    o.require(structure_sheaf(x).check_presheaf().holds(), "presheaf laws at |X| = " + std::to_string(n));
    const RingedSpaceMorphism m = eta(x);
    o.require(m.homeomorphism && m.preimage_of_basic, "eta not a homeomorphism at |X| = " + std::to_string(n));
    o.require(m.sharp_isomorphisms && m.sharp_compatible, "eta# not an iso at |X| = " + std::to_string(n));
    for (const auto& l : x.labels()) {
      const Stalk st = stalk(x, l);
      o.require(st.is_field && st.ring.size() == 2, "stalk at " + l + " is not a two-element field");
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto ev = check_sheaf_exhaustive(Universe::numbered(n));
    o.require(ev.locality && ev.gluing, "sheaf axioms at |X| = " + std::to_string(n));
  }
  o.require(check_sheaf_random(Universe::numbered(6), 500, 7).holds(), "random covers at |X| = 6");
  const auto f = check_functor_laws(2);
  o.require(f.identity && f.composition && f.compatibility, "functor laws at sizes <= 2");
  return o;
}

Outcome dsl_criterion() {
  Outcome o;
  gen::AstGen ast(99);
  for (int i = 0; i < 100000 && o.pass; ++i) {
    const auto e = ast.program();
    const std::string text = dsl::print(*e);
    try {
      o.require(dsl::equal(*e, *dsl::parse(text)), "round trip changed " + text);
    } catch (const dsl::DslError& err) {
      o.require(false, "printed text does not parse: " + text);
    }
  }
  const Universe x({"a", "b", "c", "d", "e"});
  gen::SetGen sets(5, x);
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const auto c = sets.make(4);
    dsl::Env env;
    env.universe = x;
    const dsl::Value v = dsl::evaluate(c.source, env);
    const auto* s = std::get_if<SetElem>(&v.data);
    o.require(s && *s == c.value, "eval differs from powerset_ring on " + c.source);
  }
  for (const auto& c : cli_cases::cases()) {
    const std::string first = cli_cases::run(c);
    const std::string second = cli_cases::run(c);
    std::string stored;
    o.require(first == second, c.name + ": output differs between runs");
    o.require(cli_cases::read_file(cli_cases::golden_path(STONE_GOLDEN_DIR, c), stored), c.name + ": no golden file");
    o.require(first == stored, c.name + ": output differs from golden file");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "generalized Stone map on the ring corpus", 10, stone_corpus_criterion},
      {2, "classical Stone on Boolean corpus rings", 0, boolean_criterion},
      {3, "maximal ideals of P(X) are the m_x, |X| <= 4", 5, maximal_criterion},
      {4, "generated ideals are P(union), |X| <= 5", 0, generated_criterion},
      {5, "homs P(Y) -> P(X) against the oracle, sizes <= 3", 0, homs_criterion},
      {6, "Mor(P(X), Z/2) matches Spec, |X| <= 5", 0, points_criterion},
      {7, "finite-cofinite homs and separating witnesses", 0, fincofin_criterion},
      {8, "tensor products and product maps, |X| <= 4", 30, tensor_criterion},
      {9, "subset iff D-locus containment, |X| <= 4", 0, dlocus_criterion},
      {10, "structure sheaf, eta, stalks and functor laws", 60, scheme_criterion},
      {11, "DSL round trip, differential eval, CLI golden files", 0, dsl_criterion},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      out.require(false, "over the time limit");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " (" << timing;
    if (c.limit_seconds > 0) std::cout << " of " << c.limit_seconds << "s";
    std::cout << ")";
    if (!out.pass) std::cout << ": " << out.detail;
    std::cout << '\n';
    if (!out.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
