#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stone/error.hpp"
#include "stone/spectrum.hpp"

using namespace stone;

namespace {

std::vector<std::set<std::uint64_t>> member_sets(const SpecSpace& s) {
  std::vector<std::set<std::uint64_t>> out;
  for (const auto& p : s.points()) {
    std::set<std::uint64_t> m;
    for (std::uint64_t i = 0; i < s.ring().size(); ++i) {
      if (p.members.test(i)) m.insert(i);
    }
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Spec, ZmodPrimesMatchOracle) {
  for (std::uint64_t n = 1; n <= 80; ++n) {
    auto expect = oracle::zmod_prime_ideals(n);
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(member_sets(spec(Ring::zmod(n))), expect) << n;
  }
}

TEST(Spec, FastPathAgreesWithBruteForce) {
  const Ring z2 = Ring::zmod(2), z3 = Ring::zmod(3), z4 = Ring::zmod(4);
  for (const Ring& r : {Ring::zmod(12), Ring::zmod(16), Ring::product({z2, z3}), Ring::product({z4, z2}),
                        Ring::power_set(Universe({"a", "b", "c"})), Ring::booleanization(Ring::zmod(30))}) {
    const SpecSpace s = spec(r);
    const auto brute = spec_brute_force(r);
    ASSERT_EQ(s.size(), brute.size()) << r.descriptor();
    for (const auto& p : brute) {
      EXPECT_TRUE(is_prime_ideal(r, p.members));
      const bool found = std::any_of(s.points().begin(), s.points().end(),
                                     [&](const PrimeIdeal& q) { return q.members == p.members; });
      EXPECT_TRUE(found) << r.descriptor();
    }
  }
}

TEST(Spec, PointNames) {
  const SpecSpace s = spec(Ring::zmod(12));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.points()[0].name, "(2)");
  EXPECT_EQ(s.points()[1].name, "(3)");
  const SpecSpace p = spec(Ring::power_set(Universe({"a", "b"})));
  EXPECT_EQ(p.points()[0].name, "m_a");
  EXPECT_EQ(p.points()[0].member_strings(), (std::vector<std::string>{"{}", "{b}"}));
}

TEST(Spec, ZariskiTopology) {
  const SpecSpace s = spec(Ring::zmod(30));
  EXPECT_EQ(s.opens().size(), 8u);  // finite reduced: discrete
  const SpecSpace t = spec(Ring::zmod(4));
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.opens().size(), 2u);
  for (auto u : s.opens()) EXPECT_TRUE(s.is_open(u) && s.is_closed(u));
}

TEST(Spec, BasicOpens) {
  const Ring z12 = Ring::zmod(12);
  const SpecSpace s = spec(z12);
  EXPECT_EQ(s.basic(z12.element(4)), PointSet{0b10});  // 4 is outside (3) only
  EXPECT_EQ(s.basic(z12.element(1)), s.all());
  EXPECT_EQ(s.basic(z12.element(0)), PointSet{0});
  EXPECT_EQ(d_locus(z12.element(9), s), PointSet{0b01});
}

TEST(Clop, CountIsTwoToComponents) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    EXPECT_EQ(clop(spec(Ring::zmod(n))).size(), std::size_t{1} << oracle::prime_divisors(n).size()) << n;
  }
  EXPECT_EQ(clop(spec(Ring::zmod(30))).size(), 8u);
}

TEST(StoneMap, VerifiesOnCorpus) {
  const Ring z2 = Ring::zmod(2), z3 = Ring::zmod(3), z4 = Ring::zmod(4), z5 = Ring::zmod(5);
  std::vector<Ring> rings;
  for (std::uint64_t n = 2; n <= 60; ++n) rings.push_back(Ring::zmod(n));
  rings.push_back(Ring::product({z2, z3, z5}));
  rings.push_back(Ring::product({z4, z4}));
  for (std::size_t k = 0; k <= 4; ++k) rings.push_back(Ring::power_set(Universe::numbered(k)));
  for (const auto& r : rings) {
    const StoneMap m = stone_map(r);
    EXPECT_TRUE(m.evidence.all()) << r.descriptor();
    EXPECT_EQ(m.locus.size(), m.booleanization.size());
    EXPECT_TRUE(clopens_match_booleanization(r)) << r.descriptor();
  }
}

TEST(StoneMap, BooleanRingsAreTheirOwnBooleanization) {
  const Ring p = Ring::power_set(Universe({"a", "b", "c"}));
  EXPECT_EQ(stone_map(p).booleanization.size(), p.size());
  for (const auto& e : p.elements()) {
    for (const auto& f : p.elements()) EXPECT_EQ(oplus(e, f), e + f);
  }
}

TEST(HomsToF2, PowerSetHasOnePerPoint) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const Ring r = Ring::power_set(Universe::numbered(n));
    const auto c = hom_spectrum_correspondence(r);
    EXPECT_EQ(c.homs.size(), n);
    EXPECT_TRUE(c.bijective);
  }
  EXPECT_EQ(homs_to_f2(Ring::zmod(6)).size(), 1u);  // only (2) has residue field Z/2
  EXPECT_EQ(homs_to_f2(Ring::zmod(9)).size(), 0u);
}

TEST(DLocus, OrderMatchesInclusion) {
  const Universe x({"a", "b", "c"});
  for (const auto& a : x.all_subsets()) {
    for (const auto& b : x.all_subsets()) EXPECT_EQ(dlocus_order_check(a, b), a.is_subset_of(b));
  }
}

TEST(SpecJson, Shape) {
  const auto j = spec_to_json(spec(Ring::power_set(Universe({"a", "b"}))));
  EXPECT_EQ(j["ring"], "P{a,b}");
  EXPECT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["opens"].size(), 4u);
  EXPECT_EQ(j["clopens"].size(), 4u);
  EXPECT_EQ(j["clopens"][3], (std::vector<int>{0, 1}));
  EXPECT_EQ(j["stone_map"].size(), 4u);
}

TEST(Spec, TooManyPointsRefused) {
  std::vector<Ring> factors(21, Ring::zmod(2));
  EXPECT_THROW(spec(Ring::product(factors)), CapacityError);
}
