#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stone/error.hpp"
#include "stone/hom_classifier.hpp"

using namespace stone;

// Every hom found by depth-first search over all maps P(Y) -> P(X) is P(f)
// for exactly one f, for |X|, |Y| <= 3.
TEST(Homs, MatchDoublyExponentialOracle) {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const Universe y = Universe::numbered(m), x = Universe::numbered(n);
      const auto tables = oracle::powerset_hom_tables(m, n);
      const auto homs = enumerate_homs(y, x);
      std::uint64_t power = 1;
      for (std::size_t i = 0; i < n; ++i) power *= m;
      ASSERT_EQ(tables.size(), power);
      ASSERT_EQ(homs.size(), power);
      std::vector<std::vector<std::uint64_t>> ours;
      for (const auto& h : homs) {
        std::vector<std::uint64_t> t;
        for (const auto& s : h.table()) t.push_back(s.mask());
        ours.push_back(t);
      }
      auto expect = tables;
      std::sort(expect.begin(), expect.end());
      std::sort(ours.begin(), ours.end());
      ASSERT_EQ(ours, expect) << m << " " << n;
    }
  }
}

TEST(Homs, RoundTrip) {
  const Universe y({"1", "2", "3"}), x({"a", "b"});
  const auto fs = all_functions(x, y);
  const auto homs = enumerate_homs(y, x);
  ASSERT_EQ(homs.size(), 9u);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(hom_to_function(homs[i]), fs[i]);
    EXPECT_EQ(induced_hom(hom_to_function(homs[i])), homs[i]);
    EXPECT_TRUE(image_characterization_check(homs[i]).holds());
  }
}

TEST(Homs, RefusesLargeUniverses) {
  EXPECT_THROW(enumerate_homs(Universe::numbered(kMaxHomUniverse + 1), Universe::numbered(1)), CapacityError);
}

TEST(AtomAssignment, ValidityAndHom) {
  const Universe y({"1", "2"}), x({"a", "b", "c"});
  const AtomAssignment good{y, x, {x.subset({"a", "c"}), x.subset({"b"})}};
  EXPECT_TRUE(good.valid());
  EXPECT_EQ(good.to_hom()(y.subset({"1"})), x.subset({"a", "c"}));
  const AtomAssignment overlap{y, x, {x.subset({"a", "b"}), x.subset({"b", "c"})}};
  EXPECT_FALSE(overlap.valid());
  EXPECT_THROW(overlap.to_hom(), DomainError);
  const AtomAssignment gap{y, x, {x.subset({"a"}), x.subset({"b"})}};
  EXPECT_FALSE(gap.valid());
  const RingHomPS h = good.to_hom();
  EXPECT_EQ(assignment_of(h).images, good.images);
}

TEST(PowersetMap, MultiplicativeUnitalNotAdditive) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto r = powerset_map_report(Universe::numbered(n));
    EXPECT_TRUE(r.multiplicative);
    EXPECT_TRUE(r.unital);
    EXPECT_FALSE(r.additive);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_TRUE(r.counterexample->first.empty());
  }
}

TEST(PowersetMap, SubsetsUniverse) {
  const Universe x({"a", "b"});
  const Universe su = subsets_universe(x);
  EXPECT_EQ(su.labels(), (std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"}));
  EXPECT_EQ(powerset_of(x.subset({"a"}), su), su.subset({"{}", "{a}"}));
}
