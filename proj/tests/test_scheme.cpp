#include <gtest/gtest.h>

#include "stone/error.hpp"
#include "stone/scheme.hpp"

using namespace stone;

TEST(StructureSheaf, SectionsAndRestriction) {
  const Universe x({"a", "b", "c"});
  const StructureSheaf o = structure_sheaf(x);
  const SetElem ab = x.subset({"a", "b"});
  EXPECT_EQ(o.sections(ab).size(), 4u);
  EXPECT_EQ(o.section_universe(ab).labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(o.restrict(x.subset({"b", "c"}), ab), x.subset({"b"}));
  const RingHomPS r = o.restriction(x.full_set(), ab);
  EXPECT_EQ(r.source(), x);
  EXPECT_EQ(r.target().size(), 2u);
  EXPECT_THROW(o.restriction(ab, x.full_set()), DomainError);
}

TEST(StructureSheaf, PresheafLaws) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ev = structure_sheaf(Universe::numbered(n)).check_presheaf();
    EXPECT_TRUE(ev.holds()) << n;
    std::size_t expect_pairs = 1;
    for (std::size_t i = 0; i < n; ++i) expect_pairs *= 3;  // chains A <= B
    EXPECT_EQ(ev.pairs, expect_pairs);
  }
}

TEST(StructureSheaf, CapacityLimit) {
  EXPECT_NO_THROW(structure_sheaf(Universe::numbered(kMaxTabulatedSheaf)));
  EXPECT_THROW(structure_sheaf(Universe::numbered(kMaxTabulatedSheaf + 1)), CapacityError);
}

TEST(Gluing, CompatibleFamilyGlues) {
  const Universe x({"a", "b", "c"});
  const std::vector<SetElem> cover{x.subset({"a", "b"}), x.subset({"b", "c"})};
  const std::vector<SetElem> sections{x.subset({"b"}), x.subset({"b", "c"})};
  EXPECT_EQ(check_gluing(x.full_set(), cover, sections), x.subset({"b", "c"}));
}

TEST(Gluing, IncompatibleFamilyNamesThePair) {
  const Universe x({"a", "b", "c"});
  const std::vector<SetElem> cover{x.subset({"a"}), x.subset({"a", "b"}), x.subset({"b", "c"})};
  const std::vector<SetElem> sections{x.subset({"a"}), x.subset({"a"}), x.subset({"b"})};
  try {
    check_gluing(x.full_set(), cover, sections);
    FAIL() << "expected CompatibilityError";
  } catch (const CompatibilityError& e) {
    EXPECT_EQ(e.first(), 1u);
    EXPECT_EQ(e.second(), 2u);
    EXPECT_EQ(std::string(e.what()), "sections 1 and 2 disagree on {b}");
  }
}

TEST(Gluing, BadInputs) {
  const Universe x({"a", "b"});
  const std::vector<SetElem> cover{x.subset({"a"})};
  const std::vector<SetElem> wrong{x.subset({"b"})};
  EXPECT_THROW(check_gluing(x.full_set(), cover, cover), DomainError);  // does not cover
  EXPECT_THROW(check_gluing(x.subset({"a"}), cover, wrong), DomainError);  // not a section over {a}
}

TEST(Sheaf, ExhaustiveSmall) {
  const auto ev = check_sheaf_exhaustive(Universe::numbered(3));
  EXPECT_TRUE(ev.holds());
  EXPECT_EQ(ev.covers, 256u);
  EXPECT_EQ(ev.families, 60750u);
  EXPECT_GT(ev.incompatible_families, 0u);
  EXPECT_THROW(check_sheaf_exhaustive(Universe::numbered(4)), CapacityError);
}

TEST(Sheaf, RandomIsDeterministic) {
  const auto a = check_sheaf_random(Universe::numbered(6), 300, 42);
  const auto b = check_sheaf_random(Universe::numbered(6), 300, 42);
  EXPECT_TRUE(a.holds());
  EXPECT_EQ(a.families, b.families);
  EXPECT_EQ(a.incompatible_families, b.incompatible_families);
  EXPECT_GT(a.incompatible_families, 0u);
}

TEST(Eta, IsomorphismOfRingedSpaces) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    const RingedSpaceMorphism m = eta(x);
    EXPECT_TRUE(m.all()) << n;
    EXPECT_EQ(m.sharp.size(), std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(m.target.points()[m.point_map[i]].name, "m_" + x.label(i));
    for (const auto& h : m.sharp) EXPECT_TRUE(h.is_isomorphism());
  }
  EXPECT_THROW(eta(Universe::numbered(7)), CapacityError);
}

TEST(Stalks, AreTwoElementFields) {
  const Universe x({"a", "b", "c"});
  for (const auto& l : x.labels()) {
    const Stalk s = stalk(x, l);
    EXPECT_TRUE(s.is_field);
    EXPECT_EQ(s.ring.size(), 2u);
  }
  EXPECT_EQ(germ(x.subset({"a"}), "a"), 1);
  EXPECT_EQ(germ(x.subset({"a"}), "b"), 0);
  EXPECT_THROW(stalk(x, "z"), DomainError);
}

TEST(Affine, SmallSpaces) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ev = is_affine(Universe::numbered(n));
    EXPECT_TRUE(ev.affine && ev.eta_homeomorphism && ev.eta_sharp_iso);
  }
}

TEST(Functor, SchemeMorphismComaps) {
  const Universe x({"a", "b", "c"}), y({"1", "2"});
  const SetFunction f(x, y, {0, 1, 0});
  const SchemeMorphism m = scheme_morphism(f);
  const RingHomPS s = m.sharp(y.full_set());
  EXPECT_EQ(s(y.subset({"1"})), x.subset({"a", "c"}));
  EXPECT_TRUE(m.compatible_with_restrictions());
  EXPECT_TRUE(same_morphism(m, scheme_morphism(f)));
  EXPECT_FALSE(same_morphism(m, scheme_morphism(SetFunction(x, y, {1, 1, 0}))));
}

TEST(Functor, LawsAndFaithfulness) {
  const auto ev = check_functor_laws(2);
  EXPECT_TRUE(ev.holds());
  EXPECT_GT(ev.morphisms, 0u);
  EXPECT_GT(ev.compositions, 0u);
  EXPECT_TRUE(check_faithful(3));
}

TEST(Separatedness, FiniteWitness) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ev = separatedness_witness(Universe::numbered(n));
    EXPECT_TRUE(ev.holds());
    EXPECT_EQ(ev.pairs, std::size_t{1} << (2 * n));
  }
}
