#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stone/error.hpp"
#include "stone/tensor.hpp"

using namespace stone;

namespace {

BitSet bits(std::size_t n, std::initializer_list<std::size_t> on) {
  BitSet b(n);
  for (auto i : on) b.set(i);
  return b;
}

}  // namespace

TEST(F2Matrix, RowReduceRankAndReduce) {
  F2Matrix m(0, 4);
  m.append_row(bits(4, {0, 1}));
  m.append_row(bits(4, {1, 2}));
  m.append_row(bits(4, {0, 2}));
  m.append_row(bits(4, {}));
  EXPECT_EQ(m.row_reduce(), 2u);
  EXPECT_TRUE(m.is_reduced_echelon());
  EXPECT_EQ(m.pivot_columns(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m.reduce(bits(4, {0, 3})), bits(4, {2, 3}));
  EXPECT_EQ(m.reduce(bits(4, {0, 2})), bits(4, {}));
}

TEST(F2Matrix, RandomRankAgreesWithOracleElimination) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
    F2Matrix m(0, cols);
    std::vector<std::uint64_t> raw;
    for (std::size_t r = 0; r < rows; ++r) {
      BitSet b(cols);
      std::uint64_t w = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() & 1U) {
          b.set(c);
          w |= std::uint64_t{1} << c;
        }
      }
      m.append_row(b);
      raw.push_back(w);
    }
    // Rank as log2 of the size of the span.
    std::set<std::uint64_t> span{0};
    for (auto w : raw) {
      std::set<std::uint64_t> next = span;
      for (auto s : span) next.insert(s ^ w);
      span = next;
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    ASSERT_EQ(m.row_reduce(), rank);
    ASSERT_TRUE(m.is_reduced_echelon());
  }
}

TEST(AlgebraPresentation, ActionIsIntersection) {
  const Universe x({"a", "b", "c"});
  const AlgebraPresentation p(x, x.subset({"a", "b"}));
  EXPECT_EQ(p.basis(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(p.structure_map(x.subset({"b", "c"})), x.subset({"b"}));
  EXPECT_EQ(p.act(x.subset({"b", "c"}), x.subset({"a", "b"})), x.subset({"b"}));
  EXPECT_EQ(p.generators().size(), 4u);
}

// dim P(A) (x) P(B) against the oracle presented on all subset pairs; the
// oracle's values are |A n B| on every pair.
TEST(Tensor, DimensionMatchesOracle) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const Universe x = Universe::numbered(n);
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        const auto t = tensor_product(AlgebraPresentation(x, x.from_mask(a)), AlgebraPresentation(x, x.from_mask(b)));
        const std::size_t expect = oracle::tensor_dimension(n, a, b);
        ASSERT_EQ(t.dimension(), expect) << a << " " << b;
        ASSERT_EQ(expect, static_cast<std::size_t>(__builtin_popcountll(a & b)));
        ASSERT_TRUE(t.verify_canonical_iso().all());
      }
    }
  }
}

TEST(Tensor, BasisAndMultiplication) {
  const Universe x({"a", "b", "c"});
  const auto t = tensor_product(AlgebraPresentation(x, x.subset({"a", "b"})), AlgebraPresentation(x, x.subset({"b", "c"})));
  EXPECT_EQ(t.ambient_dimension(), 4u);
  EXPECT_EQ(t.dimension(), 1u);
  EXPECT_EQ(t.basis(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}}));
  EXPECT_EQ(t.canonical_image(t.unit()), x.subset({"b"}));
  const BitSet ab = t.pure(x.subset({"a"}), x.subset({"b"}));
  EXPECT_TRUE(t.canonical_image(ab).empty());
  EXPECT_EQ(t.multiply(t.unit(), t.unit()), t.unit());
  EXPECT_EQ(t.render(t.unit()), "{b}(x){b}");
}

TEST(Tensor, ComplementVanishes) {
  const Universe x = Universe::numbered(4);
  for (const auto& a : x.all_subsets()) {
    EXPECT_EQ(tensor_product(AlgebraPresentation(x, a), AlgebraPresentation(x, a.complement())).dimension(), 0u);
  }
}

TEST(Tensor, DifferentBasesRejected) {
  EXPECT_THROW(tensor_product(AlgebraPresentation(Universe({"a"}), Universe({"a"}).full_set()),
                              AlgebraPresentation(Universe({"b"}), Universe({"b"}).full_set())),
               DomainError);
}

TEST(ProductMap, IsoExactlyWhenDisjoint) {
  const Universe x = Universe::numbered(4);
  for (const auto& a : x.all_subsets()) {
    for (const auto& b : x.all_subsets()) {
      const ProductMap p = product_map(a, b);
      ASSERT_TRUE(p.injective);
      ASSERT_EQ(p.disjoint, (a * b).empty());
      ASSERT_EQ(p.surjective, p.disjoint);
      ASSERT_EQ(p.hom.source().size(), std::uint64_t{1} << ps_union(a, b).count());
    }
  }
  const Universe y({"a", "b", "c"});
  EXPECT_EQ(product_map(y.subset({"a"}), y.subset({"b"})).note, "A and B are disjoint: P(A u B) = P(A) x P(B)");
  EXPECT_EQ(product_map(y.subset({"a", "b"}), y.subset({"b", "c"})).note,
            "A and B meet in {b}: injective but not onto, 8 < 16 elements");
}

TEST(ExtendIdeal, AlongRestriction) {
  const Universe x({"a", "b", "c"});
  const Ring px = Ring::power_set(x);
  const SetElem a = x.subset({"a", "b"});
  const Universe ua = x.restrict_to(a);
  const Ring pa = Ring::power_set(ua);
  const RingHom phi =
      RingHom::tabulate(px, pa, [&](const RingElem& e) { return pa.subset(transfer(px.as_subset(e) * a, ua)); });
  const Ideal i = Ideal::generated_by(px, std::vector<RingElem>{px.subset(x.subset({"b", "c"}))});
  const Ideal e = extend_ideal(phi, i);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_TRUE(e.contains(pa.subset(ua.subset({"b"}))));
  EXPECT_FALSE(e.contains(pa.subset(ua.subset({"a"}))));
}

TEST(FinQuotient, VanishesForFiniteSets) {
  const Universe x = Universe::numbered(3);
  for (const auto& a : x.all_subsets()) {
    const auto q = tensor_with_fin_quotient(a);
    EXPECT_TRUE(q.is_zero());
    EXPECT_EQ(q.note, "X is finite, so Fin(X) = P(X) and both sides are the zero algebra");
  }
}
