#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stone/error.hpp"
#include "stone/fincofin.hpp"

using namespace stone;

namespace {

FinCofElem random_elem(std::mt19937_64& rng) {
  std::vector<std::uint64_t> s(rng() % 8);
  for (auto& v : s) v = rng() % 40;
  return FinCofElem(rng() % 2 ? FinCofElem::Mode::Cofinite : FinCofElem::Mode::Finite, s);
}

oracle::Window to_window(const FinCofElem& a) { return oracle::Window::make(!a.is_finite(), a.support()); }

}  // namespace

TEST(FinCof, TextForms) {
  EXPECT_EQ(FinCofElem::fin({2, 1, 2}).to_string(), "fin{1,2}");
  EXPECT_EQ(FinCofElem::cofin({4}).to_string(), "cofin{4}");
  EXPECT_EQ(FinCofElem::zero().to_string(), "fin{}");
  EXPECT_EQ(FinCofElem::one().to_string(), "cofin{}");
  EXPECT_EQ(FinCofElem::parse("cofin{3,1}"), FinCofElem::cofin({1, 3}));
  EXPECT_THROW(FinCofElem::parse("fin[1]"), DomainError);
  EXPECT_THROW(FinCofElem::parse("cofin{x}"), DomainError);
}

TEST(FinCof, CaseTable) {
  EXPECT_EQ(FinCofElem::cofin({1}) + FinCofElem::cofin({2}), FinCofElem::fin({1, 2}));
  EXPECT_EQ(FinCofElem::fin({1, 2}) + FinCofElem::cofin({2}), FinCofElem::cofin({1}));
  EXPECT_EQ(FinCofElem::fin({1, 2}) * FinCofElem::cofin({2}), FinCofElem::fin({1}));
  EXPECT_EQ(FinCofElem::cofin({1}) * FinCofElem::cofin({2}), FinCofElem::cofin({1, 2}));
  EXPECT_EQ(FinCofElem::fin({1, 2}) * FinCofElem::fin({2, 3}), FinCofElem::fin({2}));
  EXPECT_EQ(fc_neg(FinCofElem::cofin({5})), FinCofElem::cofin({5}));
}

// Operations against membership on a 64-point window plus the common tail.
TEST(FinCofProperty, WindowedOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const FinCofElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    ASSERT_EQ(to_window(a + b), to_window(a) + to_window(b));
    ASSERT_EQ(to_window(a * b), to_window(a) * to_window(b));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * a, a);
    ASSERT_EQ(a + a, FinCofElem::zero());
    ASSERT_EQ(FinCofElem::parse(a.to_string()), a);
    const auto w = window(a, 50);
    for (std::size_t i = 0; i < 50; ++i) ASSERT_EQ(w[i] != 0, a.contains(i));
  }
}

TEST(SHom, BothKindsAreHoms) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10000; ++trial) {
    const FinCofElem a = random_elem(rng), b = random_elem(rng);
    ASSERT_FALSE(shom_violation(frechet_hom(), a, b).has_value());
    ASSERT_FALSE(shom_violation(point_hom(rng() % 50), a, b).has_value());
  }
  EXPECT_EQ(frechet_hom()(FinCofElem::cofin({1, 2})), 1);
  EXPECT_EQ(frechet_hom()(FinCofElem::fin({1, 2})), 0);
  EXPECT_EQ(point_hom(3)(FinCofElem::fin({3})), 1);
  EXPECT_EQ(point_hom(3).to_string(), "eval(3)");
  EXPECT_EQ(frechet_hom().to_string(), "frechet");
  EXPECT_THROW(frechet_hom().point(), DomainError);
}

TEST(Fin, IsNonPrincipalProperIdeal) {
  std::mt19937_64 rng(2);
  std::vector<FinCofElem> sample;
  for (int i = 0; i < 200; ++i) sample.push_back(random_elem(rng));
  const auto ev = fin_is_ideal_witness(sample);
  EXPECT_TRUE(ev.holds());
  EXPECT_GT(ev.sums_checked, 0u);
  EXPECT_GT(ev.products_checked, 0u);
  EXPECT_TRUE(is_in_fin(FinCofElem::fin({7})));
  EXPECT_FALSE(is_in_fin(FinCofElem::cofin({7})));
  EXPECT_EQ(fin_not_principal_witness(FinCofElem::fin({1, 5})), 6u);
  EXPECT_EQ(fin_not_principal_witness(FinCofElem::zero()), 0u);
  EXPECT_THROW(fin_not_principal_witness(FinCofElem::cofin({})), DomainError);
}

TEST(NonInduced, SeparatesEveryPoint) {
  for (std::uint64_t x = 0; x <= 100; ++x) {
    const auto w = non_induced_witness(x);
    ASSERT_TRUE(w.separates());
    ASSERT_EQ(w.element, FinCofElem::cofin({x}));
    ASSERT_EQ(w.frechet_value, 1);
    ASSERT_EQ(w.point_value, 0);
  }
}

TEST(Kernels, Classification) {
  const auto f = kernel_classify(frechet_hom());
  EXPECT_EQ(f.family, KernelClass::Family::FinKernel);
  EXPECT_EQ(f.to_string(), "Fin");
  EXPECT_TRUE(f.quotient_is_field);
  EXPECT_EQ(frechet_hom()(f.kernel_member), 0);
  EXPECT_EQ(frechet_hom()(f.non_member), 1);
  const auto p = kernel_classify(point_hom(4));
  EXPECT_EQ(p.family, KernelClass::Family::PointKernel);
  EXPECT_EQ(p.point, 4u);
  EXPECT_EQ(p.to_string(), "m_4 n S");
}

TEST(Kernels, ImageCondition) {
  const auto p = image_condition(point_hom(2));
  EXPECT_TRUE(p.holds);
  ASSERT_TRUE(p.witness.has_value());
  EXPECT_TRUE(p.witness->is_finite());
  EXPECT_EQ(point_hom(2)(FinCofElem::one() + *p.witness), 0);
  EXPECT_FALSE(image_condition(frechet_hom()).holds);
}
