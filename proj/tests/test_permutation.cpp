#include <random>

#include <gtest/gtest.h>

#include "nqr/errors.hpp"
#include "nqr/permutation.hpp"

using namespace nqr;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 3, 1}), DomainError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, CycleNotation) {
  const auto p = Permutation::from_cycles(5, "(0 1 2)(3 4)");
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_EQ(p(3), 4u);
  EXPECT_EQ(p.to_cycles(), "(0 1 2)(3 4)");
  EXPECT_EQ(Permutation::from_cycles(4, "()").to_cycles(), "()");
  EXPECT_EQ(Permutation::from_cycles(4, "(1,3)"), Permutation::from_cycles(4, "(3 1)"));
  EXPECT_THROW(Permutation::from_cycles(3, "(0 3)"), DomainError);
  EXPECT_THROW(Permutation::from_cycles(3, "(0 1 0)"), DomainError);
  EXPECT_THROW(Permutation::from_cycles(3, "(0 1"), DomainError);
}

TEST(Permutation, CompositionActsRightToLeft) {
  const auto a = Permutation::from_cycles(3, "(0 1)");
  const auto b = Permutation::from_cycles(3, "(1 2)");
  // (a*b)(1) = a(b(1)) = a(2) = 2
  EXPECT_EQ((a * b)(1), 2u);
  EXPECT_EQ((a * b)(0), 1u);
}

TEST(Permutation, OrderAndPrimeOrder) {
  EXPECT_EQ(Permutation::from_cycles(5, "(0 1 2)(3 4)").order(), 6u);
  EXPECT_EQ(Permutation::from_cycles(5, "(0 1 2)(3 4)").prime_order(), 0u);
  EXPECT_EQ(Permutation::from_cycles(6, "(0 1 2)(3 4 5)").prime_order(), 3u);
  EXPECT_EQ(Permutation::identity(4).order(), 1u);
  EXPECT_EQ(Permutation::identity(4).prime_order(), 0u);
}

TEST(Permutation, ConjugateRelabelsCycles) {
  const auto x = Permutation::from_cycles(4, "(0 1)");
  const auto g = Permutation::from_cycles(4, "(1 2 3)");
  EXPECT_EQ(conjugate(x, g), g * x * g.inverse());
  EXPECT_EQ(conjugate(x, g).to_cycles(), "(0 2)");
}

TEST(PermutationProperty, InverseAndOrder) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(1 + trial % 12, rng);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_TRUE((p.inverse() * p).is_identity());
    auto power = Permutation::identity(p.degree());
    for (std::uint64_t i = 0; i < p.order(); ++i) {
      if (i > 0) {
        EXPECT_FALSE(power.is_identity());
      }
      power = power * p;
    }
    EXPECT_TRUE(power.is_identity());
    EXPECT_EQ(Permutation::from_cycles(p.degree(), p.to_cycles()), p);
  }
}
