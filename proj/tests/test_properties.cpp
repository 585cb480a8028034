#include <gtest/gtest.h>

#include "properties.hpp"

using namespace facecode;

constexpr int kCases = 10000;

TEST(Properties, DualIsAnInvolution) { EXPECT_EQ(properties::dual_involution(1, kCases), 0); }

TEST(Properties, SelfDualCodesHaveEvenWeights) { EXPECT_EQ(properties::self_dual_even(2, kCases), 0); }

TEST(Properties, InnerProductWeightIdentity) { EXPECT_EQ(properties::inner_identity(3, kCases), 0); }

TEST(Properties, CircIsIdempotent) { EXPECT_EQ(properties::circ_idempotent(4, kCases), 0); }

TEST(Properties, RandomSelfDualCodesAreSelfDual) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 * (1 + rng() % 12);
    const auto c = properties::random_self_dual(rng, n);
    EXPECT_EQ(gf2::dual_code(c), c);
  }
}

TEST(Properties, DetectsABrokenIdentity) {
  // The weight identity is sharp: an off-by-one in the inner product would be caught.
  std::mt19937_64 rng(6);
  int hits = 0;
  for (int i = 0; i < 100; ++i) {
    const auto u = properties::random_vector(rng, 30);
    const auto v = properties::random_vector(rng, 30);
    const auto wrong = 2 * (1 - gf2::inner(u, v));
    const auto rhs = static_cast<long>(u.weight() + v.weight()) - static_cast<long>((u ^ v).weight());
    if (((rhs - wrong) % 4 + 4) % 4 != 0) ++hits;
  }
  EXPECT_EQ(hits, 100);
}
