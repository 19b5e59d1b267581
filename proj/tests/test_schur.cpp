#include <gtest/gtest.h>

#include <cruciform/schur.hpp>

#include <json.hpp>

using namespace cruciform;

TEST(LambdaOfSet, Examples) {
  EXPECT_EQ(lambda_of_set({1, 2, 3}), (Partition{0, 0, 0}));
  EXPECT_EQ(lambda_of_set({2, 5}), (Partition{3, 1}));
  EXPECT_EQ(lambda_of_set({}), Partition{});
  EXPECT_THROW(lambda_of_set({3, 2}), Error);
}

TEST(SquareAndTriangle, Examples) {
  EXPECT_EQ(square_stat({2, 5}), 4);
  EXPECT_EQ(square_stat({1, 2, 3}), 0);
  EXPECT_EQ(triangle_prod({}), LaurentPoly::one());
  EXPECT_EQ(triangle_prod({1, 3}), LaurentPoly::q(3) - LaurentPoly::q(1));
}

TEST(SchurPrincipal, Examples) {
  EXPECT_EQ(schur_principal({}), LaurentPoly::one());
  EXPECT_EQ(schur_principal({1, 2, 3}), LaurentPoly::one());
  EXPECT_EQ(schur_principal({2}), LaurentPoly::q(1));
  // s_(1)(q, q^2) = q + q^2
  EXPECT_EQ(schur_principal({1, 3}), LaurentPoly::q(1) + LaurentPoly::q(2));
}

TEST(SchurPrincipal, MatchesPlanePartitionCount) {
  for (std::int64_t k = 1; k <= 4; ++k)
    for_each_subset(range_set(1, 7), static_cast<std::size_t>(k), [&](const IntSet& x, const IntSet&) {
      EXPECT_EQ(schur_principal(x), schur_by_plane_partitions(lambda_of_set(x), k)) << nlohmann::json(x).dump();
    });
}

TEST(SchurPrincipal, PositiveWithLowestTerm) {
  for (std::int64_t k = 1; k <= 5; ++k)
    for_each_subset(range_set(1, 8), static_cast<std::size_t>(k), [&](const IntSet& x, const IntSet&) {
      auto p = schur_principal(x);
      ASSERT_FALSE(p.is_zero());
      for (const auto& [e, c] : p.terms()) EXPECT_GT(c, 0);
      // lowest tableau fills row i with i
      auto lam = lambda_of_set(x);
      std::int64_t low = 0;
      for (std::size_t i = 0; i < lam.size(); ++i) low += static_cast<std::int64_t>(i + 1) * lam[i];
      EXPECT_EQ(p.min_exp(), low);
    });
}

TEST(ForEachSubset, CountsAndComplement) {
  std::size_t n = 0;
  for_each_subset(range_set(1, 6), 3, [&](const IntSet& in, const IntSet& out) {
    ++n;
    EXPECT_EQ(in.size() + out.size(), 6u);
  });
  EXPECT_EQ(n, 20u);
  n = 0;
  for_each_subset(range_set(1, 3), 0, [&](const IntSet& in, const IntSet&) {
    ++n;
    EXPECT_TRUE(in.empty());
  });
  EXPECT_EQ(n, 1u);
}
