#include <gtest/gtest.h>

#include <cruciform/grids.hpp>
#include <cruciform/semihex.hpp>

using namespace cruciform;

TEST(Semihex, UnitQExamples) {
  EXPECT_EQ(semihex_gf_formula(1, 1, {1}, SemihexWeighting::UnitQ), LaurentPoly::one());
  EXPECT_EQ(semihex_gf_formula(1, 1, {2}, SemihexWeighting::UnitQ), LaurentPoly::q(1));
  EXPECT_EQ(semihex_gf_formula(2, 1, {1, 3}, SemihexWeighting::UnitQ), LaurentPoly::q(1) + LaurentPoly::q(2));
  EXPECT_EQ(semihex_gf_brute(1, 1, {1}, SemihexWeighting::UnitQ), LaurentPoly::one());
  EXPECT_EQ(semihex_gf_brute(1, 1, {2}, SemihexWeighting::UnitQ), LaurentPoly::q(1));
  EXPECT_EQ(semihex_gf_brute(2, 1, {1, 3}, SemihexWeighting::UnitQ), LaurentPoly::q(1) + LaurentPoly::q(2));
}

TEST(Semihex, NoFreedomWhenBIsZero) {
  for (std::int64_t a = 1; a <= 4; ++a)
    EXPECT_EQ(semihex_gf_brute(a, 0, range_set(1, a), SemihexWeighting::UnitQ), LaurentPoly::one());
}

TEST(Semihex, BadDents) {
  for (auto [a, b, D] : std::vector<std::tuple<std::int64_t, std::int64_t, IntSet>>{
           {2, 1, {1}}, {2, 1, {2, 2}}, {2, 1, {0, 3}}, {2, 1, {3, 1}}, {1, 1, {3}}}) {
    try {
      semihex_gf_formula(a, b, D, SemihexWeighting::UnitQ);
      FAIL() << nlohmann::json(D).dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BadDents);
    }
  }
}

TEST(Semihex, UnitQGridMatchesBrute) {
  GridOptions o;
  o.max_ab = 6;
  auto rs = lemma_grid("eq3", o);
  EXPECT_GE(rs.size(), 100u);
  for (const auto& r : rs) EXPECT_TRUE(r.equal) << r.instance.dump();
}

TEST(Semihex, WeightedGridsMatchBrute) {
  for (const char* name : {"lemma27", "lemma28"})
    for (const auto& r : lemma_grid(name)) EXPECT_TRUE(r.equal) << name << ' ' << r.instance.dump();
}

TEST(Semihex, MonomialXY) {
  auto x = LaurentMonomial(Rational(2), 1), y = LaurentMonomial(make_rational(1, 3), -2);
  for (auto wt : {SemihexWeighting::Wt, SemihexWeighting::WtBar})
    for_each_subset(range_set(1, 5), 2, [&](const IntSet& D, const IntSet&) {
      EXPECT_TRUE(verify_semihex(2, 3, D, wt, x, y).equal) << nlohmann::json(D).dump();
    });
}

TEST(Semihex, CountReadingHasNoClosedForm) {
  EXPECT_THROW(semihex_gf_formula(2, 1, {1, 3}, SemihexWeighting::WtBarCount), Error);
  EXPECT_THROW(semihex_dual_graph(2, 1, {}, SemihexWeighting::WtBarCount), Error);
  // the two readings differ already on a small region
  auto pos = semihex_gf_brute(2, 2, {1, 2}, SemihexWeighting::WtBar, Rational(2), Rational(3));
  auto cnt = semihex_gf_brute(2, 2, {1, 2}, SemihexWeighting::WtBarCount, Rational(2), Rational(3));
  EXPECT_NE(pos, cnt);
}

TEST(SemihexDual, MatchingsEqualTilings) {
  auto x = LaurentMonomial(Rational(2), 0), y = LaurentMonomial(Rational(3), 0);
  for (std::int64_t a = 1; a <= 3; ++a)
    for (std::int64_t b = 0; a + b <= 5; ++b)
      for (auto wt : {SemihexWeighting::UnitQ, SemihexWeighting::Wt, SemihexWeighting::WtBar})
        for_each_subset(range_set(1, a + b), static_cast<std::size_t>(a), [&](const IntSet& removed, const IntSet&) {
          auto g = semihex_dual_graph(a, b, removed, wt, x, y);
          EXPECT_EQ(matching_poly_brute(g.graph), semihex_gf_brute(a, b, removed, wt, x, y))
              << a << ' ' << b << ' ' << nlohmann::json(removed).dump();
        });
}
