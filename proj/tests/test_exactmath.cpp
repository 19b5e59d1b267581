#include <gtest/gtest.h>

#include <cruciform/exactmath.hpp>

#include <random>

using namespace cruciform;

namespace {

LaurentPoly P(std::vector<std::pair<std::int64_t, long>> t) {
  LaurentPoly r;
  for (auto [e, c] : t) r += LaurentPoly::monomial(Rational(c), e);
  return r;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), ex(-4, 6), num(-9, 9), den(1, 4);
  LaurentPoly r;
  for (int k = len(rng); k > 0; --k) r += LaurentPoly::monomial(make_rational(num(rng), den(rng)), ex(rng));
  return r;
}

}  // namespace

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(rational_text(parse_rational("0/5")), "0/1");
  EXPECT_EQ(rational_text(make_rational(-4, -6)), "2/3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(LaurentPoly, ZeroIsEmpty) {
  LaurentPoly z = P({{2, 3}}) - P({{2, 3}});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_json(), "[]");
  EXPECT_EQ(z, LaurentPoly::zero());
}

TEST(LaurentPoly, CanonicalText) {
  LaurentPoly p = LaurentPoly::monomial(make_rational(-2, 4), -1) + LaurentPoly::q(3);
  EXPECT_EQ(p.to_json(), R"([[-1,"-1/2"],[3,"1/1"]])");
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(P({{0, 1}, {1, -1}}) * P({{0, 1}, {1, 1}}), P({{0, 1}, {2, -1}}));
  LaurentPoly p = P({{-2, 3}, {5, -1}});
  EXPECT_EQ(p * LaurentPoly::one(), p);
  EXPECT_EQ(LaurentPoly::q(-1) * LaurentPoly::q(1), LaurentPoly::one());
}

TEST(PolyExactDiv, Examples) {
  EXPECT_EQ(poly_exact_div(P({{0, 1}, {2, -1}}), P({{0, 1}, {1, -1}})), P({{0, 1}, {1, 1}}));
  LaurentPoly p = P({{-3, 2}, {1, 7}, {4, -1}});
  EXPECT_EQ(poly_exact_div(p, p), LaurentPoly::one());
  try {
    poly_exact_div(P({{0, 1}, {1, -1}}), P({{0, 1}, {2, -1}}));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
}

TEST(PolyExactDiv, ZeroDivisorRejected) { EXPECT_THROW(poly_exact_div(LaurentPoly::one(), LaurentPoly::zero()), Error); }

TEST(QPoch, Examples) {
  EXPECT_EQ(qpoch(LaurentMonomial(Rational(7), 3), 1, 0), LaurentPoly::one());
  EXPECT_EQ(qpoch_q(1, 1, 2), P({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
  EXPECT_EQ(qpoch_q(3, 2, 2), P({{0, 1}, {3, -1}}) * P({{0, 1}, {5, -1}}));
}

TEST(HyperQ, Examples) {
  EXPECT_EQ(hyperq(1), LaurentPoly::one());
  EXPECT_EQ(hyperq(3), poly_pow(P({{0, 1}, {1, -1}}), 2) * P({{0, 1}, {2, -1}}));
  EXPECT_EQ(hyperq(2, 2), P({{0, 1}, {2, -1}}));
  EXPECT_EQ(hyperq(0), LaurentPoly::one());
}

TEST(EvalAt, Examples) {
  EXPECT_EQ(eval_at(poly_pow(P({{0, 1}, {1, 1}}), 2), Rational(1)), Rational(4));
  EXPECT_EQ(eval_at(LaurentPoly::q(-1), Rational(2)), make_rational(1, 2));
  EXPECT_EQ(eval_at(LaurentPoly::zero(), make_rational(3, 7)), Rational(0));
}

TEST(ExponentGuard, Rejects) {
  EXPECT_THROW(LaurentPoly::q(kMaxExponent + 1), Error);
  EXPECT_THROW(LaurentMonomial::q(-kMaxExponent - 1), Error);
  try {
    LaurentPoly::q(kMaxExponent) * LaurentPoly::q(kMaxExponent);
    FAIL() << "expected ExponentOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExponentOverflow);
  }
}

TEST(RingProperties, RandomTriples) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b - b, a);
    if (!b.is_zero()) EXPECT_EQ(poly_exact_div(a * b, b), a);
  }
}

TEST(QPochProperties, Recurrences) {
  for (std::int64_t b = 1; b <= 3; ++b)
    for (std::int64_t k = 0; k <= 6; ++k) {
      LaurentMonomial x(make_rational(-3, 2), 2);
      EXPECT_EQ(qpoch(x, b, k + 1), qpoch(x, b, k) * (LaurentPoly::one() - LaurentPoly::from(x * LaurentMonomial::q(b * k))));
    }
  for (std::int64_t b = 1; b <= 3; ++b)
    for (std::int64_t n = 2; n <= 7; ++n) EXPECT_EQ(hyperq(n, b), hyperq(n - 1, b) * qpoch_q(b, b, n - 1));
}

TEST(Binom, Conventions) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(2, 3), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(4, -1), 0);
}
