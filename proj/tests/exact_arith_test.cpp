#include <steinfill/exact_arith.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"

namespace steinfill {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational r = make_rational(2, -4);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(RationalTest, ZeroIsZeroOverOne) {
  const Rational r = make_rational(0, 7);
  EXPECT_EQ(r.numerator(), 0);
  EXPECT_EQ(r.denominator(), 1);
  EXPECT_TRUE(r.is_zero());
}

TEST(RationalTest, AlreadyLowestTerms) {
  // 108510 - 510 = 108000 = 2^5 3^3 5^3; 3617 is prime.
  EXPECT_EQ(oracle::gcd64(108000, 3617), 1);
  const Rational r = make_rational(BigInt(108510 - 510), 3617);
  EXPECT_EQ(r.numerator(), 108000);
  EXPECT_EQ(r.denominator(), 3617);
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1L) / Rational(), std::domain_error);
  EXPECT_THROW(Rational().reciprocal(), std::domain_error);
}

TEST(RationalTest, NumAndDenom) {
  EXPECT_EQ(numerator_of(make_rational(-3, 6)), -1);
  EXPECT_EQ(denominator_of(make_rational(-3, 6)), 2);
  EXPECT_EQ(numerator_of(make_rational(691, 2730)), 691);
  EXPECT_EQ(denominator_of(make_rational(3617, 510)), 510);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("12").to_string(), "12");
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(RationalTest, RandomConstructionIsCanonical) {
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t num = oracle::uniform(-1'000'000, 1'000'000);
    std::int64_t den = 0;
    while (den == 0) den = oracle::uniform(-1'000'000, 1'000'000);
    const Rational r = make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    ASSERT_GT(r.denominator(), 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    ASSERT_EQ(g, 1) << num << "/" << den;
    // Same value as the unreduced fraction.
    ASSERT_EQ(r.numerator() * den, BigInt(static_cast<long>(num)) * r.denominator());
    const std::int64_t g64 = oracle::gcd64(num, den);
    ASSERT_EQ(BigInt(abs(r.numerator())), BigInt(static_cast<long>((num < 0 ? -num : num) / g64)));
  }
}

TEST(ValuationTest, Examples) {
  EXPECT_EQ(ord_p(2, make_rational(1, 6)), ExtendedValuation::finite(-1));
  EXPECT_EQ(oracle::trial_ord(108000, 2), 5);
  EXPECT_EQ(ord_p(2, make_rational(108000, 3617)), ExtendedValuation::finite(5));
  EXPECT_TRUE(ord_p(5, Rational()).is_infinite());
  EXPECT_EQ(ord_p(3, make_rational(108000, 3617)), ExtendedValuation::finite(3));
}

TEST(ValuationTest, NonPrimeThrows) {
  EXPECT_THROW(ord_p(4, make_rational(1, 2)), std::domain_error);
  EXPECT_THROW(ord_p(1, make_rational(1, 2)), std::domain_error);
  EXPECT_THROW(ord_p(0, BigInt(8)), std::domain_error);
}

TEST(ValuationTest, InfinityOrdering) {
  const auto inf = ExtendedValuation::infinity();
  const auto five = ExtendedValuation::finite(5);
  EXPECT_LT(five, inf);
  EXPECT_EQ(inf, inf);
  EXPECT_EQ(inf + 3, inf);
  EXPECT_EQ(five + inf, inf);
  EXPECT_EQ(2 + five, ExtendedValuation::finite(7));
  EXPECT_TRUE(inf.at_least(1'000'000));
  EXPECT_THROW((void)inf.value(), std::domain_error);
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_EQ(min(inf, five), five);
}

TEST(ValuationTest, MatchesTrialDivision) {
  for (const long p : {2L, 3L, 5L, 7L, 11L}) {
    for (int i = 0; i < 300; ++i) {
      const BigInt num = oracle::random_bigint(96) * BigInt(p) * BigInt(p);
      const BigInt den = abs(oracle::random_bigint(64));
      const Rational r(num, den);
      ASSERT_EQ(ord_p(p, r).value(),
                oracle::trial_ord(r.numerator(), p) - oracle::trial_ord(r.denominator(), p));
    }
  }
}

TEST(ValuationTest, AdditiveOnProducts) {
  for (const long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 500; ++i) {
      const Rational a(oracle::random_bigint(80), abs(oracle::random_bigint(40)));
      const Rational b(oracle::random_bigint(80), abs(oracle::random_bigint(40)));
      ASSERT_EQ(ord_p(p, a * b), ord_p(p, a) + ord_p(p, b));
    }
  }
}

TEST(ValuationTest, UltrametricOnSums) {
  for (const long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 500; ++i) {
      // Plant powers of p so that both branches occur often.
      const Rational a =
          Rational(oracle::random_bigint(24) * p * oracle::uniform(1, 3),
                   BigInt(static_cast<long>(oracle::uniform(1, 50))));
      const Rational b = Rational(oracle::random_bigint(24)) *
                         Rational(BigInt(static_cast<long>(oracle::uniform(1, 3))), BigInt(p));
      const auto va = ord_p(p, a);
      const auto vb = ord_p(p, b);
      const auto vs = ord_p(p, a + b);
      ASSERT_GE(vs, min(va, vb));
      if (va != vb) {
        ASSERT_EQ(vs, min(va, vb));
      }
    }
  }
}

TEST(BinomialTest, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(BinomialTest, MatchesPascalTriangle) {
  const auto rows = oracle::pascal(80);
  EXPECT_EQ(rows[10][3], 120);
  for (unsigned long n = 0; n <= 80; ++n) {
    for (unsigned long s = 0; s <= n; ++s) ASSERT_EQ(binomial(n, s), rows[n][s]) << n << "," << s;
  }
}

TEST(Pow2Test, NegativeExponents) {
  EXPECT_EQ(pow2(-3), make_rational(1, 8));
  EXPECT_EQ(pow2(0), Rational(1L));
  EXPECT_EQ(pow2(10), Rational(1024L));
}

}  // namespace
}  // namespace steinfill
