#include <steinfill/bernoulli.hpp>

#include <gtest/gtest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "oracles.hpp"

namespace steinfill {
namespace {

Rational q(long num, long den) { return make_rational(num, den); }

TEST(BernoulliNtTest, Examples) {
  EXPECT_EQ(bernoulli_nt(NTIndex(0)), Rational(1L));
  EXPECT_EQ(bernoulli_nt(NTIndex(1)), q(-1, 2));
  EXPECT_EQ(bernoulli_nt(NTIndex(2)), q(1, 6));
  EXPECT_EQ(bernoulli_nt(NTIndex(3)), Rational());
  EXPECT_EQ(bernoulli_nt(NTIndex(12)), q(-691, 2730));
}

TEST(BernoulliNtTest, NegativeIndexRejected) {
  EXPECT_THROW(NTIndex(-1), std::domain_error);
  EXPECT_THROW(TopIndex(0), std::domain_error);
}

TEST(BernoulliNtTest, MatchesGeneratingFunction) {
  // Includes NT_1 = -1/2, checked from the series to second order.
  const auto series = oracle::bernoulli_from_series(60);
  EXPECT_EQ(series[1], q(-1, 2));
  EXPECT_EQ(series[2], q(1, 6));
  for (std::int64_t n = 0; n <= 60; ++n) {
    ASSERT_EQ(bernoulli_nt(NTIndex(n)), series[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(BernoulliNtTest, AuditModeCrossChecks) {
  EXPECT_EQ(bernoulli_nt(NTIndex(40), Mode::audit), oracle::bernoulli_from_series(40)[40]);
  EXPECT_EQ(bernoulli_nt(NTIndex(1), Mode::audit), q(-1, 2));
  EXPECT_EQ(bernoulli_nt(NTIndex(7), Mode::audit), Rational());
}

TEST(BernoulliTopTest, ListedValues) {
  const Rational listed[] = {q(1, 6),  q(1, 30),     q(1, 42), q(1, 30),
                             q(5, 66), q(691, 2730), q(7, 6),  q(3617, 510)};
  for (std::int64_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(bernoulli_top(TopIndex(k)), listed[k - 1]) << "k=" << k;
  }
}

TEST(BernoulliTopTest, PositiveAndBridged) {
  for (std::int64_t k = 1; k <= 500; ++k) {
    const Rational b = bernoulli_top(TopIndex(k));
    ASSERT_GT(b.sign(), 0);
    const auto bridge = index_bridge(TopIndex(k));
    ASSERT_EQ(bridge.nt_index.value, 2 * k);
    ASSERT_EQ(bridge.sign, k % 2 == 1 ? 1 : -1);
    const Rational nt = bernoulli_nt(bridge.nt_index);
    ASSERT_EQ(b, bridge.sign == 1 ? nt : -nt);
  }
}

TEST(IndexBridgeTest, Examples) {
  EXPECT_EQ(index_bridge(TopIndex(1)).nt_index.value, 2);
  EXPECT_EQ(index_bridge(TopIndex(1)).sign, 1);
  EXPECT_EQ(index_bridge(TopIndex(2)).nt_index.value, 4);
  EXPECT_EQ(index_bridge(TopIndex(2)).sign, -1);
  const auto b6 = index_bridge(TopIndex(6));
  EXPECT_EQ(b6.nt_index.value, 12);
  EXPECT_EQ(b6.sign, -1);
  EXPECT_EQ(-bernoulli_nt(b6.nt_index), q(691, 2730));
}

TEST(BernoulliNtTest, SignAlternatesAndOddVanish) {
  for (std::int64_t n = 2; n <= 1000; ++n) {
    const Rational b = bernoulli_nt(NTIndex(n));
    if (n % 2 == 1) {
      ASSERT_TRUE(b.is_zero()) << n;
    } else {
      ASSERT_EQ(b.sign(), (n / 2) % 2 == 1 ? 1 : -1) << n;
    }
  }
}

TEST(VscTest, Examples) {
  EXPECT_EQ(vsc_denominator(NTIndex(2)), 6);
  EXPECT_EQ(vsc_denominator(NTIndex(12)), 2730);
  EXPECT_EQ(vsc_denominator(NTIndex(16)), 510);
}

TEST(VscTest, OddOrZeroRejected) {
  EXPECT_THROW(vsc_denominator(NTIndex(0)), std::domain_error);
  EXPECT_THROW(vsc_denominator(NTIndex(7)), std::domain_error);
}

TEST(VscTest, MatchesDenominatorsAndPrimeEnumeration) {
  for (std::int64_t n = 2; n <= 1000; n += 2) {
    const BigInt den = bernoulli_nt(NTIndex(n)).denominator();
    ASSERT_EQ(den, vsc_denominator(NTIndex(n))) << n;
    // Brute force over all primes p <= n + 1.
    BigInt brute = 1;
    for (std::int64_t p = 2; p <= n + 1; ++p) {
      if (oracle::trial_prime(p) && n % (p - 1) == 0) brute *= static_cast<long>(p);
    }
    ASSERT_EQ(den, brute) << n;
    ASSERT_EQ(oracle::trial_ord(den, 2), 1) << n;
  }
}

TEST(NumDenPartsTest, Examples) {
  const auto p1 = num_den_parts(TopIndex(1));
  EXPECT_EQ(p1.numerator, 1);
  EXPECT_EQ(p1.denominator, 6);
  EXPECT_EQ(p1.odd_denominator, 3);
  const auto p6 = num_den_parts(TopIndex(6));
  EXPECT_EQ(p6.numerator, 691);
  EXPECT_EQ(p6.denominator, 2730);
  EXPECT_EQ(p6.odd_denominator, 1365);
  const auto p8 = num_den_parts(TopIndex(8));
  EXPECT_EQ(p8.numerator, 3617);
  EXPECT_EQ(p8.denominator, 510);
  EXPECT_EQ(p8.odd_denominator, 255);
}

TEST(NumDenPartsTest, OddnessFactsUpTo500) {
  for (std::int64_t k = 1; k <= 500; ++k) {
    const auto p = num_den_parts(TopIndex(k));
    ASSERT_EQ(oracle::trial_ord(p.numerator, 2), 0) << k;
    ASSERT_EQ(oracle::trial_ord(p.odd_denominator, 2), 0) << k;
    ASSERT_EQ(p.denominator, 2 * p.odd_denominator) << k;
  }
}

TEST(SelfCheckTest, Examples) {
  const auto small = self_check(NTIndex(16));
  EXPECT_TRUE(small.ok());
  EXPECT_EQ(small.checked, 8);
  const auto empty = self_check(NTIndex(0));
  EXPECT_TRUE(empty.ok());
  EXPECT_EQ(empty.checked, 0);
  const auto wide = self_check(NTIndex(200));
  EXPECT_TRUE(wide.ok());
  EXPECT_EQ(wide.checked, 100);
  EXPECT_THROW(self_check(NTIndex(15)), std::domain_error);
}

TEST(AlgorithmsTest, TangentNumbers) {
  const auto t = tangent_numbers(6);
  const long expected[] = {1, 2, 16, 272, 7936, 353792};
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(t[i], expected[i - 1]);
}

TEST(AlgorithmsTest, AkiyamaTanigawaMatchesSeries) {
  const auto at = bernoulli_by_akiyama_tanigawa(50);
  const auto series = oracle::bernoulli_from_series(50);
  for (std::size_t n = 0; n <= 50; ++n) ASSERT_EQ(at[n], series[n]) << n;
}

TEST(BernoulliTableTest, CacheIsObservationallyPure) {
  BernoulliTable cached(true);
  BernoulliTable uncached(false);
  // Requests in scrambled order exercise table growth.
  for (const std::int64_t n : {300, 2, 64, 65, 1, 0, 998, 40, 1000, 512}) {
    ASSERT_EQ(cached.nt(NTIndex(n)), uncached.nt(NTIndex(n))) << n;
  }
  EXPECT_GT(cached.cached_count(), 0u);
  EXPECT_EQ(uncached.cached_count(), 0u);
}

TEST(BernoulliTableTest, ConcurrentReadsAgree) {
  BernoulliTable table;
  const auto reference = even_bernoulli_by_tangent(200);
  std::vector<std::thread> workers;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::int64_t n = 400 - 2 * w; n >= 0; n -= 2) {
        if (table.nt(NTIndex(n)) != reference[static_cast<std::size_t>(n / 2)]) ++mismatches[w];
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const int m : mismatches) EXPECT_EQ(m, 0);
}

}  // namespace
}  // namespace steinfill
