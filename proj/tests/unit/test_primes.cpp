#include <random>
#include <thread>

#include <gmp.h>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "primerep/limits.hpp"
#include "primerep/primes.hpp"

using namespace primerep;

TEST(NthPrime, Examples)
{
    PrimeSource src;
    EXPECT_EQ(nth_prime(src, 1), 2);
    EXPECT_EQ(nth_prime(src, 5), 11);
    EXPECT_EQ(nth_prime(src, 25), 97);
    EXPECT_THROW(nth_prime(src, 0), PreconditionError);
}

TEST(PrimeSource, MatchesTrialDivision)
{
    PrimeSource src(16);  // forces several doublings
    const auto expected = oracle::trial_division_primes(20000);
    const auto got = src.first(20000);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        ASSERT_EQ(got[i], expected[i]) << "index " << i + 1;
}

TEST(PrimeSource, BertrandBetweenConsecutive)
{
    PrimeSource src;
    const auto p = src.first(5000);
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
        EXPECT_LT(p[k + 1], 2 * p[k]);
}

TEST(PrimeSource, ConcurrentReadersAgree)
{
    PrimeSource src(8);
    std::vector<std::uint64_t> results(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t)
        threads.emplace_back([&, t] { results[t] = src.prime(1000 + 500 * t); });
    for (auto& th : threads)
        th.join();
    const auto expected = oracle::trial_division_primes(1000 + 500 * 7);
    for (std::size_t t = 0; t < results.size(); ++t)
        EXPECT_EQ(results[t], expected[1000 + 500 * t - 1]);
}

TEST(PrimeSource, SieveCapRaisesResourceError)
{
    ResourceLimits lim = current_limits();
    lim.max_sieve_limit = 1 << 12;
    ScopedLimits scoped(lim);
    PrimeSource src(64);
    EXPECT_NO_THROW(src.prime(100));
    EXPECT_THROW(src.prime(10000), ResourceLimitError);
}

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(is_prime(1).composite());
    EXPECT_TRUE(is_prime(0).composite());
    EXPECT_EQ(is_prime(BigInt(2521008887UL)).status, PrimalityStatus::prime);
    EXPECT_EQ(is_prime(16381).status, PrimalityStatus::prime);
    EXPECT_FALSE(is_prime(16381).witness_info.empty());
}

TEST(IsPrime, ExhaustiveBelowOneMillion)
{
    std::vector<bool> composite(1000000, false);
    composite[0] = composite[1] = true;
    for (std::size_t i = 2; i * i < composite.size(); ++i)
        if (!composite[i])
            for (std::size_t j = i * i; j < composite.size(); j += i)
                composite[j] = true;
    for (std::uint64_t n = 0; n < composite.size(); ++n) {
        ASSERT_EQ(is_prime_u64(n), !composite[n]) << n;
        if (n % 997 == 0)  // the BigInt entry point on a sample, plus trial division
            ASSERT_EQ(!is_prime(BigInt(static_cast<unsigned long>(n))).composite(), oracle::is_prime_trial(n)) << n;
    }
}

TEST(IsPrime, StrongPseudoprimesToSmallBases)
{
    // 3215031751 = 151 * 751 * 28351 is a strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_TRUE(is_prime(BigInt(3215031751UL)).composite());
    // 3825123056546413051 is a strong pseudoprime to bases 2..23
    EXPECT_TRUE(is_prime(BigInt(3825123056546413051UL)).composite());
    EXPECT_TRUE(detail::strong_probable_prime_u64(3215031751UL, 2));
}

TEST(IsPrime, StrongLucasPseudoprimesAreCaughtByBaseTwo)
{
    for (unsigned long n : {5459UL, 5777UL, 10877UL, 16109UL, 18971UL}) {
        EXPECT_TRUE(detail::strong_lucas_probable_prime(BigInt(n))) << n;
        EXPECT_FALSE(detail::strong_probable_prime(BigInt(n), 2)) << n;
        EXPECT_TRUE(is_prime(BigInt(n)).composite());
    }
}

TEST(IsPrime, LargeAgreesWithGmp)
{
    std::mt19937_64 rng(12345);
    int primes_seen = 0;
    for (int i = 0; i < 300; ++i) {
        BigInt x = 0;
        for (int l = 0; l < 3; ++l)
            x = (x << 64) + BigInt(static_cast<unsigned long>(rng()));
        x |= 1;
        const PrimalityVerdict v = is_prime(x);
        const int gmp = mpz_probab_prime_p(x.get_mpz_t(), 40);
        EXPECT_EQ(v.composite(), gmp == 0) << x;
        if (!v.composite()) {
            EXPECT_EQ(v.status, PrimalityStatus::probable_prime);
            ++primes_seen;
        }
    }
    EXPECT_GT(primes_seen, 0);
}

TEST(IsPrime, MersenneAndProducts)
{
    const BigInt m127 = (BigInt(1) << 127) - 1;
    EXPECT_FALSE(is_prime(m127).composite());
    EXPECT_TRUE(is_prime((BigInt(1) << 128) - 1).composite());
    EXPECT_TRUE(is_prime(m127 * ((BigInt(1) << 89) - 1)).composite());
}

TEST(NextPrime, Examples)
{
    EXPECT_EQ(next_prime_geq(8), 11);
    EXPECT_EQ(next_prime_geq(1331), 1361);
    EXPECT_EQ(next_prime_geq(2048), 2053);
    EXPECT_EQ(next_prime_geq(0), 2);
    EXPECT_EQ(next_prime_geq(2), 2);
    EXPECT_EQ(next_prime_geq(3), 3);
}

TEST(LargestBelow, Examples)
{
    EXPECT_EQ(largest_prime_below(16), 13);
    EXPECT_EQ(largest_prime_below(16384), 16381);
    EXPECT_EQ(largest_prime_below(10), 7);
    EXPECT_EQ(largest_prime_below(3), 2);
    EXPECT_THROW(largest_prime_below(2), PreconditionError);
}

TEST(NextPrime, FixedPointsAndRoundTrip)
{
    const auto primes = oracle::trial_division_primes(3000);
    for (auto p : primes)
        ASSERT_EQ(next_prime_geq(BigInt(static_cast<unsigned long>(p))), p);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const BigInt x = BigInt(static_cast<unsigned long>(rng() % 100000000000UL + 2));
        const BigInt p = next_prime_geq(x);
        EXPECT_EQ(largest_prime_below(p + 1), p);
        for (BigInt y = x; y < p; ++y)
            ASSERT_TRUE(is_prime(y).composite()) << y;
    }
}

TEST(NextPrime, BigAgreesWithGmpNextprime)
{
    for (unsigned bits : {100U, 300U, 700U}) {
        const BigInt x = (BigInt(1) << bits) + 12345;
        BigInt ref;
        mpz_nextprime(ref.get_mpz_t(), BigInt(x - 1).get_mpz_t());
        EXPECT_EQ(next_prime_geq(x), ref) << bits;
    }
}

TEST(Bertrand, BoundChecks)
{
    PrimeSource src;
    EXPECT_TRUE(bertrand_bound_check(src, 10, 2).passed());
    EXPECT_TRUE(bertrand_bound_check(src, 1, 2).passed());
    EXPECT_TRUE(bertrand_bound_check(src, 1000, 4).passed());
    EXPECT_TRUE(bertrand_gap_check(src, 1000).passed());
    EXPECT_THROW(bertrand_bound_check(src, 10, 3), PreconditionError);
}
