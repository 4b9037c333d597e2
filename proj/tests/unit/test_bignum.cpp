#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "primerep/bignum.hpp"
#include "primerep/digits.hpp"
#include "primerep/interval.hpp"
#include "primerep/limits.hpp"

using namespace primerep;

namespace {

BigRat q(long n, long d) { return make_rat(n, d); }

}  // namespace

TEST(Ipow, SmallPowers)
{
    EXPECT_EQ(ipow(BigInt(2), 10), 1024);
    EXPECT_EQ(ipow(BigInt(10), 0), 1);
    EXPECT_EQ(ipow(BigInt(2), 2 + 2), 16);
    EXPECT_EQ(ipow(BigInt(-3), 3), -27);
    EXPECT_EQ(ipow(BigInt(0), 0), 1);
}

TEST(Ipow, BigExponentOverload)
{
    EXPECT_EQ(ipow(BigInt(3), BigInt(5)), 243);
    EXPECT_EQ(ipow(BigInt(1), BigInt("100000000000000000000")), 1);
    EXPECT_EQ(ipow(BigInt(-1), BigInt("100000000000000000001")), -1);
    EXPECT_EQ(ipow(BigInt(0), BigInt("100000000000000000001")), 0);
    EXPECT_THROW(ipow(BigInt(2), BigInt("100000000000000000000")), ResourceLimitError);
}

TEST(Ipow, BitCapIsEnforced)
{
    ResourceLimits lim = current_limits();
    lim.max_bits = 1000;
    ScopedLimits scoped(lim);
    EXPECT_NO_THROW(ipow(BigInt(2), 900));
    EXPECT_THROW(ipow(BigInt(2), 5000), ResourceLimitError);
}

TEST(Factorial, Values)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    BigInt p = 1;
    for (unsigned long i = 2; i <= 8; ++i)
        p *= i;
    EXPECT_EQ(factorial(8), p);
    EXPECT_EQ(factorial(8), 40320);
}

TEST(FloorRatio, FloorNotTruncation)
{
    EXPECT_EQ(floor_ratio(q(7, 2)), 3);
    EXPECT_EQ(floor_ratio(q(-7, 2)), -4);
    EXPECT_EQ(floor_ratio(q(11, 16) * BigRat(16)), 11);
    EXPECT_EQ(ceil_ratio(q(7, 2)), 4);
    EXPECT_EQ(ceil_ratio(q(-7, 2)), -3);
}

TEST(FloorRatio, PropertyRandom)
{
    std::mt19937_64 rng(20240101);
    for (int i = 0; i < 500; ++i) {
        const long n = static_cast<long>(rng() % 2000001) - 1000000;
        const long d = static_cast<long>(rng() % 999) + 1;
        const BigRat x = q(n, d);
        const BigInt f = floor_ratio(x);
        EXPECT_LE(BigRat(f), x);
        EXPECT_LT(x, BigRat(f + 1));
    }
}

TEST(RationalNormalization, LowestTerms)
{
    const BigRat x = make_rat(BigInt(22), BigInt(-16));
    EXPECT_EQ(x.get_num(), -11);
    EXPECT_EQ(x.get_den(), 8);
    EXPECT_THROW(make_rat(1, 0), PreconditionError);
}

TEST(NthRoot, Examples)
{
    EXPECT_EQ(nth_root_floor(16, 2), 4);
    EXPECT_EQ(nth_root_floor(26, 3), 2);
    EXPECT_EQ(nth_root_floor(1361, 9), 2);
    EXPECT_EQ(nth_root_floor(0, 5), 0);
    EXPECT_EQ(nth_root_floor(1, 1000), 1);
}

TEST(NthRoot, AgreesWithBisectionOracle)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt x = 0;
        const int limbs = 1 + static_cast<int>(rng() % 6);
        for (int l = 0; l < limbs; ++l)
            x = (x << 64) + BigInt(static_cast<unsigned long>(rng()));
        const unsigned long n = 1 + rng() % 40;
        const BigInt r = nth_root_floor(x, n);
        EXPECT_EQ(r, oracle::root_bisect(x, n)) << x << " root " << n;
        EXPECT_LE(ipow(r, n), x);
        EXPECT_GT(ipow(r + 1, n), x);
    }
}

TEST(NthRoot, PerfectPowers)
{
    EXPECT_TRUE(is_perfect_power_of(ipow(BigInt(12345), 7), 7));
    EXPECT_FALSE(is_perfect_power_of(ipow(BigInt(12345), 7) + 1, 7));
}

TEST(StringRoundTrip, BigInt)
{
    const std::string s = "-123456789012345678901234567890123456789";
    EXPECT_EQ(to_string(parse_bigint(s)), s);
    EXPECT_THROW(parse_bigint("12a"), PreconditionError);
    EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
    EXPECT_EQ(to_string(BigRat(5)), "5");
}

TEST(IntervalArith, Examples)
{
    const RatInterval a(1, 2), b(3, 4);
    EXPECT_EQ(a + b, RatInterval(4, 6));
    EXPECT_EQ(RatInterval(-1, 1) * RatInterval(-1, 1), RatInterval(-1, 1));
    EXPECT_EQ(RatInterval(q(1, 2), q(3, 4)) - RatInterval(q(1, 4), q(1, 4)), RatInterval(q(1, 4), q(1, 2)));
    EXPECT_THROW(RatInterval(2, 1), PreconditionError);
}

TEST(IntervalArith, EnclosureSoundnessRandomPoints)
{
    std::mt19937_64 rng(99);
    auto rnd = [&] { return q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1); };
    for (int i = 0; i < 300; ++i) {
        BigRat a0 = rnd(), a1 = rnd(), b0 = rnd(), b1 = rnd();
        if (a1 < a0)
            std::swap(a0, a1);
        if (b1 < b0)
            std::swap(b0, b1);
        const RatInterval A(a0, a1), B(b0, b1);
        // random interior points
        const BigRat t = q(static_cast<long>(rng() % 101), 100), u = q(static_cast<long>(rng() % 101), 100);
        const BigRat p = a0 + t * (a1 - a0), r = b0 + u * (b1 - b0);
        EXPECT_TRUE((A + B).contains(BigRat(p + r)));
        EXPECT_TRUE((A - B).contains(BigRat(p - r)));
        EXPECT_TRUE((A * B).contains(BigRat(p * r)));
    }
}

TEST(Log2, ExactPowersOfTwo)
{
    for (unsigned long k = 0; k <= 64; ++k) {
        const BigRat x(BigInt(1) << k);
        const RatInterval e = log2_enclosure(RatInterval::point(x), 32);
        EXPECT_TRUE(e.contains(BigRat(k))) << k;
        EXPECT_LE(e.width(), make_rat(1, BigInt(1) << 32));
    }
    EXPECT_EQ(exact_log2(BigRat(8)), BigInt(3));
    EXPECT_EQ(exact_log2(make_rat(1, 4)), BigInt(-2));
    EXPECT_FALSE(exact_log2(BigRat(6)).has_value());
}

TEST(Log2, MonotoneBracket)
{
    const RatInterval e = log2_enclosure(RatInterval(2, 4), 16);
    EXPECT_LE(e.lo(), 1);
    EXPECT_GE(e.hi(), 2);
}

TEST(Log2, ThreeAgainstBisectionOracle)
{
    const unsigned bits = 20;
    const RatInterval e = log2_enclosure(RatInterval::point(BigRat(3)), bits);
    // k/2^20 <= log2 3 < (k+1)/2^20 from exact comparisons 3^(2^20) vs 2^k
    const BigInt k = oracle::log2_floor_scaled(BigRat(3), bits);
    const BigRat lo = make_rat(k, BigInt(1) << bits);
    const BigRat hi = make_rat(k + 1, BigInt(1) << bits);
    EXPECT_LT(e.lo(), hi);
    EXPECT_GT(e.hi(), lo);
    EXPECT_LE(e.width(), make_rat(1, BigInt(1) << bits));
    EXPECT_EQ(decimal_prefix(e, 6).text(), "1.58496");
}

TEST(Log2, Errors)
{
    EXPECT_THROW(log2_enclosure(RatInterval(0, 1), 8), DomainError);
    EXPECT_THROW(log2_enclosure(RatInterval(-2, 1), 8), DomainError);
}

TEST(Digits, DegenerateHalf)
{
    const CertifiedDigits d = digits_in_base(RatInterval::point(q(1, 2)), 10, 5);
    EXPECT_EQ(d.text(), "0.50000");
    EXPECT_TRUE(d.complete());
}

TEST(Digits, DegenerateMatchesLongDivision)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const long n = static_cast<long>(rng() % 100000) + 1;
        const long dd = static_cast<long>(rng() % 9999) + 1;
        const unsigned base = 2 + static_cast<unsigned>(rng() % 35);
        const BigRat x = q(n, dd);
        const CertifiedDigits d = digits_in_base(RatInterval::point(x), base, 30);
        EXPECT_EQ(d.fraction, oracle::long_division(x.get_num(), x.get_den(), base, 30));
        EXPECT_TRUE(d.integer_certified);
    }
}

TEST(Digits, BetaFromFourTerms)
{
    const BigRat partial = q(2, 100) + q(3, 10000) + make_rat(5, ipow(BigInt(10), 8)) + make_rat(7, ipow(BigInt(10), 16));
    BigRat tail = 0;
    for (unsigned k = 5; k <= 8; ++k)
        tail += make_rat(BigInt(1) << k, ipow(BigInt(10), 1UL << k));
    tail *= 2;  // generous bound on the k >= 5 tail
    const CertifiedDigits d = digits_in_base(RatInterval(partial, partial + tail), 10, 16);
    EXPECT_EQ(d.text(), "0.0203000500000007");
}

TEST(Digits, AmbiguityIsReportedNotThrown)
{
    const CertifiedDigits d = digits_in_base(RatInterval(q(19, 10), q(21, 10)), 10, 4);
    EXPECT_FALSE(d.integer_certified);
    EXPECT_FALSE(d.complete());
    EXPECT_EQ(d.text(), "");
    const CertifiedDigits e = digits_in_base(RatInterval(q(123, 100), q(124, 100)), 10, 4);
    EXPECT_EQ(e.text(), "1.2");
    EXPECT_EQ(e.certified_fraction_digits(), 1U);
}

TEST(Digits, OpenUpperEnd)
{
    // [1.5, 2): every member has integer part 1 only when 2 is excluded
    const RatInterval x(q(3, 2), BigRat(2));
    EXPECT_FALSE(digits_in_base(x, 10, 1).integer_certified);
    EXPECT_EQ(decimal_prefix(x, 1, UpperEnd::open).text(), "1");
}

TEST(Digits, DecimalPrefixCounting)
{
    const RatInterval x = RatInterval::point(q(2920050977316L, 1000000000000L));
    EXPECT_EQ(decimal_prefix(x, 13).text(), "2.920050977316");
    EXPECT_EQ(decimal_prefix(RatInterval::point(q(203, 10000)), 4).text(), "0.0203");
}
