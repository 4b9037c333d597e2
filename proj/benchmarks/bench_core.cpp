#include <benchmark/benchmark.h>

#include "primerep/bignum.hpp"
#include "primerep/classic.hpp"
#include "primerep/interval.hpp"
#include "primerep/primes.hpp"
#include "primerep/series.hpp"

using namespace primerep;

static void BM_Ipow(benchmark::State& state)
{
    const auto e = static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ipow(BigInt(3), e));
}
BENCHMARK(BM_Ipow)->RangeMultiplier(8)->Range(64, 1 << 18);

static void BM_NthRoot(benchmark::State& state)
{
    const BigInt x = ipow(BigInt(7), static_cast<unsigned long>(state.range(0))) + 12345;
    for (auto _ : state)
        benchmark::DoNotOptimize(nth_root_floor(x, 3));
}
BENCHMARK(BM_NthRoot)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_IsPrime2048(benchmark::State& state)
{
    const BigInt p = next_prime_geq(BigInt(1) << 2047);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_prime(p));
}
BENCHMARK(BM_IsPrime2048)->Unit(benchmark::kMillisecond);

static void BM_NextPrime(benchmark::State& state)
{
    const BigInt x = BigInt(1) << static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(next_prime_geq(x));
}
BENCHMARK(BM_NextPrime)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_SieveFirst(benchmark::State& state)
{
    for (auto _ : state) {
        PrimeSource src;
        benchmark::DoNotOptimize(src.prime(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SieveFirst)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_ExtractSparse(benchmark::State& state)
{
    PrimeSource src;
    const SeriesConstant c = build_constant(WeightFunction::exp_tower(2, 3), 12, src);
    for (auto _ : state)
        for (std::size_t n = 1; n <= 12; ++n)
            benchmark::DoNotOptimize(extract_prime(c, n));
}
BENCHMARK(BM_ExtractSparse);

static void BM_ExtractDense(benchmark::State& state)
{
    PrimeSource src;
    const SeriesConstant c = build_constant(WeightFunction::exp_tower(2, 3), 12, src);
    for (auto _ : state)
        for (std::size_t n = 1; n <= 12; ++n)
            benchmark::DoNotOptimize(extract_prime_dense(c, n));
}
BENCHMARK(BM_ExtractDense)->Unit(benchmark::kMillisecond);

static void BM_Log2Enclosure(benchmark::State& state)
{
    const RatInterval x(BigRat(16381), BigRat(16382));
    for (auto _ : state)
        benchmark::DoNotOptimize(log2_enclosure(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Log2Enclosure)->Arg(32)->Arg(128)->Arg(512);

static void BM_MillsDepth6(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(mills_sequence(6));
}
BENCHMARK(BM_MillsDepth6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
