#include "primerep/primes.hpp"

#include <algorithm>
#include <cmath>

#include "primerep/limits.hpp"

namespace primerep {

PrimeSource::PrimeSource() : PrimeSource(1u << 16) {}

PrimeSource::PrimeSource(std::uint64_t initial_limit)
{
    std::lock_guard lock(mutex_);
    extend_to(std::max<std::uint64_t>(initial_limit, 16));
}

void PrimeSource::extend_to(std::uint64_t new_limit)
{
    if (new_limit <= limit_)
        return;
    if (new_limit > current_limits().max_sieve_limit) {
        throw ResourceLimitError("sieve bound " + std::to_string(new_limit) + " exceeds cap " +
                                 std::to_string(current_limits().max_sieve_limit));
    }
    check_deadline();
    // Segment (limit_, new_limit]; base primes up to sqrt(new_limit) are either
    // cached already or found by a small direct sieve.
    const std::uint64_t lo = limit_ + 1;
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(new_limit))) + 1;
    std::vector<std::uint64_t> base;
    {
        std::vector<bool> comp(root + 1, false);
        for (std::uint64_t i = 2; i <= root; ++i) {
            if (comp[i])
                continue;
            base.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i)
                comp[j] = true;
        }
    }
    std::vector<bool> comp(new_limit - lo + 1, false);
    for (const auto p : base) {
        std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = first; j <= new_limit; j += p)
            comp[j - lo] = true;
    }
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= new_limit; ++v) {
        if (!comp[v - lo])
            cache_.push_back(v);
    }
    limit_ = new_limit;
}

std::uint64_t PrimeSource::prime(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("prime index is 1-based");
    std::lock_guard lock(mutex_);
    while (cache_.size() < n)
        extend_to(limit_ * 2);
    return cache_[n - 1];
}

std::vector<std::uint64_t> PrimeSource::first(std::size_t n)
{
    std::lock_guard lock(mutex_);
    while (cache_.size() < n)
        extend_to(limit_ * 2);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::uint64_t> PrimeSource::primes_up_to(std::uint64_t limit)
{
    std::lock_guard lock(mutex_);
    while (limit_ < limit)
        extend_to(std::max(limit, limit_ * 2));
    const auto end = std::upper_bound(cache_.begin(), cache_.end(), limit);
    return {cache_.begin(), end};
}

std::uint64_t PrimeSource::sieve_limit() const
{
    std::lock_guard lock(mutex_);
    return limit_;
}

std::size_t PrimeSource::cached_count() const
{
    std::lock_guard lock(mutex_);
    return cache_.size();
}

BigInt nth_prime(PrimeSource& src, std::size_t n) { return BigInt(static_cast<unsigned long>(src.prime(n))); }

BertrandReport bertrand_bound_check(PrimeSource& src, std::size_t K, unsigned r)
{
    if (r != 2 && r != 4)
        throw PreconditionError("bertrand_bound_check: r must be 2 or 4");
    if (K == 0)
        throw PreconditionError("bertrand_bound_check: K must be positive");
    BertrandReport report{K, r, 0, std::nullopt};
    const auto primes = src.first(K);
    const unsigned log2r = r == 2 ? 1 : 2;
    for (std::size_t k = 1; k <= K; ++k) {
        const std::uint64_t p = primes[k - 1];
        // r^k has k*log2r + 1 bits; p < 2^64 so the bound is trivially met beyond 64 bits
        bool ok = true;
        if (k * log2r < 64)
            ok = p <= (std::uint64_t{1} << (k * log2r));
        ++report.checked;
        if (!ok) {
            report.first_violation = k;
            break;
        }
    }
    return report;
}

GapReport bertrand_gap_check(PrimeSource& src, std::size_t K)
{
    if (K < 2)
        throw PreconditionError("bertrand_gap_check: K must be at least 2");
    GapReport report{K, 0, std::nullopt};
    const auto primes = src.first(K);
    for (std::size_t k = 1; k < K; ++k) {
        ++report.checked;
        if (primes[k] - primes[k - 1] >= primes[k - 1]) {
            report.first_violation = k;
            break;
        }
    }
    return report;
}

}  // namespace primerep
