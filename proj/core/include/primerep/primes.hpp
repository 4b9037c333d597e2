#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "primerep/bignum.hpp"

namespace primerep {

enum class PrimalityStatus { composite, prime, probable_prime };

std::string to_string(PrimalityStatus status);

struct PrimalityVerdict {
    BigInt value;
    PrimalityStatus status = PrimalityStatus::composite;
    std::string witness_info;

    bool composite() const { return status == PrimalityStatus::composite; }
};

/// Deterministic (status prime/composite) below 2^64 using the complete
/// strong-pseudoprime base set {2, ..., 37}. Above 2^64 a Baillie-PSW test
/// (base-2 strong test plus strong Lucas with Selfridge parameters) is
/// followed by 64 further strong rounds with fixed pseudo-random bases, so a
/// composite passes with probability below 4^-64 = 2^-128 and the verdict
/// is probable_prime.
PrimalityVerdict is_prime(const BigInt& x);

bool is_prime_u64(std::uint64_t n);

/// Least y >= x that is not composite. Candidates step on the mod-30 wheel
/// and are pre-sieved by small primes before the full test.
BigInt next_prime_geq(const BigInt& x);

/// Greatest y < x that is not composite. Throws PreconditionError for x <= 2.
BigInt largest_prime_below(const BigInt& x);

/// Indexed prime sequence p_1 = 2, p_2 = 3, ... backed by a sieve that doubles
/// its bound on demand. Safe for concurrent use.
class PrimeSource {
public:
    PrimeSource();
    explicit PrimeSource(std::uint64_t initial_limit);

    PrimeSource(const PrimeSource&) = delete;
    PrimeSource& operator=(const PrimeSource&) = delete;

    /// p_n, 1-based. Throws ResourceLimitError past the configured sieve cap.
    std::uint64_t prime(std::size_t n);

    /// p_1..p_n.
    std::vector<std::uint64_t> first(std::size_t n);

    /// All cached primes <= limit, extending the sieve to reach it.
    std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

    std::uint64_t sieve_limit() const;
    std::size_t cached_count() const;

private:
    void extend_to(std::uint64_t new_limit);  // requires mutex_ held

    mutable std::mutex mutex_;
    std::vector<std::uint64_t> cache_;
    std::uint64_t limit_ = 1;
};

BigInt nth_prime(PrimeSource& src, std::size_t n);

struct BertrandReport {
    std::size_t K = 0;
    unsigned r = 2;
    std::size_t checked = 0;
    std::optional<std::size_t> first_violation;  // index k with p_k > r^k

    bool passed() const { return !first_violation && checked == K; }
};

/// Checks p_k <= r^k for 1 <= k <= K, r in {2, 4}.
BertrandReport bertrand_bound_check(PrimeSource& src, std::size_t K, unsigned r);

struct GapReport {
    std::size_t K = 0;
    std::size_t checked = 0;
    std::optional<std::size_t> first_violation;  // index k with p_{k+1} - p_k >= p_k

    bool passed() const { return !first_violation && checked + 1 == K; }
};

/// Checks p_{k+1} - p_k < p_k for 1 <= k < K.
GapReport bertrand_gap_check(PrimeSource& src, std::size_t K);

namespace detail {

bool strong_probable_prime(const BigInt& n, const BigInt& base);
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t base);
/// Strong Lucas probable-prime test with Selfridge's method A parameters.
bool strong_lucas_probable_prime(const BigInt& n);

}  // namespace detail

}  // namespace primerep
