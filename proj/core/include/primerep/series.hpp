#pragma once

// Prime series S = sum_k p_k / f(k) and floor-difference extraction
//   p_1 = floor(f(1) S),  p_n = floor(f(n) S) - (f(n)/f(n-1)) floor(f(n-1) S).
// Extraction is exact whenever f(k) >= 2^(k+1) f(k-1) and f(k-1) | f(k): the
// tail beyond index n then contributes a fraction in [0, 1) to f(n) S.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "primerep/digits.hpp"
#include "primerep/errors.hpp"
#include "primerep/interval.hpp"
#include "primerep/primes.hpp"
#include "primerep/sparse_radix.hpp"
#include "primerep/weight.hpp"

namespace primerep {

/// K-term truncation of a prime series together with a certified tail bound.
class SeriesConstant {
public:
    SeriesConstant(WeightFunction weight, std::vector<BigInt> primes, bool validated, bool tail_certified = true);

    const WeightFunction& weight() const noexcept { return weight_; }
    std::size_t terms() const noexcept { return primes_.size(); }
    const std::vector<BigInt>& primes() const noexcept { return primes_; }

    /// Whether the lemma hypotheses were verified for k <= terms().
    bool validated() const noexcept { return validated_; }

    /// Whether the growth hypothesis holds for K < k <= K + kTailLookahead,
    /// which tail_hi() relies on. enclosure() throws when it does not.
    bool tail_certified() const noexcept { return tail_certified_; }

    /// sum_{k<=K} p_k b^-E(k). Radix-form weights only.
    SparseRadix partial_sum_radix() const;

    /// Exact K-term partial sum; throws ResourceLimitError when f(K) is too large.
    BigRat partial_sum() const;

    /// tail_hi = tail_factor() / f(K), with tail_factor = 1/2 + 2^-(K+4) < 1.
    BigRat tail_factor() const;
    BigRat tail_hi() const;

    /// [S_K, S_K + tail_hi], which contains S.
    RatInterval enclosure() const;

private:
    WeightFunction weight_;
    std::vector<BigInt> primes_;
    bool validated_;
    bool tail_certified_;
};

inline constexpr std::size_t kTailLookahead = 4;

/// Growth holds for K < k <= K + kTailLookahead and divisibility for k <= K + kTailLookahead
/// (clipped to the table for custom weights).
bool tail_hypotheses_hold(const WeightFunction& w, std::size_t K);

/// Exact K-term partial sum and certified tail. Validation failures do not
/// throw; the constant is flagged instead.
SeriesConstant build_constant(const WeightFunction& w, std::size_t K, PrimeSource& src);

/// p_n by floor differences on the partial sum; requires n <= c.terms().
/// Radix weights run in sparse exact arithmetic, custom tables densely.
BigInt extract_prime(const SeriesConstant& c, std::size_t n);

/// Same formula evaluated on the materialized BigRat partial sum.
BigInt extract_prime_dense(const SeriesConstant& c, std::size_t n);

/// floor(f(n) S_K) in sparse form.
SparseRadix scaled_floor_radix(const SeriesConstant& c, std::size_t n);
/// floor(f(n) S_K) densely.
BigInt scaled_floor_dense(const SeriesConstant& c, std::size_t n);

struct ExtractionRow {
    std::size_t n = 0;
    BigInt extracted;
    BigInt expected;
    bool match = false;
};

struct ExtractionReport {
    std::string weight;
    std::size_t terms = 0;
    bool weight_validated = false;
    std::vector<ExtractionRow> rows;

    std::size_t mismatches() const;
    bool passed() const { return mismatches() == 0; }
};

/// p_1..p_N from c, each compared with the sieve.
ExtractionReport extract_all(const SeriesConstant& c, std::size_t N, PrimeSource& src);

struct TailReport {
    std::string weight;
    std::size_t n = 0;
    std::size_t depth = 0;
    BigRat truncated_tail;   // sum_{k=n+1}^{n+depth} (f(n)/f(k)) p_k
    BigRat remainder_bound;  // sum_{k>n+depth} 2^-(k+3) = 2^-(n+depth+3)
    BigRat total;
    BigRat half_bound;       // 1/2 + 2^-(n+4)

    bool below_half_bound() const { return total < half_bound; }
    bool below_one() const { return total < 1; }
    bool passed() const { return below_half_bound() && below_one(); }
};

inline constexpr std::size_t kDefaultTailDepth = 4;

/// Exact tail of f(n) S beyond index n. Requires divisibility through
/// n + depth and growth for n < k <= n + depth; growth at k <= n is not used.
bool lemma_tail_applies(const WeightFunction& w, std::size_t n, std::size_t depth);

TailReport lemma_tail_check(const WeightFunction& w, std::size_t n, std::size_t depth, PrimeSource& src);

}  // namespace primerep

namespace primerep {

struct SeriesDigits {
    CertifiedDigits digits;
    std::size_t terms = 0;
    RatInterval enclosure;
};

/// Grows the term count from `initial_terms` until `digits` decimal digits of
/// S are certified (see decimal_prefix). Throws PrecisionError carrying the
/// best partial result when the term or bit cap is reached first.
SeriesDigits certify_series_digits(const WeightFunction& w, std::size_t digits, PrimeSource& src,
                                   std::size_t initial_terms = 1);

}  // namespace primerep
