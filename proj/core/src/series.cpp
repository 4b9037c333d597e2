#include "primerep/series.hpp"

#include <algorithm>
#include <optional>

#include "primerep/limits.hpp"

namespace primerep {

namespace {

bool hypotheses_hold_above(const WeightFunction& w, std::size_t from, std::size_t to)
{
    if (auto cap = w.max_index())
        to = std::min(to, *cap);
    if (to < 2)
        return true;
    const WeightReport report = weight_validate(w, to);
    return std::none_of(report.violations.begin(), report.violations.end(), [&](const WeightViolation& v) {
        return v.predicate == "divisibility" || v.k > from;
    });
}

}  // namespace

bool tail_hypotheses_hold(const WeightFunction& w, std::size_t K)
{
    return hypotheses_hold_above(w, K, K + kTailLookahead);
}

bool lemma_tail_applies(const WeightFunction& w, std::size_t n, std::size_t depth)
{
    return hypotheses_hold_above(w, n, n + depth);
}

SeriesConstant::SeriesConstant(WeightFunction weight, std::vector<BigInt> primes, bool validated,
                               bool tail_certified)
    : weight_(std::move(weight)), primes_(std::move(primes)), validated_(validated), tail_certified_(tail_certified)
{
    if (primes_.empty())
        throw PreconditionError("series constant needs at least one term");
}

SparseRadix SeriesConstant::partial_sum_radix() const
{
    SparseRadix s(weight_.radix());
    for (std::size_t k = 1; k <= primes_.size(); ++k)
        s.add_term(primes_[k - 1], -weight_.exponent(k));
    return s;
}

BigRat SeriesConstant::partial_sum() const
{
    if (weight_.has_radix_form())
        return partial_sum_radix().to_bigrat();
    BigRat s = 0;
    for (std::size_t k = 1; k <= primes_.size(); ++k)
        s += make_rat(primes_[k - 1], weight_eval(weight_, k));
    return s;
}

BigRat SeriesConstant::tail_factor() const
{
    const auto K = static_cast<mp_bitcnt_t>(primes_.size());
    return BigRat(1, 2) + make_rat(1, BigInt(1) << (K + 4));
}

BigRat SeriesConstant::tail_hi() const { return tail_factor() / BigRat(weight_eval(weight_, terms())); }

RatInterval SeriesConstant::enclosure() const
{
    if (!tail_certified_) {
        throw PreconditionError("series " + weight_.name() + ": growth hypothesis fails just beyond K = " +
                                std::to_string(terms()) + ", tail bound unavailable");
    }
    const BigRat s = partial_sum();
    return RatInterval(s, s + tail_hi());
}

SeriesConstant build_constant(const WeightFunction& w, std::size_t K, PrimeSource& src)
{
    if (K == 0)
        throw PreconditionError("build_constant needs K >= 1");
    if (auto cap = w.max_index(); cap && K > *cap)
        throw PreconditionError("build_constant: K exceeds custom table length");
    if (K > current_limits().max_terms)
        throw ResourceLimitError("term count " + std::to_string(K) + " exceeds cap " +
                                 std::to_string(current_limits().max_terms));
    const bool validated = K < 2 || weight_validate(w, K).passed();
    std::vector<BigInt> primes;
    primes.reserve(K);
    for (std::size_t k = 1; k <= K; ++k)
        primes.push_back(nth_prime(src, k));
    return SeriesConstant(w, std::move(primes), validated, tail_hypotheses_hold(w, K));
}

SparseRadix scaled_floor_radix(const SeriesConstant& c, std::size_t n)
{
    return c.partial_sum_radix().shifted(c.weight().exponent(n)).floor();
}

BigInt scaled_floor_dense(const SeriesConstant& c, std::size_t n)
{
    return floor_ratio(c.partial_sum() * BigRat(weight_eval(c.weight(), n)));
}

namespace {

void check_index(const SeriesConstant& c, std::size_t n)
{
    if (n == 0)
        throw PreconditionError("prime index is 1-based");
    if (n > c.terms()) {
        throw PreconditionError("extract_prime: n = " + std::to_string(n) + " exceeds terms = " +
                                std::to_string(c.terms()));
    }
}

}  // namespace

BigInt extract_prime_dense(const SeriesConstant& c, std::size_t n)
{
    check_index(c, n);
    const BigInt top = scaled_floor_dense(c, n);
    if (n == 1)
        return top;
    // f(n)/f(n-1) is an integer for validated weights; otherwise the exact
    // rational result is floored.
    const BigRat ratio = weight_quotient(c.weight(), n, n - 1);
    return floor_ratio(BigRat(top) - ratio * BigRat(scaled_floor_dense(c, n - 1)));
}

BigInt extract_prime(const SeriesConstant& c, std::size_t n)
{
    check_index(c, n);
    if (!c.weight().has_radix_form())
        return extract_prime_dense(c, n);
    SparseRadix top = scaled_floor_radix(c, n);
    if (n == 1)
        return top.to_bigint();
    const BigInt step = ratio_exponent(c.weight(), n);
    if (step < 0)
        return extract_prime_dense(c, n);
    top -= scaled_floor_radix(c, n - 1).shifted(step);
    return top.to_bigint();
}

std::size_t ExtractionReport::mismatches() const
{
    std::size_t bad = 0;
    for (const auto& r : rows)
        bad += r.match ? 0 : 1;
    return bad;
}

ExtractionReport extract_all(const SeriesConstant& c, std::size_t N, PrimeSource& src)
{
    if (N > c.terms())
        throw PreconditionError("extract_all: N exceeds terms");
    ExtractionReport report{c.weight().name(), c.terms(), c.validated(), {}};
    report.rows.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) {
        check_deadline();
        ExtractionRow row;
        row.n = n;
        row.extracted = extract_prime(c, n);
        row.expected = nth_prime(src, n);
        row.match = row.extracted == row.expected;
        report.rows.push_back(std::move(row));
    }
    return report;
}

TailReport lemma_tail_check(const WeightFunction& w, std::size_t n, std::size_t depth, PrimeSource& src)
{
    if (n == 0 || depth == 0)
        throw PreconditionError("lemma_tail_check needs n >= 1 and depth >= 1");
    if (!lemma_tail_applies(w, n, depth))
        throw PreconditionError("lemma_tail_check: weight " + w.name() + " fails the hypotheses needed at n = " +
                                std::to_string(n));
    TailReport report;
    report.weight = w.name();
    report.n = n;
    report.depth = depth;
    report.truncated_tail = 0;
    for (std::size_t k = n + 1; k <= n + depth; ++k)
        report.truncated_tail += weight_quotient(w, n, k) * BigRat(nth_prime(src, k));
    report.remainder_bound = make_rat(1, BigInt(1) << static_cast<mp_bitcnt_t>(n + depth + 3));
    report.total = report.truncated_tail + report.remainder_bound;
    report.half_bound = BigRat(1, 2) + make_rat(1, BigInt(1) << static_cast<mp_bitcnt_t>(n + 4));
    return report;
}

}  // namespace primerep

namespace primerep {

SeriesDigits certify_series_digits(const WeightFunction& w, std::size_t digits, PrimeSource& src,
                                   std::size_t initial_terms)
{
    std::size_t K = std::max<std::size_t>(1, initial_terms);
    if (auto cap = w.max_index())
        K = std::min(K, *cap);
    std::optional<SeriesDigits> best;
    for (;;) {
        check_deadline();
        try {
            const SeriesConstant c = build_constant(w, K, src);
            if (c.tail_certified()) {
                RatInterval enc = c.enclosure();
                CertifiedDigits d = decimal_prefix(enc, digits);
                best = SeriesDigits{d, K, enc};
                if (d.complete())
                    return *best;
            }
        } catch (const ResourceLimitError&) {
            if (!best)
                throw;
            throw PrecisionError("series " + w.name() + ": cap reached at " + std::to_string(K) + " terms",
                                 best->digits);
        }
        const auto cap = w.max_index();
        if ((cap && K >= *cap) || K >= current_limits().max_terms) {
            if (!best)
                throw PreconditionError("series " + w.name() + ": no certified tail bound within " +
                                        std::to_string(K) + " terms");
            throw PrecisionError("series " + w.name() + ": digits not certified within " + std::to_string(K) +
                                     " terms",
                                 best->digits);
        }
        K += 1;
    }
}

}  // namespace primerep
