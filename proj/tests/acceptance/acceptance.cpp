// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//   primerep_acceptance              all criteria except the slow one
//   primerep_acceptance --slow-only  only the W_4 criterion
//   primerep_acceptance --all        everything

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primerep/classic.hpp"
#include "primerep/diagnostics.hpp"
#include "primerep/errors.hpp"
#include "primerep/series.hpp"
#include "primerep/weight.hpp"

using namespace primerep;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { notes.push_back("     " + what); }
};

struct Criterion {
    std::string name;
    bool slow = false;
    double budget_seconds = 0;
    std::function<void(Outcome&)> body;
};

std::vector<WeightFunction> listed_weights()
{
    return {WeightFunction::factorial_tower(2), WeightFunction::factorial_tower(3), WeightFunction::exp_tower(2, 3),
            WeightFunction::exp_tower(2, 4),    WeightFunction::exp_tower(3, 3),    WeightFunction::power_square(2),
            WeightFunction::power_square(3),    WeightFunction::power_square(4),    WeightFunction::double_exp(),
            WeightFunction::minimal()};
}

std::string str(const BigInt& x) { return x.get_str(); }

bool has_prefix(const std::string& text, const std::string& prefix)
{
    return text.size() >= prefix.size() && text.compare(0, prefix.size(), prefix) == 0;
}

// ---- criteria ---------------------------------------------------------------

void round_trip(Outcome& o)
{
    const auto sieve = oracle::trial_division_primes(25);
    PrimeSource src;
    for (const auto& w : listed_weights()) {
        const SeriesConstant c = build_constant(w, 25, src);
        std::size_t mismatches = 0;
        for (std::size_t n = 1; n <= 25; ++n)
            if (extract_prime(c, n) != BigInt(static_cast<unsigned long>(sieve[n - 1])))
                ++mismatches;
        o.require(mismatches == 0, w.name() + ": " + std::to_string(25 - mismatches) + "/25 match");
    }
}

void stability(Outcome& o)
{
    PrimeSource src;
    for (const auto& w : listed_weights()) {
        bool same = true;
        for (std::size_t n = 1; n <= 10; ++n) {
            const SeriesConstant a = build_constant(w, n, src);
            const SeriesConstant b = build_constant(w, n + 5, src);
            for (std::size_t i = 1; i <= n; ++i)
                same = same && extract_prime(a, i) == extract_prime(b, i);
        }
        o.require(same, w.name() + ": terms n and n+5 agree for n <= 10");
    }
}

void published_constants(Outcome& o)
{
    PrimeSource src;
    const LambdaDigits lam = buenos_aires_digits(13, src);
    o.require(has_prefix(lam.digits.text(), "2.920050977316"), "lambda = " + lam.digits.text());

    MillsState mills = mills_sequence(5);
    const std::vector<BigInt> m_expected = {2, 11, 1361, BigInt(2521008887UL)};
    bool m_ok = true;
    for (std::size_t i = 0; i < 4; ++i)
        m_ok = m_ok && mills.primes[i] == m_expected[i];
    o.require(m_ok, "M_1..M_4 = " + str(mills.primes[0]) + ", " + str(mills.primes[1]) + ", " + str(mills.primes[2]) +
                        ", " + str(mills.primes[3]));
    const std::size_t m5_digits = str(mills.primes[4]).size();
    o.require(m5_digits == 29, "M_5 has " + std::to_string(m5_digits) + " digits");

    const ThetaDigits theta = mills_theta(mills, 11);
    o.require(theta.depth >= 5 && has_prefix(theta.digits.text(), "1.3063778838"),
              "theta = " + theta.digits.text() + " at depth " + std::to_string(theta.depth));

    const WrightState big = wright_sequence(WrightVariant::largest, 3);
    const WrightState small = wright_sequence(WrightVariant::smallest, 3);
    o.require(big.primes == std::vector<BigInt>{3, 13, 16381}, "Wright largest = [3, 13, 16381]");
    o.require(small.primes == std::vector<BigInt>{3, 11, 2053}, "Wright smallest = [3, 11, 2053]");

    std::string alpha;
    try {
        alpha = wright_alpha(big, 7).text();
    } catch (const PrecisionError& e) {
        alpha = e.partial().text();
        std::ostringstream enc;
        enc.precision(12);
        enc << "alpha enclosure from depth 3: [" << big.alpha.interval.lo().get_d() << ", "
            << big.alpha.interval.hi().get_d() << "]";
        o.note(enc.str());
    }
    o.require(has_prefix(alpha, "1.928780"), "alpha certified prefix = \"" + alpha + "\" (want \"1.928780\")");
}

void wright_w4(Outcome& o)
{
    const WrightState s = wright_sequence(WrightVariant::smallest, 4, true);
    const BigInt& w4 = s.primes.at(3);
    const BigInt lo = BigInt(1) << 2053;
    o.require(lo <= w4 && w4 < (lo << 1), "W_4 in [2^2053, 2^2054)");
    o.require(!is_prime(w4).composite(), "W_4 is a probable prime");
    const std::size_t digits = str(w4).size();
    o.require(digits == 618, "W_4 has " + std::to_string(digits) + " decimal digits (want 618)");
}

void lemma_suite(Outcome& o)
{
    PrimeSource src;
    const auto sieve = oracle::trial_division_primes(12);
    std::size_t checked = 0;
    for (const auto& w : listed_weights()) {
        for (std::size_t n = 1; n <= 5; ++n) {
            if (!lemma_tail_applies(w, n, kDefaultTailDepth)) {
                o.note(w.name() + " n=" + std::to_string(n) + ": hypotheses fail, not applicable");
                continue;
            }
            const TailReport r = lemma_tail_check(w, n, kDefaultTailDepth, src);
            // independent recomputation of the truncated tail
            const mpz_class fn = weight_eval(w, n);
            mpq_class tail = 0;
            for (std::size_t k = n + 1; k <= n + kDefaultTailDepth; ++k) {
                mpq_class term(fn * static_cast<unsigned long>(sieve[k - 1]), weight_eval(w, k));
                term.canonicalize();
                tail += term;
            }
            const mpq_class bound = mpq_class(1, 2) + mpq_class(1, mpz_class(1) << (n + 4));
            const mpq_class total = tail + mpq_class(1, mpz_class(1) << (n + kDefaultTailDepth + 3));
            const bool ok = r.passed() && r.truncated_tail == tail && total < bound;
            o.require(ok, w.name() + " n=" + std::to_string(n) + ": total " + std::to_string(total.get_d()) + " < " +
                              std::to_string(bound.get_d()));
            ++checked;
        }
    }
    o.note(std::to_string(checked) + " weight/n pairs checked");
}

void liouville_suite(Outcome& o)
{
    PrimeSource src;
    std::size_t rows = 0, held = 0;
    for (unsigned long a : {2UL, 3UL, 10UL})
        for (std::size_t n = 2; n <= 4; ++n) {
            const LiouvilleReport r = liouville_check(a, n, 3, src);
            for (const auto& row : r.rows) {
                const std::size_t t = row.approx.truncation_index;
                // a/(a-1) * a^-(t+1)! computed here from scratch
                const mpz_class fact = factorial(t + 1);
                mpq_class rhs(mpz_class(a), (a - 1) * ipow(BigInt(a), fact.get_ui()));
                rhs.canonicalize();
                const bool ok = row.tail_bound.holds && row.approx.gap_hi <= rhs && row.tail_bound.rhs == rhs;
                ++rows;
                held += ok;
                if (!ok)
                    o.require(false, "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                         " j=" + std::to_string(row.approx.j));
            }
        }
    o.require(held == rows && rows == 27, std::to_string(held) + "/" + std::to_string(rows) + " rows hold");
}

void roth_suite(Outcome& o)
{
    PrimeSource src;
    std::size_t rows = 0, held = 0;
    for (unsigned long a : {2UL, 3UL})
        for (unsigned long m : {3UL, 4UL}) {
            const RothReport r = roth_check(a, m, 6, src);
            for (const auto& row : r.rows) {
                const mpq_class g = row.approx.gap_hi;
                const mpq_class lhs = g * g * g * g * mpq_class(ipow(row.approx.s, 9));
                const bool ok = row.roth_bound.holds && lhs <= 1;
                ++rows;
                held += ok;
                if (!ok)
                    o.require(false, "a=" + std::to_string(a) + " m=" + std::to_string(m) +
                                         " j=" + std::to_string(row.approx.j));
            }
        }
    o.require(held == rows && rows == 20, std::to_string(held) + "/" + std::to_string(rows) + " rows hold");
}

std::string bracket(const ExponentEstimate& e)
{
    std::ostringstream s;
    s << "j=" << e.j << " [" << e.lo.get_d() << ", " << e.hi.get_d() << "]";
    return s.str();
}

void exponent_signatures(Outcome& o)
{
    PrimeSource src;
    const std::size_t n = 2;
    const auto ft = effective_exponent(WeightFunction::factorial_tower(2), n, 1, 3, src);
    bool increasing = true;
    for (std::size_t i = 1; i < ft.size(); ++i)
        increasing = increasing && ft[i].lo > ft[i - 1].hi;
    o.require(increasing, "factorial-tower:2 n=2: " + bracket(ft[0]) + " < " + bracket(ft[1]) + " < " + bracket(ft[2]));
    o.require(ft[2].lo > BigRat(n + 1), "factorial-tower:2 n=2: lo at j=3 exceeds n+1");

    for (const auto& w : {WeightFunction::exp_tower(2, 3), WeightFunction::exp_tower(2, 4), WeightFunction::exp_tower(3, 3)}) {
        const BigRat m(w.m());
        bool inside = true;
        std::string detail;
        for (const auto& e : effective_exponent(w, std::nullopt, 2, 5, src)) {
            inside = inside && e.lo >= m - make_rat(3, 4) && e.hi <= m + make_rat(1, 2);
            detail += " " + bracket(e);
        }
        o.require(inside, w.name() + ":" + detail);
    }
}

void bertrand_bounds(Outcome& o)
{
    PrimeSource src;
    const auto sieve = oracle::trial_division_primes(10000);
    for (unsigned r : {2U, 4U}) {
        const BertrandReport rep = bertrand_bound_check(src, 10000, r);
        bool oracle_ok = true;
        for (std::size_t k = 1; k <= sieve.size(); ++k)
            oracle_ok = oracle_ok && BigInt(static_cast<unsigned long>(sieve[k - 1])) <= ipow(BigInt(r), k);
        o.require(rep.passed() && oracle_ok, "p_k <= " + std::to_string(r) + "^k for k <= 10^4");
    }
    const std::size_t K = src.cached_count();
    const GapReport gap = bertrand_gap_check(src, K);
    o.require(gap.passed(), "p_{k+1} - p_k < p_k for all " + std::to_string(K) + " sieved primes");
}

}  // namespace

int main(int argc, char** argv)
{
    bool run_slow = false, run_fast = true;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--slow-only") {
            run_slow = true;
            run_fast = false;
        } else if (arg == "--all") {
            run_slow = true;
        } else {
            std::cerr << "usage: primerep_acceptance [--slow-only | --all]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {"round-trip extraction p_1..p_25, all listed weights", false, 60, round_trip},
        {"extraction stability, terms n vs n+5, n <= 10", false, 0, stability},
        {"published constants (lambda, Mills, theta, Wright, alpha)", false, 120, published_constants},
        {"Wright smallest W_4: 618-digit probable prime in [2^2053, 2^2054)", true, 0, wright_w4},
        {"lemma tail: truncated tail + remainder < 1/2 + 2^-(n+4), n = 1..5", false, 0, lemma_suite},
        {"Liouville: gap <= a/(a-1) a^-(n+j)!, a in {2,3,10}, n in 2..4, j in 1..3", false, 0, liouville_suite},
        {"Roth: gap^4 s^9 <= 1, a in {2,3}, m in {3,4}, j in 2..6", false, 0, roth_suite},
        {"exponent signatures (1/8 grid)", false, 0, exponent_signatures},
        {"Bertrand bounds", false, 0, bertrand_bounds},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (c.slow ? !run_slow : !run_fast)
            continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0)
            o.require(secs < c.budget_seconds, "runtime " + std::to_string(secs) + " s < " +
                                                   std::to_string(static_cast<int>(c.budget_seconds)) + " s");
        std::printf("%s  %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), secs);
        for (const auto& line : o.notes)
            std::printf("        %s\n", line.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
