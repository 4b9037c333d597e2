#pragma once

// Finite-depth checks of the rational-approximation inequalities behind the
// transcendence of sum p_k / a^(k + k!) (Liouville) and sum p_k / a^(k + m^k)
// (Roth), plus continued fractions and effective exponent brackets.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "primerep/primes.hpp"
#include "primerep/weight.hpp"

namespace primerep {

/// Truncation r/s of a prime series at the approximation index, with
/// gap_lo <= |S - r/s| <= gap_hi. r/s is kept unreduced with s = f(t).
struct Approximant {
    std::size_t j = 0;
    std::size_t truncation_index = 0;  // t
    BigInt r;
    BigInt s;
    BigRat gap_lo;  // first omitted term p_{t+1} / f(t+1)
    BigRat gap_hi;  // first omitted term + (1/2 + 2^-(t+5)) / f(t+1)
};

/// FactorialTower truncates at t = n + j - 1 and requires degree n >= 2;
/// every other family truncates at t = j.
Approximant truncation_approximant(const WeightFunction& w, std::optional<std::size_t> degree, std::size_t j,
                                   PrimeSource& src);

struct InequalityCheck {
    std::string name;
    BigRat lhs;
    BigRat rhs;
    bool holds = false;
    bool informational = false;  // reported, not part of the verdict
};

struct LiouvilleRow {
    Approximant approx;
    InequalityCheck tail_bound;      // gap_hi <= a/(a-1) * a^-(n+j)!
    InequalityCheck constant_bound;  // gap_hi * s^(n+1) <= C_j
    BigRat scaled_gap;               // gap_hi * s^(n+1)
};

struct LiouvilleReport {
    unsigned long a = 2;
    std::size_t n = 2;
    std::vector<LiouvilleRow> rows;
    BigRat constant_sup;  // max_j C_j over tested j, the witness for K_{a,n}

    bool passed() const;
};

/// For 1 <= j <= j_max with t = n + j - 1 and s = a^(t + t!):
///   (i)  gap_hi <= (a/(a-1)) a^-(t+1)!
///   (ii) gap_hi s^(n+1) <= C_j = a^(t(t+1)+1) / ((a-1) s^(j-1)).
LiouvilleReport liouville_check(unsigned long a, std::size_t n, std::size_t j_max, PrimeSource& src);

struct RothRow {
    Approximant approx;
    InequalityCheck denominator_condition;  // s >= a^(2jm), informational
    InequalityCheck geometric_bound;        // gap_hi <= 1/((s/a^j)^m - 1)
    InequalityCheck roth_bound;             // gap_hi^4 s^9 <= 1
};

struct RothReport {
    unsigned long a = 2;
    unsigned long m = 3;
    std::vector<RothRow> rows;

    bool passed() const;
};

/// For 2 <= j <= j_max and s = a^(j + m^j). Throws PreconditionError if
/// j_max < 2 or m < 3.
RothReport roth_check(unsigned long a, unsigned long m, std::size_t j_max, PrimeSource& src);

/// Partial quotients of x >= 0, at most max_terms of them.
std::vector<BigInt> continued_fraction(const BigRat& x, std::size_t max_terms);

/// h_k / k_k convergents of a partial-quotient list.
std::vector<BigRat> convergents(const std::vector<BigInt>& quotients);

/// Bracket [lo, hi] on e_j = -log(gap) / log(s), with endpoints on the 1/8 grid.
struct ExponentEstimate {
    std::size_t j = 0;
    std::size_t s_bits = 0;
    BigRat lo;
    BigRat hi;
};

inline constexpr unsigned kExponentGrid = 8;

ExponentEstimate exponent_bracket(const Approximant& approx);

std::vector<ExponentEstimate> effective_exponent(const WeightFunction& w, std::optional<std::size_t> degree,
                                                 std::size_t j_from, std::size_t j_to, PrimeSource& src);

}  // namespace primerep
