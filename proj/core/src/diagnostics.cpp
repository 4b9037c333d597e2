#include "primerep/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "primerep/limits.hpp"

namespace primerep {
namespace {

BigRat pow_rat(const BigRat& x, std::uint64_t e) { return BigRat(ipow(x.get_num(), e), ipow(x.get_den(), e)); }

BigInt pow_ul(unsigned long base, const BigInt& e) { return ipow(BigInt(base), e); }

}  // namespace

Approximant truncation_approximant(const WeightFunction& w, std::optional<std::size_t> degree, std::size_t j,
                                   PrimeSource& src)
{
    if (j == 0)
        throw PreconditionError("truncation index j is 1-based");
    std::size_t t = j;
    if (w.family() == WeightFamily::factorial_tower) {
        if (!degree || *degree < 2)
            throw PreconditionError("factorial-tower approximants need degree n >= 2");
        t = *degree + j - 1;
    }
    if (auto cap = w.max_index(); cap && t + 1 > *cap)
        throw PreconditionError("custom weight too short for truncation index");

    Approximant ap;
    ap.j = j;
    ap.truncation_index = t;
    ap.s = weight_eval(w, t);
    ap.r = 0;
    for (std::size_t k = 1; k <= t; ++k) {
        check_deadline();
        // f(k) | f(t) for validated weights
        const BigRat q = weight_quotient(w, t, k);
        if (q.get_den() != 1)
            throw PreconditionError("truncation_approximant: f(" + std::to_string(k) + ") does not divide f(t)");
        ap.r += nth_prime(src, k) * q.get_num();
    }
    const BigInt next_weight = weight_eval(w, t + 1);
    ap.gap_lo = make_rat(nth_prime(src, t + 1), next_weight);
    const BigRat remainder = BigRat(1, 2) + make_rat(1, BigInt(1) << static_cast<mp_bitcnt_t>(t + 5));
    ap.gap_hi = ap.gap_lo + remainder / BigRat(next_weight);
    return ap;
}

bool LiouvilleReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const LiouvilleRow& r) { return r.tail_bound.holds && r.constant_bound.holds; });
}

LiouvilleReport liouville_check(unsigned long a, std::size_t n, std::size_t j_max, PrimeSource& src)
{
    if (a < 2 || n < 2 || j_max < 1)
        throw PreconditionError("liouville_check needs a >= 2, n >= 2, j_max >= 1");
    const WeightFunction w = WeightFunction::factorial_tower(a);
    LiouvilleReport report;
    report.a = a;
    report.n = n;
    report.constant_sup = 0;
    for (std::size_t j = 1; j <= j_max; ++j) {
        check_deadline();
        Approximant ap = truncation_approximant(w, n, j, src);
        const std::size_t t = ap.truncation_index;
        const BigRat ratio = make_rat(a, a - 1);

        InequalityCheck tail;
        tail.name = "gap <= a/(a-1) * a^-(n+j)!";
        tail.lhs = ap.gap_hi;
        tail.rhs = ratio / BigRat(pow_ul(a, factorial(t + 1)));
        tail.holds = tail.lhs <= tail.rhs;

        const BigRat scaled = ap.gap_hi * BigRat(ipow(ap.s, n + 1));
        const auto exp_num = static_cast<unsigned long>(t * (t + 1) + 1);
        const BigRat c_j = BigRat(ipow(BigInt(a), exp_num)) / (BigRat(a - 1) * BigRat(ipow(ap.s, j - 1)));
        InequalityCheck constant;
        constant.name = "gap * s^(n+1) <= a^((n+j-1)(n+j)+1) / ((a-1) s^(j-1))";
        constant.lhs = scaled;
        constant.rhs = c_j;
        constant.holds = scaled <= c_j;
        if (c_j > report.constant_sup)
            report.constant_sup = c_j;

        report.rows.push_back({std::move(ap), std::move(tail), std::move(constant), scaled});
    }
    return report;
}

bool RothReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const RothRow& r) { return r.geometric_bound.holds && r.roth_bound.holds; });
}

RothReport roth_check(unsigned long a, unsigned long m, std::size_t j_max, PrimeSource& src)
{
    if (a < 2)
        throw PreconditionError("roth_check needs a >= 2");
    if (m < 3)
        throw PreconditionError("roth_check needs m >= 3");
    if (j_max < 2)
        throw PreconditionError("roth_check needs j_max >= 2 (the bound chain starts at j = 2)");
    const WeightFunction w = WeightFunction::exp_tower(a, m);
    RothReport report;
    report.a = a;
    report.m = m;
    for (std::size_t j = 2; j <= j_max; ++j) {
        check_deadline();
        Approximant ap = truncation_approximant(w, std::nullopt, j, src);
        const BigInt a_j = ipow(BigInt(a), static_cast<std::uint64_t>(j));

        InequalityCheck cond;
        cond.name = "s >= a^(2jm)";
        cond.lhs = BigRat(ap.s);
        cond.rhs = BigRat(ipow(BigInt(a), static_cast<std::uint64_t>(2 * j * m)));
        cond.holds = cond.lhs >= cond.rhs;
        cond.informational = true;

        // s / a^j = a^(m^j) is an integer
        const BigInt base = ap.s / a_j;
        InequalityCheck geo;
        geo.name = "gap <= 1/((s/a^j)^m - 1)";
        geo.lhs = ap.gap_hi;
        geo.rhs = make_rat(1, ipow(base, m) - 1);
        geo.holds = geo.lhs <= geo.rhs;

        InequalityCheck roth;
        roth.name = "gap^4 * s^9 <= 1";
        roth.lhs = pow_rat(ap.gap_hi, 4) * BigRat(ipow(ap.s, 9));
        roth.rhs = 1;
        roth.holds = roth.lhs <= roth.rhs;

        report.rows.push_back({std::move(ap), std::move(cond), std::move(geo), std::move(roth)});
    }
    return report;
}

std::vector<BigInt> continued_fraction(const BigRat& x, std::size_t max_terms)
{
    if (x < 0)
        throw PreconditionError("continued_fraction needs x >= 0");
    std::vector<BigInt> out;
    BigInt num = x.get_num();
    BigInt den = x.get_den();
    while (den != 0 && out.size() < max_terms) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.push_back(q);
        num = den;
        den = r;
    }
    return out;
}

std::vector<BigRat> convergents(const std::vector<BigInt>& quotients)
{
    std::vector<BigRat> out;
    BigInt h_prev = 1, h_prev2 = 0;
    BigInt k_prev = 0, k_prev2 = 1;
    for (const auto& q : quotients) {
        const BigInt h = q * h_prev + h_prev2;
        const BigInt k = q * k_prev + k_prev2;
        out.push_back(make_rat(h, k));
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return out;
}

namespace {

// s^u * g^grid compared with 1, i.e. the sign of u/grid - (-log g / log s).
int compare_power(const BigInt& s, long u, const BigRat& g)
{
    const BigInt num = ipow(g.get_num(), kExponentGrid);
    const BigInt den = ipow(g.get_den(), kExponentGrid);
    const BigInt su = ipow(s, static_cast<std::uint64_t>(u));
    const BigInt lhs = su * num;
    return lhs < den ? -1 : (lhs == den ? 0 : 1);
}

double log2_approx(const BigInt& x)
{
    long e = 0;
    const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return static_cast<double>(e) + std::log2(m);
}

}  // namespace

ExponentEstimate exponent_bracket(const Approximant& approx)
{
    if (approx.s <= 1)
        throw PreconditionError("exponent_bracket needs s > 1");
    if (approx.gap_lo <= 0 || approx.gap_hi >= 1)
        throw PreconditionError("exponent_bracket needs 0 < gap_lo <= gap_hi < 1");
    const double log_s = log2_approx(approx.s);
    auto guess = [&](const BigRat& g) {
        const double e = (log2_approx(g.get_den()) - log2_approx(g.get_num())) / log_s;
        return std::max(0L, static_cast<long>(std::floor(e * kExponentGrid)));
    };

    // lo: largest u with s^u * gap_hi^grid <= 1
    long lo = guess(approx.gap_hi);
    while (lo > 0 && compare_power(approx.s, lo, approx.gap_hi) > 0)
        --lo;
    while (compare_power(approx.s, lo + 1, approx.gap_hi) <= 0)
        ++lo;
    // hi: smallest u with s^u * gap_lo^grid >= 1
    long hi = guess(approx.gap_lo) + 1;
    while (hi > 0 && compare_power(approx.s, hi - 1, approx.gap_lo) >= 0)
        --hi;
    while (compare_power(approx.s, hi, approx.gap_lo) < 0)
        ++hi;

    return ExponentEstimate{approx.j, bit_length(approx.s), make_rat(lo, kExponentGrid), make_rat(hi, kExponentGrid)};
}

std::vector<ExponentEstimate> effective_exponent(const WeightFunction& w, std::optional<std::size_t> degree,
                                                 std::size_t j_from, std::size_t j_to, PrimeSource& src)
{
    if (j_from == 0 || j_to < j_from)
        throw PreconditionError("effective_exponent: bad j range");
    std::vector<ExponentEstimate> out;
    for (std::size_t j = j_from; j <= j_to; ++j) {
        check_deadline();
        out.push_back(exponent_bracket(truncation_approximant(w, degree, j, src)));
    }
    return out;
}

}  // namespace primerep
