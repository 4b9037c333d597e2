#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

std::vector<std::uint64_t> trial_division_primes(std::size_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 2; out.size() < n; ++c) {
        bool prime = true;
        for (std::uint64_t p : out) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            out.push_back(c);
    }
    return out;
}

bool is_prime_trial(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

mpz_class root_bisect(const mpz_class& x, unsigned long n)
{
    if (x < 0 || n == 0)
        throw std::invalid_argument("root_bisect");
    mpz_class lo = 0;
    mpz_class hi = mpz_class(1) << static_cast<mp_bitcnt_t>(mpz_sizeinbase(x.get_mpz_t(), 2) / n + 1);
    // invariant: lo^n <= x < hi^n
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), n);
        if (p <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string long_division(mpz_class num, const mpz_class& den, unsigned base, std::size_t count)
{
    static const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
    num %= den;
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        num *= base;
        mpz_class q = num / den;
        num -= q * den;
        out.push_back(kDigits[q.get_ui()]);
    }
    return out;
}

std::string truncated_decimal(const mpq_class& x, std::size_t frac)
{
    mpz_class ip = x.get_num() / x.get_den();
    return ip.get_str() + "." + long_division(x.get_num(), x.get_den(), 10, frac);
}

mpz_class log2_floor_scaled(const mpq_class& x, unsigned bits)
{
    const unsigned long e = 1UL << bits;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
    // largest k with num >= den * 2^k, by bisection on k
    unsigned long lo = 0;
    unsigned long hi = mpz_sizeinbase(num.get_mpz_t(), 2) + 1;
    if (num < den)
        throw std::invalid_argument("log2_floor_scaled needs x >= 1");
    while (hi - lo > 1) {
        const unsigned long mid = lo + (hi - lo) / 2;
        if (num >= (den << static_cast<mp_bitcnt_t>(mid)))
            lo = mid;
        else
            hi = mid;
    }
    return mpz_class(lo);
}

mpq_class dense_partial_sum(const std::vector<mpz_class>& f, const std::vector<std::uint64_t>& primes)
{
    mpq_class s = 0;
    for (std::size_t k = 0; k < f.size() && k < primes.size(); ++k) {
        mpq_class t(mpz_class(static_cast<unsigned long>(primes[k])), f[k]);
        t.canonicalize();
        s += t;
    }
    return s;
}

std::vector<mpz_class> euclid_quotients(mpz_class num, mpz_class den)
{
    std::vector<mpz_class> out;
    while (den != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.push_back(q);
        mpz_class r = num - q * den;
        num = den;
        den = r;
    }
    return out;
}

}  // namespace oracle
