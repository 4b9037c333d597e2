#include "primerep/bignum.hpp"

#include <cmath>
#include <limits>

#include "primerep/limits.hpp"

namespace primerep {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw PreconditionError("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

std::size_t bit_length(const BigInt& x)
{
    if (x == 0)
        return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

namespace {

// Estimated bit length of |base|^exp, rounded up.
std::uint64_t power_bits(const BigInt& base, std::uint64_t exp)
{
    long e2 = 0;
    const double mant = mpz_get_d_2exp(&e2, base.get_mpz_t());
    const double log2_base = static_cast<double>(e2) + std::log2(std::fabs(mant));
    const double bits = std::ceil(log2_base * static_cast<double>(exp)) + 1.0;
    if (bits >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(bits);
}

}  // namespace

BigInt ipow(const BigInt& base, std::uint64_t exp)
{
    if (exp == 0)
        return 1;
    if (base == 0 || base == 1)
        return base;
    if (base == -1)
        return (exp % 2 == 0) ? BigInt(1) : BigInt(-1);
    const auto bits = power_bits(base, exp);
    check_bits(bits, "ipow");
    check_deadline();
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    note_bits(bit_length(r));
    return r;
}

BigInt ipow(const BigInt& base, const BigInt& exp)
{
    if (exp < 0)
        throw PreconditionError("ipow: negative exponent");
    if (exp == 0)
        return 1;
    if (base == 0 || base == 1)
        return base;
    if (base == -1)
        return mpz_even_p(exp.get_mpz_t()) ? BigInt(1) : BigInt(-1);
    if (!exp.fits_ulong_p())
        throw ResourceLimitError("ipow: exponent " + exp.get_str() + " exceeds bit cap");
    return ipow(base, static_cast<std::uint64_t>(exp.get_ui()));
}

BigInt factorial(std::uint64_t k)
{
    // log2(k!) <= k*log2(k)
    if (k > 2) {
        const double bits = static_cast<double>(k) * std::log2(static_cast<double>(k));
        check_bits(static_cast<std::uint64_t>(bits), "factorial");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt floor_ratio(const BigRat& x)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt ceil_ratio(const BigRat& x)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt nth_root_floor(const BigInt& x, std::uint64_t n)
{
    if (x < 0)
        throw PreconditionError("nth_root_floor: negative radicand");
    if (n == 0)
        throw PreconditionError("nth_root_floor: root index must be positive");
    if (n == 1)
        return x;
    if (n >= bit_length(x))
        return x == 0 ? BigInt(0) : BigInt(1);
    BigInt r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

bool is_perfect_power_of(const BigInt& x, std::uint64_t n)
{
    const BigInt r = nth_root_floor(x, n);
    return ipow(r, n) == x;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt parse_bigint(std::string_view text)
{
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        throw PreconditionError("not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9')
            throw PreconditionError("not an integer: '" + s + "'");
    }
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

std::string approx_decimal(const BigRat& x, int digits)
{
    if (x == 0)
        return "0";
    // mpf keeps a huge exponent range, unlike double
    mpf_class f(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    f = x;
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(0, 1);
    }
    std::string out;
    if (exp > 0 && exp <= digits + 1) {
        if (static_cast<std::size_t>(exp) >= mant.size())
            out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
        else
            out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    } else if (exp <= 0 && exp > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1)
            out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(exp) - 1);
    }
    return neg ? "-" + out : out;
}

std::uint64_t to_u64(const BigInt& x)
{
    if (x < 0 || bit_length(x) > 64)
        throw ResourceLimitError("value " + x.get_str() + " does not fit in 64 bits");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, x.get_mpz_t());
    return v;
}

}  // namespace primerep
