#include "primerep/interval.hpp"

#include "primerep/limits.hpp"

namespace primerep {
namespace {

bool is_power_of_two(const BigInt& x) { return x > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

// floor(log2 y) for rational y > 0.
long floor_log2(const BigRat& y)
{
    const long guess = static_cast<long>(bit_length(y.get_num())) - static_cast<long>(bit_length(y.get_den()));
    BigInt num = y.get_num();
    BigInt den = y.get_den();
    if (guess >= 0)
        den <<= static_cast<mp_bitcnt_t>(guess);
    else
        num <<= static_cast<mp_bitcnt_t>(-guess);
    return num >= den ? guess : guess - 1;
}

enum class Round { down, up };

BigInt shift_right(const BigInt& x, mp_bitcnt_t bits, Round mode)
{
    BigInt r;
    if (mode == Round::down)
        mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
    else
        mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
    return r;
}

// One-sided bound on log2(y): binary digits of log2 extracted by repeated
// squaring of y/2^W held in fixed point with directed rounding.
BigRat log2_bound(const BigRat& y, std::size_t frac_bits, Round mode)
{
    const long whole = floor_log2(y);
    const auto work = static_cast<mp_bitcnt_t>(frac_bits + 32);

    // z = y / 2^whole in [1, 2), scaled by 2^work
    BigInt num = y.get_num();
    BigInt den = y.get_den();
    const long shift = static_cast<long>(work) - whole;
    if (shift >= 0)
        num <<= static_cast<mp_bitcnt_t>(shift);
    else
        den <<= static_cast<mp_bitcnt_t>(-shift);
    BigInt z;
    if (mode == Round::down)
        mpz_fdiv_q(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_cdiv_q(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    const BigInt one = BigInt(1) << work;
    const BigInt two = one << 1;
    BigInt bits = 0;
    for (std::size_t i = 0; i < frac_bits; ++i) {
        if ((i & 63) == 0)
            check_deadline();
        z = shift_right(z * z, work, mode);
        bits <<= 1;
        if (z >= two) {
            bits += 1;
            z = shift_right(z, 1, mode);
        }
    }

    // log2 z lies in [0, 1]; it is 0 exactly when z == 1
    BigRat out = make_rat(bits, BigInt(1) << static_cast<mp_bitcnt_t>(frac_bits));
    if (mode == Round::up && z != one)
        out += make_rat(1, BigInt(1) << static_cast<mp_bitcnt_t>(frac_bits));
    return out + whole;
}

}  // namespace

std::optional<BigInt> exact_log2(const BigRat& x)
{
    if (x <= 0)
        return std::nullopt;
    if (x.get_den() == 1 && is_power_of_two(x.get_num()))
        return BigInt(static_cast<unsigned long>(bit_length(x.get_num()) - 1));
    if (x.get_num() == 1 && is_power_of_two(x.get_den()))
        return -BigInt(static_cast<unsigned long>(bit_length(x.get_den()) - 1));
    return std::nullopt;
}

RatInterval log2_enclosure(const RatInterval& x, std::size_t precision_bits)
{
    if (x.lo() <= 0)
        throw DomainError("log2_enclosure: interval must be strictly positive, got lo = " + to_string(x.lo()));
    if (precision_bits == 0)
        throw PreconditionError("log2_enclosure: precision_bits must be positive");
    const std::size_t frac_bits = precision_bits + 1;
    BigRat lo = log2_bound(x.lo(), frac_bits, Round::down);
    BigRat hi = log2_bound(x.hi(), frac_bits, Round::up);
    return RatInterval(std::move(lo), std::move(hi));
}

}  // namespace primerep
