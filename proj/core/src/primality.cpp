#include "primerep/primes.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "primerep/limits.hpp"

namespace primerep {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr std::array<u64, 12> kDeterministicBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr int kExtraRounds = 64;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Odd primes below 2^22, used for trial division and window sieving.
const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> table = [] {
        constexpr std::uint32_t limit = 1u << 22;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 3; i <= limit; i += 2) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (u64 j = static_cast<u64>(i) * i; j <= limit; j += 2 * i)
                composite[j] = true;
        }
        return out;
    }();
    return table;
}

int jacobi(BigInt a, BigInt n) { return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()); }

// (x / 2) mod n for odd n
BigInt half_mod(const BigInt& x, const BigInt& n)
{
    BigInt y = x;
    if (mpz_odd_p(y.get_mpz_t()))
        y += n;
    y >>= 1;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
    return y;
}

BigInt mod(const BigInt& x, const BigInt& n)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Wheel-30 residues and the gaps between consecutive ones.
constexpr std::array<unsigned, 8> kWheel{1, 7, 11, 13, 17, 19, 23, 29};

bool on_wheel(unsigned r) { return std::find(kWheel.begin(), kWheel.end(), r) != kWheel.end(); }

std::size_t sieve_bound_for(std::size_t bits)
{
    const std::size_t want = bits * bits / 4;
    return std::clamp<std::size_t>(want, 1u << 10, 1u << 22);
}

std::uint64_t window_size_for(std::size_t bits) { return std::max<std::uint64_t>(1u << 12, 64 * bits); }

// Marks offsets o in [0, width) where start + o (or start - o, descending) has a
// small prime factor.
std::vector<bool> sieve_window(const BigInt& start, std::uint64_t width, bool descending, std::size_t bound)
{
    std::vector<bool> marked(width, false);
    for (const auto q : small_primes()) {
        if (q > bound)
            break;
        const u64 r = mpz_fdiv_ui(start.get_mpz_t(), q);
        u64 first = descending ? r : (q - r) % q;
        for (u64 o = first; o < width; o += q)
            marked[o] = true;
    }
    return marked;
}

}  // namespace

std::string to_string(PrimalityStatus status)
{
    switch (status) {
    case PrimalityStatus::composite:
        return "composite";
    case PrimalityStatus::prime:
        return "prime";
    case PrimalityStatus::probable_prime:
        return "probable_prime";
    }
    return "unknown";
}

namespace detail {

bool strong_probable_prime_u64(u64 n, u64 base)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    base %= n;
    if (base == 0)
        return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(base, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool strong_probable_prime(const BigInt& n, const BigInt& base)
{
    if (n < 2)
        return false;
    if (mpz_even_p(n.get_mpz_t()))
        return n == 2;
    const BigInt a = mod(base, n);
    if (a == 0)
        return true;
    const BigInt n1 = n - 1;
    BigInt d = n1;
    const auto s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1)
        return true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
        x = mod(x * x, n);
        if (x == n1)
            return true;
    }
    return false;
}

bool strong_lucas_probable_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    if (n == 2)
        return true;
    if (mpz_even_p(n.get_mpz_t()) || mpz_perfect_square_p(n.get_mpz_t()))
        return false;

    // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1
    long D = 5;
    for (;;) {
        const int j = jacobi(BigInt(D), n);
        if (j == -1)
            break;
        if (j == 0 && BigInt(D < 0 ? -D : D) != n)
            return false;
        D = D > 0 ? -(D + 2) : -D + 2;
    }
    const long P = 1;
    const BigInt Q = BigInt(1 - D) / 4;

    BigInt d = n + 1;
    const auto s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    BigInt U = 1;
    BigInt V = P;
    BigInt Qk = mod(Q, n);
    const BigInt Dm = mod(BigInt(D), n);
    const auto top = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (long i = static_cast<long>(top) - 2; i >= 0; --i) {
        U = mod(U * V, n);
        V = mod(V * V - 2 * Qk, n);
        Qk = mod(Qk * Qk, n);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            const BigInt u_next = half_mod(P * U + V, n);
            const BigInt v_next = half_mod(Dm * U + P * V, n);
            U = u_next;
            V = v_next;
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0)
        return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        if (V == 0)
            return true;
        Qk = mod(Qk * Qk, n);
    }
    return false;
}

}  // namespace detail

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : kDeterministicBases) {
        if (n % p == 0)
            return n == p;
    }
    for (u64 a : kDeterministicBases) {
        if (!detail::strong_probable_prime_u64(n, a))
            return false;
    }
    return true;
}

PrimalityVerdict is_prime(const BigInt& x)
{
    if (x < 0)
        throw PreconditionError("is_prime: negative input");
    PrimalityVerdict v{x, PrimalityStatus::composite, {}};
    if (bit_length(x) <= 64) {
        const u64 n = to_u64(x);
        if (is_prime_u64(n)) {
            v.status = PrimalityStatus::prime;
            v.witness_info = "deterministic strong tests, bases 2..37 (complete below 2^64)";
        } else {
            v.witness_info = n < 2 ? "units and zero are not prime" : "failed deterministic strong tests";
        }
        return v;
    }

    if (mpz_even_p(x.get_mpz_t())) {
        v.witness_info = "divisible by 2";
        return v;
    }
    for (const auto q : small_primes()) {
        if (q > 1000)
            break;
        if (mpz_divisible_ui_p(x.get_mpz_t(), q)) {
            v.witness_info = "divisible by " + std::to_string(q);
            return v;
        }
    }
    if (!detail::strong_probable_prime(x, 2)) {
        v.witness_info = "base-2 strong test witness";
        return v;
    }
    if (!detail::strong_lucas_probable_prime(x)) {
        v.witness_info = "strong Lucas test witness";
        return v;
    }
    std::mt19937_64 rng(0x5eed5eedULL ^ bit_length(x));
    const BigInt span = x - 4;
    for (int round = 0; round < kExtraRounds; ++round) {
        check_deadline();
        const BigInt a = mod(BigInt(static_cast<unsigned long>(rng())), span) + 3;
        if (!detail::strong_probable_prime(x, a)) {
            v.witness_info = "strong test witness " + a.get_str();
            return v;
        }
    }
    v.status = PrimalityStatus::probable_prime;
    v.witness_info = "BPSW plus " + std::to_string(kExtraRounds) + " strong rounds (error < 2^-128)";
    return v;
}

BigInt next_prime_geq(const BigInt& x)
{
    if (x <= 2)
        return 2;
    if (bit_length(x) <= 62) {
        u64 n = to_u64(x);
        if (n <= 5) {
            while (!is_prime_u64(n))
                ++n;
            return BigInt(static_cast<unsigned long>(n));
        }
        while (!on_wheel(static_cast<unsigned>(n % 30)))
            ++n;
        std::size_t idx = static_cast<std::size_t>(std::find(kWheel.begin(), kWheel.end(), n % 30) - kWheel.begin());
        for (;;) {
            if (is_prime_u64(n))
                return BigInt(static_cast<unsigned long>(n));
            const std::size_t next = (idx + 1) % kWheel.size();
            n += (kWheel[next] + 30 - kWheel[idx]) % 30;
            idx = next;
        }
    }

    const std::size_t bits = bit_length(x);
    const std::size_t bound = sieve_bound_for(bits);
    const u64 width = window_size_for(bits);
    BigInt start = x;
    for (;;) {
        check_deadline();
        const auto marked = sieve_window(start, width, false, bound);
        const unsigned base_res = static_cast<unsigned>(mpz_fdiv_ui(start.get_mpz_t(), 30));
        for (u64 o = 0; o < width; ++o) {
            if (!on_wheel(static_cast<unsigned>((base_res + o) % 30)) || marked[o])
                continue;
            BigInt candidate = start + static_cast<unsigned long>(o);
            if (!is_prime(candidate).composite())
                return candidate;
        }
        start += static_cast<unsigned long>(width);
    }
}

BigInt largest_prime_below(const BigInt& x)
{
    if (x <= 2)
        throw PreconditionError("largest_prime_below: no prime below " + x.get_str());
    if (bit_length(x) <= 62) {
        u64 n = to_u64(x) - 1;
        while (n > 5 && !on_wheel(static_cast<unsigned>(n % 30)))
            --n;
        while (!is_prime_u64(n))
            --n;
        return BigInt(static_cast<unsigned long>(n));
    }

    const std::size_t bits = bit_length(x);
    const std::size_t bound = sieve_bound_for(bits);
    const u64 width = window_size_for(bits);
    // offsets count down from top = x - 1
    BigInt top = x - 1;
    for (;;) {
        check_deadline();
        const auto marked = sieve_window(top, width, true, bound);
        const unsigned top_res = static_cast<unsigned>(mpz_fdiv_ui(top.get_mpz_t(), 30));
        for (u64 o = 0; o < width; ++o) {
            if (!on_wheel(static_cast<unsigned>((top_res + 30 - o % 30) % 30)) || marked[o])
                continue;
            BigInt candidate = top - static_cast<unsigned long>(o);
            if (!is_prime(candidate).composite())
                return candidate;
        }
        top -= static_cast<unsigned long>(width);
    }
}

}  // namespace primerep
