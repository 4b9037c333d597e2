#include "primerep/classic.hpp"

#include <algorithm>
#include <cmath>

#include "primerep/limits.hpp"

namespace primerep {

// ---- Mills -----------------------------------------------------------------

namespace {

std::uint64_t pow3(std::size_t n)
{
    if (n > 39)
        throw ResourceLimitError("Mills depth " + std::to_string(n) + " overflows 3^n");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < n; ++i)
        q *= 3;
    return q;
}

BigInt pow10(std::uint64_t e) { return ipow(BigInt(10), e); }

// Fine enough that both endpoints of the enclosure keep floor(x^(3^(n-1))) = M_(n-1):
// M_n - M_(n-1)^3 is only a prime gap, a relative margin of about 10^-digits(M_n).
std::size_t state_places(const BigInt& M_n, std::size_t n)
{
    return std::max<std::size_t>(kDefaultThetaPlaces, mpz_sizeinbase(M_n.get_mpz_t(), 10) + n + 8);
}

}  // namespace

ThetaEnclosure mills_theta_enclosure(const BigInt& M_n, std::size_t n, std::size_t places)
{
    if (n == 0 || M_n < 1)
        throw PreconditionError("mills_theta_enclosure: need n >= 1 and M_n >= 1");
    const std::uint64_t q = pow3(n);
    const BigInt grid = pow10(places * q);
    const BigInt scale = pow10(places);

    const BigInt lo = nth_root_floor(M_n * grid, q);
    const BigInt top = (M_n + 1) * grid;
    BigInt hi = nth_root_floor(top, q);
    const bool exact = ipow(hi, q) == top;
    if (!exact)
        hi += 1;
    return ThetaEnclosure{RatInterval(make_rat(lo, scale), make_rat(hi, scale)),
                          exact ? UpperEnd::open : UpperEnd::closed};
}

void mills_deepen(MillsState& state)
{
    const BigInt& last = state.primes.back();
    const BigInt cube = ipow(last, 3);
    BigInt next = next_prime_geq(cube);
    if (next >= ipow(last + 1, 3)) {
        throw TowerBreakError("Mills tower breaks: least prime >= " + cube.get_str() + " is not below (M+1)^3");
    }
    state.primes.push_back(std::move(next));
    state.theta = mills_theta_enclosure(state.primes.back(), state.primes.size(),
                                       state_places(state.primes.back(), state.primes.size()));
}

MillsState mills_sequence(std::size_t n_max)
{
    if (n_max == 0)
        throw PreconditionError("mills_sequence needs n_max >= 1");
    MillsState state{{BigInt(2)}, mills_theta_enclosure(2, 1, kDefaultThetaPlaces)};
    while (state.primes.size() < n_max) {
        check_deadline();
        mills_deepen(state);
    }
    return state;
}

ThetaDigits mills_theta(MillsState& state, std::size_t digits, std::size_t max_depth)
{
    if (state.primes.empty())
        throw PreconditionError("mills_theta: empty tower");
    for (std::size_t extra = 0;; ++extra) {
        check_deadline();
        const std::size_t places = digits + 8 + 4 * extra;
        ThetaEnclosure enc = mills_theta_enclosure(state.primes.back(), state.depth(), places);
        CertifiedDigits d = decimal_prefix(enc.interval, digits, enc.upper);
        if (d.complete())
            return ThetaDigits{std::move(d), state.depth(), std::move(enc)};
        if (state.depth() >= max_depth) {
            throw PrecisionError("Mills theta: " + std::to_string(digits) + " digits not certified at depth " +
                                     std::to_string(state.depth()),
                                 std::move(d));
        }
        mills_deepen(state);
    }
}

std::vector<TowerFloorRow> mills_forward_check(const MillsState& state)
{
    const std::size_t depth = state.depth();
    const RatInterval& enc = state.theta.interval;
    std::vector<TowerFloorRow> rows;
    for (std::size_t k = 1; k <= depth; ++k) {
        const std::uint64_t q = pow3(k);
        const BigRat lo_pow(ipow(enc.lo().get_num(), q), ipow(enc.lo().get_den(), q));
        const BigRat hi_pow(ipow(enc.hi().get_num(), q), ipow(enc.hi().get_den(), q));
        TowerFloorRow row;
        row.k = k;
        row.expected = state.primes[k - 1];
        row.floor_lo = floor_ratio(lo_pow);
        row.floor_hi = floor_ratio(hi_pow);
        if (k < depth)
            row.pass = *row.floor_lo == row.expected && *row.floor_hi == row.expected;
        else
            row.pass = lo_pow <= BigRat(row.expected) && hi_pow >= BigRat(row.expected + 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- Wright ----------------------------------------------------------------

std::string to_string(WrightVariant v) { return v == WrightVariant::largest ? "largest" : "smallest"; }

AlphaEnclosure wright_alpha_enclosure(const std::vector<BigInt>& primes, std::size_t precision_bits)
{
    if (primes.empty())
        throw PreconditionError("wright_alpha_enclosure: empty tower");
    const BigInt& top = primes.back();
    RatInterval x(BigRat(top), BigRat(top + 1));
    bool hi_exact = true;
    std::vector<RatInterval> levels{x};
    std::vector<UpperEnd> uppers{UpperEnd::open};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        hi_exact = hi_exact && exact_log2(x.hi()).has_value();
        x = log2_enclosure(x, precision_bits + 8);
        levels.push_back(x);
        uppers.push_back(hi_exact ? UpperEnd::open : UpperEnd::closed);
    }
    std::reverse(levels.begin(), levels.end());
    std::reverse(uppers.begin(), uppers.end());
    return AlphaEnclosure{levels.front(), uppers.front(), std::move(levels), std::move(uppers)};
}

WrightState wright_sequence(WrightVariant variant, std::size_t n_max, bool allow_slow)
{
    if (n_max == 0)
        throw PreconditionError("wright_sequence needs n_max >= 1");
    if (n_max >= 4 && !allow_slow)
        throw ResourceLimitError("Wright depth >= 4 is a multi-thousand-bit prime search; enable slow mode");
    std::vector<BigInt> primes{BigInt(3)};
    while (primes.size() < n_max) {
        check_deadline();
        const BigInt& w = primes.back();
        if (!w.fits_ulong_p())
            throw ResourceLimitError("Wright level exponent " + w.get_str() + " is beyond reach");
        const BigInt lo = ipow(BigInt(2), w.get_ui());
        const BigInt hi = lo * 2;
        BigInt next = variant == WrightVariant::smallest ? next_prime_geq(lo) : largest_prime_below(hi);
        if (next < lo || next >= hi)
            throw TowerBreakError("Wright tower: no prime in [2^W, 2^(W+1)) for W = " + w.get_str());
        primes.push_back(std::move(next));
    }
    AlphaEnclosure alpha = wright_alpha_enclosure(primes, 64);
    return WrightState{variant, std::move(primes), std::move(alpha)};
}

CertifiedDigits wright_alpha(const WrightState& state, std::size_t digits)
{
    if (state.primes.empty())
        throw PreconditionError("wright_alpha: empty tower");
    const auto bits = static_cast<std::size_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
    const AlphaEnclosure enc = wright_alpha_enclosure(state.primes, bits);
    CertifiedDigits d = decimal_prefix(enc.interval, digits, enc.upper);
    if (!d.complete()) {
        const std::string msg = "Wright alpha: depth " + std::to_string(state.depth()) + " certifies only '" +
                                d.text() + "', " + std::to_string(digits) + " digits requested";
        throw PrecisionError(msg, std::move(d));
    }
    return d;
}

std::vector<TowerFloorRow> wright_tower_floors(const WrightState& state)
{
    std::vector<TowerFloorRow> rows;
    const auto& levels = state.alpha.levels;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        TowerFloorRow row;
        row.k = k;
        row.expected = state.primes[k - 1];
        row.floor_lo = floor_ratio(levels[k].lo());
        row.floor_hi = state.alpha.level_upper[k] == UpperEnd::open ? ceil_ratio(levels[k].hi()) - 1
                                                                    : floor_ratio(levels[k].hi());
        row.pass = *row.floor_lo == row.expected && *row.floor_hi == row.expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- Buenos Aires ----------------------------------------------------------

BuenosAiresState buenos_aires_lambda(std::size_t K, PrimeSource& src)
{
    if (K == 0)
        throw PreconditionError("buenos_aires_lambda needs K >= 1");
    if (K > current_limits().max_terms)
        throw ResourceLimitError("term count " + std::to_string(K) + " exceeds cap");
    BigRat sum = 0;
    BigInt product = 1;  // prod_{i<k} p_i
    for (std::size_t k = 1; k <= K; ++k) {
        const BigInt p = nth_prime(src, k);
        sum += make_rat(p - 1, product);
        product *= p;
    }
    // tail: exact terms until p_j >= 5, then twice that term
    BigRat tail = 0;
    for (std::size_t j = K + 1;; ++j) {
        const BigInt p = nth_prime(src, j);
        const BigRat term = make_rat(p - 1, product);
        if (p >= 5) {
            tail += 2 * term;
            break;
        }
        tail += term;
        product *= p;
    }
    note_bits(bit_length(product));
    return BuenosAiresState{K, sum, tail, RatInterval(sum, sum + tail), {}};
}

bool BuenosAiresExtraction::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const BuenosAiresRow& r) { return r.match; });
}

BuenosAiresExtraction buenos_aires_extract(const BuenosAiresState& initial, std::size_t N, PrimeSource& src)
{
    if (N == 0)
        throw PreconditionError("buenos_aires_extract needs N >= 1");
    BuenosAiresState state = initial;
    for (;;) {
        check_deadline();
        state.recursion_trace.clear();
        std::vector<BuenosAiresRow> rows;
        RatInterval x = state.enclosure;
        bool straddled = false;
        for (std::size_t n = 1; n <= N; ++n) {
            const BigInt f = floor_ratio(x.lo());
            if (floor_ratio(x.hi()) != f) {
                state.recursion_trace.push_back({n, x, std::nullopt});
                straddled = true;
                break;
            }
            state.recursion_trace.push_back({n, x, f});
            const BigInt expected = nth_prime(src, n);
            rows.push_back({n, f, expected, f == expected});
            const BigRat fr(f);
            x = RatInterval(fr * (x.lo() - fr + 1), fr * (x.hi() - fr + 1));
        }
        if (!straddled)
            return BuenosAiresExtraction{std::move(rows), std::move(state)};
        const std::size_t next_k = state.terms * 2;
        if (next_k > current_limits().max_terms)
            throw ResourceLimitError("Buenos Aires recursion needs more than " +
                                     std::to_string(current_limits().max_terms) + " terms");
        state = buenos_aires_lambda(next_k, src);
    }
}

LambdaDigits buenos_aires_digits(std::size_t digits, PrimeSource& src, std::size_t initial_terms)
{
    std::size_t K = std::max<std::size_t>(1, initial_terms);
    for (;;) {
        check_deadline();
        BuenosAiresState state = buenos_aires_lambda(K, src);
        CertifiedDigits d = decimal_prefix(state.enclosure, digits);
        if (d.complete())
            return LambdaDigits{std::move(d), std::move(state)};
        if (K * 2 > current_limits().max_terms)
            throw PrecisionError("Buenos Aires lambda: digits not certified within term cap", std::move(d));
        K *= 2;
    }
}

}  // namespace primerep
