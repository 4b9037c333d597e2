#pragma once

// Mills, Wright and Buenos Aires prime-representing constants, each held as
// a rational enclosure derived from its prime tower or series.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "primerep/digits.hpp"
#include "primerep/errors.hpp"
#include "primerep/interval.hpp"
#include "primerep/primes.hpp"

namespace primerep {

/// The prime found for a tower level falls outside the floor-preserving window.
class TowerBreakError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- Mills -----------------------------------------------------------------

/// Enclosure of [M^(1/3^n), (M+1)^(1/3^n)) with endpoints on a 10^-places grid.
struct ThetaEnclosure {
    RatInterval interval;
    UpperEnd upper = UpperEnd::closed;  // open only when the upper root is exact
};

ThetaEnclosure mills_theta_enclosure(const BigInt& M_n, std::size_t n, std::size_t places);

struct MillsState {
    std::vector<BigInt> primes;  // M_1 .. M_n
    ThetaEnclosure theta;

    std::size_t depth() const { return primes.size(); }
};

/// Minimum decimal grid of the enclosure kept in MillsState; it widens with M_n.
inline constexpr std::size_t kDefaultThetaPlaces = 24;

/// M_1 = 2, M_{k+1} = least prime >= M_k^3. Throws TowerBreakError if that
/// prime reaches (M_k + 1)^3.
MillsState mills_sequence(std::size_t n_max);

/// Appends M_{n+1} and refreshes the enclosure.
void mills_deepen(MillsState& state);

struct ThetaDigits {
    CertifiedDigits digits;
    std::size_t depth = 0;
    ThetaEnclosure enclosure;
};

inline constexpr std::size_t kDefaultMaxMillsDepth = 8;

/// Certified decimal digits of theta; deepens the tower as needed up to
/// max_depth, then throws PrecisionError with the partial result.
ThetaDigits mills_theta(MillsState& state, std::size_t digits, std::size_t max_depth = kDefaultMaxMillsDepth);

struct TowerFloorRow {
    std::size_t k = 0;
    BigInt expected;
    std::optional<BigInt> floor_lo;  // floor of the lower endpoint image
    std::optional<BigInt> floor_hi;  // floor of the upper endpoint image
    bool pass = false;
};

/// floor(lo^(3^k)) = floor(hi^(3^k)) = M_k for k below the depth; at k = depth
/// checks lo^(3^n) <= M_n and hi^(3^n) >= M_n + 1 (the endpoints bracket the
/// half-open window).
std::vector<TowerFloorRow> mills_forward_check(const MillsState& state);

// ---- Wright ----------------------------------------------------------------

enum class WrightVariant { largest, smallest };

std::string to_string(WrightVariant v);

struct AlphaEnclosure {
    RatInterval interval;
    UpperEnd upper = UpperEnd::closed;
    std::vector<RatInterval> levels;  // levels[k] encloses alpha_k, k = 0..n
    std::vector<UpperEnd> level_upper;
};

struct WrightState {
    WrightVariant variant = WrightVariant::largest;
    std::vector<BigInt> primes;  // W_1 .. W_n
    AlphaEnclosure alpha;

    std::size_t depth() const { return primes.size(); }
};

/// W_1 = 3 and W_{k+1} the least (smallest) or greatest (largest) prime in
/// [2^W_k, 2^(W_k + 1)). Depth 4 and beyond requires allow_slow.
WrightState wright_sequence(WrightVariant variant, std::size_t n_max, bool allow_slow = false);

/// n-fold log2 of [W_n, W_n + 1).
AlphaEnclosure wright_alpha_enclosure(const std::vector<BigInt>& primes, std::size_t precision_bits);

/// Certified digits of alpha; throws PrecisionError (with the certified
/// prefix) when the tower depth cannot certify `digits`.
CertifiedDigits wright_alpha(const WrightState& state, std::size_t digits);

/// floor(alpha_k) for k = 1..n read off the enclosure levels.
std::vector<TowerFloorRow> wright_tower_floors(const WrightState& state);

// ---- Buenos Aires ----------------------------------------------------------

struct RecursionStep {
    std::size_t n = 0;
    RatInterval enclosure;          // lambda_n
    std::optional<BigInt> floor;    // set when certified
};

struct BuenosAiresState {
    std::size_t terms = 0;
    BigRat partial_sum;
    BigRat tail_hi;
    RatInterval enclosure;
    std::vector<RecursionStep> recursion_trace;
};

/// lambda = sum (p_k - 1) / prod_{i<k} p_i truncated at K terms. Since
/// p_{k+1} < 2 p_k the term ratio is below 2/(p_k - 1), so the tail from
/// any index j with p_j >= 5 is below twice its first term.
BuenosAiresState buenos_aires_lambda(std::size_t K, PrimeSource& src);

struct BuenosAiresRow {
    std::size_t n = 0;
    BigInt floor;
    BigInt expected;
    bool match = false;
};

struct BuenosAiresExtraction {
    std::vector<BuenosAiresRow> rows;
    BuenosAiresState state;  // the state that certified every floor

    bool passed() const;
};

/// Runs lambda_n = floor(lambda_{n-1}) (lambda_{n-1} - floor(lambda_{n-1}) + 1)
/// in interval arithmetic, doubling K whenever an enclosure straddles an integer.
BuenosAiresExtraction buenos_aires_extract(const BuenosAiresState& state, std::size_t N, PrimeSource& src);

struct LambdaDigits {
    CertifiedDigits digits;
    BuenosAiresState state;
};

LambdaDigits buenos_aires_digits(std::size_t digits, PrimeSource& src, std::size_t initial_terms = 8);

}  // namespace primerep
