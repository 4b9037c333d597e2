#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primerep/bignum.hpp"

namespace primerep {

enum class WeightFamily { power_square, double_exp, factorial_tower, exp_tower, minimal, custom };

/// Denominator sequence f(k), k >= 1, of a prime series sum p_k / f(k).
///
/// Every family except custom has the radix form f(k) = b^E(k):
///   power_square(r)     b = r,  E(k) = k^2
///   double_exp          b = 10, E(k) = 2^k
///   factorial_tower(a)  b = a,  E(k) = k + k!
///   exp_tower(a, m)     b = a,  E(k) = k + m^k
///   minimal             b = 2,  E(1) = 0, E(k) = 3 + 4 + ... + (k+1)
/// A custom table is a finite, strictly ascending list of positive integers.
class WeightFunction {
public:
    static WeightFunction power_square(unsigned long r);
    static WeightFunction double_exp();
    static WeightFunction factorial_tower(unsigned long a);
    static WeightFunction exp_tower(unsigned long a, unsigned long m);
    static WeightFunction minimal();
    static WeightFunction custom(std::vector<BigInt> values);

    WeightFamily family() const noexcept { return family_; }
    unsigned long a() const noexcept { return a_; }  // r for power_square
    unsigned long m() const noexcept { return m_; }
    const std::vector<BigInt>& table() const noexcept { return table_; }

    /// Canonical name, e.g. "exp-tower:2:3"; custom tables render as "custom[n]".
    std::string name() const;

    bool has_radix_form() const noexcept { return family_ != WeightFamily::custom; }
    /// b in f(k) = b^E(k). Requires has_radix_form().
    BigInt radix() const;
    /// E(k) in f(k) = b^E(k). Requires has_radix_form().
    BigInt exponent(std::size_t k) const;

    /// Largest valid k, if the weight is finite (custom tables).
    std::optional<std::size_t> max_index() const;

private:
    WeightFunction() = default;

    WeightFamily family_ = WeightFamily::minimal;
    unsigned long a_ = 2;
    unsigned long m_ = 0;
    std::vector<BigInt> table_;
};

/// f(k) exactly. Throws ResourceLimitError when f(k) exceeds the bit cap.
BigInt weight_eval(const WeightFunction& w, std::size_t k);

/// E(n) - E(n-1), so that f(n)/f(n-1) = b^ratio_exponent. Radix families only.
BigInt ratio_exponent(const WeightFunction& w, std::size_t n);

/// f(k) / f(j) as an exact rational.
BigRat weight_quotient(const WeightFunction& w, std::size_t k, std::size_t j);

struct WeightViolation {
    std::size_t k = 0;
    std::string predicate;  // "growth" or "divisibility"
};

struct WeightReport {
    std::string weight;
    std::size_t K = 0;
    std::vector<WeightViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks f(k) >= 2^(k+1) f(k-1) and f(k-1) | f(k) for 2 <= k <= K.
WeightReport weight_validate(const WeightFunction& w, std::size_t K);

/// Parses "power-square:r", "double-exp", "factorial-tower:a",
/// "exp-tower:a:m", "minimal" and "custom:@path". Custom files hold
/// whitespace-separated positive integers. Throws PreconditionError.
WeightFunction parse_weight(std::string_view spec);

}  // namespace primerep
