#pragma once

// Exact integer and rational kernel. BigInt and BigRat are GMP values;
// BigRat is kept canonical (lowest terms, positive denominator).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace primerep {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// num/den in lowest terms. Throws PreconditionError when den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Number of bits in |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// base^exp, checked against the configured bit cap before any work is done.
BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt ipow(const BigInt& base, const BigInt& exp);

BigInt factorial(std::uint64_t k);

/// Greatest integer <= x (floor, not truncation).
BigInt floor_ratio(const BigRat& x);
/// Least integer >= x.
BigInt ceil_ratio(const BigRat& x);

/// r with r^n <= x < (r+1)^n. Requires x >= 0, n >= 1.
BigInt nth_root_floor(const BigInt& x, std::uint64_t n);

/// Exact exponent test: true iff x == r^n for r = nth_root_floor(x, n).
bool is_perfect_power_of(const BigInt& x, std::uint64_t n);

std::string to_string(const BigInt& x);
/// "num/den", or just "num" when den == 1.
std::string to_string(const BigRat& x);

/// Decimal (optionally signed) integer literal. Throws PreconditionError.
BigInt parse_bigint(std::string_view text);

/// Approximate decimal rendering with `digits` significant digits; for display only.
std::string approx_decimal(const BigRat& x, int digits = 12);

/// Converts a non-negative BigInt that fits in 64 bits. Throws otherwise.
std::uint64_t to_u64(const BigInt& x);

}  // namespace primerep
