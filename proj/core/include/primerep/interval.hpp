#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "primerep/bignum.hpp"

namespace primerep {

/// Closed interval [lo, hi] of exact rationals enclosing a real value.
class RatInterval {
public:
    RatInterval(BigRat lo, BigRat hi);

    static RatInterval point(const BigRat& x) { return RatInterval(x, x); }

    const BigRat& lo() const noexcept { return lo_; }
    const BigRat& hi() const noexcept { return hi_; }

    BigRat width() const { return hi_ - lo_; }
    bool contains(const BigRat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    friend bool operator==(const RatInterval&, const RatInterval&) = default;

private:
    BigRat lo_;
    BigRat hi_;
};

enum class IntervalOp { add, sub, mul };

/// Sound enclosure of {x op y : x in a, y in b}.
RatInterval interval_arith(const RatInterval& a, const RatInterval& b, IntervalOp op);

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) { return interval_arith(a, b, IntervalOp::add); }
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) { return interval_arith(a, b, IntervalOp::sub); }
inline RatInterval operator*(const RatInterval& a, const RatInterval& b) { return interval_arith(a, b, IntervalOp::mul); }

std::string to_string(const RatInterval& x);

/// k such that x == 2^k exactly, if any.
std::optional<BigInt> exact_log2(const BigRat& x);

/// Enclosure of log2 over x (x.lo > 0). Width is at most
/// 2^-precision_bits plus the spread of log2 over x itself.
RatInterval log2_enclosure(const RatInterval& x, std::size_t precision_bits);

}  // namespace primerep
