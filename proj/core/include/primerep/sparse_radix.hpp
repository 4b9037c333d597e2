#pragma once

// Exact numbers of the form  sum_i c_i * b^e_i  for a fixed base b >= 2,
// integer coefficients and arbitrary (possibly huge, possibly negative)
// integer exponents. Lacunary series such as sum p_k / a^(k + k!) live here
// without ever materializing a^(k!).

#include <vector>

#include "primerep/bignum.hpp"

namespace primerep {

class SparseRadix {
public:
    struct Term {
        BigInt coeff;
        BigInt exponent;
    };

    explicit SparseRadix(BigInt base);
    SparseRadix(BigInt base, std::vector<Term> terms);

    const BigInt& base() const noexcept { return base_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    void add_term(BigInt coeff, BigInt exponent);

    SparseRadix& operator+=(const SparseRadix& other);
    SparseRadix& operator-=(const SparseRadix& other);
    friend SparseRadix operator+(SparseRadix a, const SparseRadix& b) { return a += b; }
    friend SparseRadix operator-(SparseRadix a, const SparseRadix& b) { return a -= b; }

    /// Value times b^shift.
    SparseRadix shifted(const BigInt& shift) const;

    /// Equal exponents merged, zero terms dropped, factors of b moved into the
    /// exponent, sorted by ascending exponent. The form is not unique for
    /// nonzero values, but a value is zero iff its canonical form is empty.
    SparseRadix canonical() const;

    bool is_zero() const;

    /// floor(value) with nonnegative exponents only. Requires every
    /// coefficient >= 0. The fractional tail is resolved exactly, touching only
    /// as many low-order terms as needed to certify the integer part.
    SparseRadix floor() const;

    /// Materialized value; throws PreconditionError if not an integer and
    /// ResourceLimitError if it exceeds the bit cap.
    BigInt to_bigint() const;
    BigRat to_bigrat() const;

private:
    BigInt base_;
    std::vector<Term> terms_;
};

}  // namespace primerep
