#include "primerep/sparse_radix.hpp"

#include <algorithm>

#include "primerep/limits.hpp"

namespace primerep {
namespace {

// True iff value < base^exp, for value >= 0 and exp >= 0.
bool below_power(const BigInt& value, const BigInt& base, const BigInt& exp)
{
    if (value <= 0)
        return true;
    if (exp >= static_cast<unsigned long>(bit_length(value)))
        return true;  // value < 2^exp <= base^exp
    return value < ipow(base, exp);
}

}  // namespace

SparseRadix::SparseRadix(BigInt base) : base_(std::move(base))
{
    if (base_ < 2)
        throw PreconditionError("SparseRadix: base must be at least 2");
}

SparseRadix::SparseRadix(BigInt base, std::vector<Term> terms) : SparseRadix(std::move(base))
{
    terms_ = std::move(terms);
}

void SparseRadix::add_term(BigInt coeff, BigInt exponent)
{
    if (coeff != 0)
        terms_.push_back({std::move(coeff), std::move(exponent)});
}

SparseRadix& SparseRadix::operator+=(const SparseRadix& other)
{
    if (other.base_ != base_)
        throw PreconditionError("SparseRadix: mixed bases");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

SparseRadix& SparseRadix::operator-=(const SparseRadix& other)
{
    if (other.base_ != base_)
        throw PreconditionError("SparseRadix: mixed bases");
    for (const auto& t : other.terms_)
        terms_.push_back({-t.coeff, t.exponent});
    return *this;
}

SparseRadix SparseRadix::shifted(const BigInt& shift) const
{
    SparseRadix out(base_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.coeff, t.exponent + shift});
    return out;
}

SparseRadix SparseRadix::canonical() const
{
    std::vector<Term> cur = terms_;
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(cur.begin(), cur.end(), [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
        std::vector<Term> merged;
        for (auto& t : cur) {
            if (!merged.empty() && merged.back().exponent == t.exponent)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        cur.clear();
        for (auto& t : merged) {
            if (t.coeff == 0)
                continue;
            while (mpz_divisible_p(t.coeff.get_mpz_t(), base_.get_mpz_t())) {
                mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), base_.get_mpz_t());
                t.exponent += 1;
                changed = true;
            }
            cur.push_back(std::move(t));
        }
    }
    return SparseRadix(base_, std::move(cur));
}

bool SparseRadix::is_zero() const { return canonical().terms_.empty(); }

SparseRadix SparseRadix::floor() const
{
    SparseRadix whole(base_);
    struct Frac {
        BigInt coeff;
        BigInt depth;  // term is coeff * b^-depth, depth > 0, coeff < b^depth
    };
    std::vector<Frac> fracs;

    for (const auto& t : terms_) {
        if (t.coeff < 0)
            throw PreconditionError("SparseRadix::floor: negative coefficient");
        if (t.coeff == 0)
            continue;
        if (t.exponent >= 0) {
            whole.terms_.push_back(t);
            continue;
        }
        const BigInt depth = -t.exponent;
        if (below_power(t.coeff, base_, depth)) {
            fracs.push_back({t.coeff, depth});
            continue;
        }
        // coefficient spills past the radix point; depth is small here
        const BigInt scale = ipow(base_, depth);
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.coeff.get_mpz_t(), scale.get_mpz_t());
        whole.add_term(q, 0);
        if (r != 0)
            fracs.push_back({r, depth});
    }
    if (fracs.empty())
        return whole;

    std::sort(fracs.begin(), fracs.end(), [](const Frac& x, const Frac& y) { return x.depth < y.depth; });

    // Include the shallowest i terms exactly (scaled by b^D, D = depth of the
    // last included term) and bound the rest by (sum of coeffs) * b^-depth_{i+1}.
    std::vector<BigInt> rest_sum(fracs.size() + 1, 0);
    for (std::size_t k = fracs.size(); k-- > 0;)
        rest_sum[k] = rest_sum[k + 1] + fracs[k].coeff;

    BigInt scaled = 0;  // sum_{k<i} c_k * b^(D - d_k)
    BigInt depth = 0;   // D
    for (std::size_t i = 0;; ++i) {
        check_deadline();
        BigInt q = 0;
        BigInt rem = 0;
        if (i > 0) {
            const BigInt scale = ipow(base_, depth);
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
        }
        if (i == fracs.size()) {
            whole.add_term(q, 0);
            return whole;
        }
        const BigInt gap = fracs[i].depth - depth;
        const BigInt& rest = rest_sum[i];
        // certified when rem + rest * b^-gap < b^D; rem < b^D always, so rest < b^gap suffices
        bool certified = below_power(rest, base_, gap);
        if (!certified && i > 0) {
            const BigInt bg = ipow(base_, gap);
            certified = rem * bg + rest < ipow(base_, depth + gap);
        }
        if (certified) {
            whole.add_term(q, 0);
            return whole;
        }
        // absorb term i
        const BigInt new_depth = fracs[i].depth;
        if (i > 0)
            scaled *= ipow(base_, new_depth - depth);
        scaled += fracs[i].coeff;
        depth = new_depth;
    }
}

BigInt SparseRadix::to_bigint() const
{
    const SparseRadix c = canonical();
    BigInt out = 0;
    for (const auto& t : c.terms_) {
        if (t.exponent < 0)
            throw PreconditionError("SparseRadix::to_bigint: value is not an integer");
        out += t.coeff * ipow(base_, t.exponent);
    }
    return out;
}

BigRat SparseRadix::to_bigrat() const
{
    const SparseRadix c = canonical();
    BigRat out = 0;
    for (const auto& t : c.terms_) {
        if (t.exponent >= 0)
            out += BigRat(t.coeff * ipow(base_, t.exponent));
        else
            out += make_rat(t.coeff, ipow(base_, -t.exponent));
    }
    return out;
}

}  // namespace primerep
