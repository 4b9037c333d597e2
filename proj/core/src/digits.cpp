#include "primerep/digits.hpp"

#include "primerep/limits.hpp"

namespace primerep {
namespace {

constexpr char kDigitChars[] = "0123456789abcdefghijklmnopqrstuvwxyz";

// Largest integer strictly below x.
BigInt floor_below(const BigRat& x) { return ceil_ratio(x) - 1; }

}  // namespace

std::string CertifiedDigits::text() const
{
    if (!integer_certified)
        return {};
    if (fraction.empty())
        return integer_part;
    return integer_part + "." + fraction;
}

CertifiedDigits digits_in_base(const RatInterval& x, unsigned base, std::size_t max_digits, UpperEnd upper)
{
    if (base < 2 || base > 36)
        throw PreconditionError("digits_in_base: base must be in [2, 36]");
    if (x.lo() < 0)
        throw PreconditionError("digits_in_base: negative lower endpoint");

    // a degenerate interval is a single point even if called "open"
    const bool open = upper == UpperEnd::open && !x.is_point();
    auto upper_floor = [open](const BigRat& v) { return open ? floor_below(v) : floor_ratio(v); };

    CertifiedDigits out;
    out.requested = max_digits;

    const BigInt int_lo = floor_ratio(x.lo());
    const BigInt int_hi = upper_floor(x.hi());
    if (int_lo != int_hi)
        return out;
    out.integer_certified = true;
    out.integer_part = int_lo.get_str(static_cast<int>(base));

    BigRat frac_lo = x.lo() - int_lo;
    BigRat frac_hi = x.hi() - int_hi;
    const BigRat b(base);
    out.fraction.reserve(max_digits);
    for (std::size_t i = 0; i < max_digits; ++i) {
        if ((i & 255) == 0)
            check_deadline();
        frac_lo *= b;
        frac_hi *= b;
        const BigInt d_lo = floor_ratio(frac_lo);
        const BigInt d_hi = upper_floor(frac_hi);
        if (d_lo != d_hi)
            break;
        out.fraction.push_back(kDigitChars[d_lo.get_ui()]);
        frac_lo -= d_lo;
        frac_hi -= d_hi;
    }
    return out;
}

CertifiedDigits decimal_prefix(const RatInterval& x, std::size_t digits, UpperEnd upper)
{
    // integer part alone decides how many fractional digits are wanted
    CertifiedDigits head = digits_in_base(x, 10, 0, upper);
    if (!head.integer_certified) {
        head.requested = digits;
        return head;
    }
    const std::size_t int_len = head.integer_part == "0" ? 0 : head.integer_part.size();
    const std::size_t frac = digits > int_len ? digits - int_len : 0;
    return digits_in_base(x, 10, frac, upper);
}

}  // namespace primerep
