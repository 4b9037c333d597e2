#pragma once

#include <cstddef>
#include <string>

#include "primerep/interval.hpp"

namespace primerep {

/// Whether the upper endpoint of an enclosure belongs to the set it describes.
/// Open is only sound when the endpoint is the exact (excluded) supremum.
enum class UpperEnd { closed, open };

/// Base-`base` digits shared by every real in an enclosure.
struct CertifiedDigits {
    std::string integer_part;      // empty when even the integer part is ambiguous
    std::string fraction;          // certified fractional digits
    std::size_t requested = 0;     // fractional digits asked for
    bool integer_certified = false;

    bool complete() const { return integer_certified && fraction.size() >= requested; }
    std::size_t certified_fraction_digits() const { return fraction.size(); }

    /// "int.frac", "int" when no fraction was requested or certified, "" if nothing is certified.
    std::string text() const;
};

/// Integer part plus the longest common prefix (at most max_digits) of the
/// expansions of every real in x. Fewer digits than requested is reported
/// through complete(), not as an error. Requires x.lo >= 0 and base in [2, 36].
CertifiedDigits digits_in_base(const RatInterval& x, unsigned base, std::size_t max_digits,
                               UpperEnd upper = UpperEnd::closed);

/// Decimal rendering with `digits` digit characters in total, where a lone
/// leading "0" integer part is not counted ("2.920050977316" is 13 digits,
/// "0.0203" is 4).
CertifiedDigits decimal_prefix(const RatInterval& x, std::size_t digits, UpperEnd upper = UpperEnd::closed);

}  // namespace primerep
