#pragma once

#include <string>

#include "primerep/digits.hpp"
#include "primerep/limits.hpp"

namespace primerep {

/// Requested digits could not be certified within the resource caps. Carries
/// the digits that were certified.
class PrecisionError : public ResourceLimitError {
public:
    PrecisionError(const std::string& what, CertifiedDigits partial)
        : ResourceLimitError(what), partial_(std::move(partial))
    {
    }

    const CertifiedDigits& partial() const noexcept { return partial_; }

private:
    CertifiedDigits partial_;
};

}  // namespace primerep
