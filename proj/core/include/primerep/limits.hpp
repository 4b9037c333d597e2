#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace primerep {

/// Raised when a computation would exceed a configured resource cap
/// (integer bit size, sieve size, term count or wall-clock deadline).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ResourceLimits {
    std::uint64_t max_bits = std::uint64_t{1} << 26;          // per integer
    std::uint64_t max_sieve_limit = std::uint64_t{1} << 31;   // sieve upper bound
    std::uint64_t max_terms = 4096;                           // auto-grown series length
};

ResourceLimits current_limits();
void set_limits(const ResourceLimits& limits);

/// Wall-clock deadline shared by every long-running loop. Empty means none.
void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline);
void check_deadline();

/// Throws ResourceLimitError if an integer of `bits` bits would exceed the cap.
void check_bits(std::uint64_t bits, std::string_view what);

/// High-water mark of integer sizes produced by the kernel, for reporting.
void note_bits(std::uint64_t bits);
std::uint64_t high_water_bits();
void reset_high_water_bits();

/// Restores the previous limits on scope exit.
class ScopedLimits {
public:
    explicit ScopedLimits(const ResourceLimits& limits) : saved_(current_limits()) { set_limits(limits); }
    ~ScopedLimits() { set_limits(saved_); }
    ScopedLimits(const ScopedLimits&) = delete;
    ScopedLimits& operator=(const ScopedLimits&) = delete;

private:
    ResourceLimits saved_;
};

}  // namespace primerep
