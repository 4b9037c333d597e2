#include "primerep/limits.hpp"

#include <atomic>
#include <mutex>

namespace primerep {
namespace {

std::atomic<std::uint64_t> g_max_bits{ResourceLimits{}.max_bits};
std::atomic<std::uint64_t> g_max_sieve{ResourceLimits{}.max_sieve_limit};
std::atomic<std::uint64_t> g_max_terms{ResourceLimits{}.max_terms};
std::atomic<std::uint64_t> g_high_water{0};

std::mutex g_deadline_mutex;
std::optional<std::chrono::steady_clock::time_point> g_deadline;
std::atomic<bool> g_has_deadline{false};

}  // namespace

ResourceLimits current_limits()
{
    return ResourceLimits{g_max_bits.load(), g_max_sieve.load(), g_max_terms.load()};
}

void set_limits(const ResourceLimits& limits)
{
    g_max_bits = limits.max_bits;
    g_max_sieve = limits.max_sieve_limit;
    g_max_terms = limits.max_terms;
}

void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline)
{
    std::lock_guard lock(g_deadline_mutex);
    g_deadline = deadline;
    g_has_deadline = deadline.has_value();
}

void check_deadline()
{
    if (!g_has_deadline.load(std::memory_order_relaxed))
        return;
    std::lock_guard lock(g_deadline_mutex);
    if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
        throw ResourceLimitError("wall-clock deadline exceeded");
}

void check_bits(std::uint64_t bits, std::string_view what)
{
    const auto cap = g_max_bits.load();
    if (bits > cap) {
        throw ResourceLimitError(std::string(what) + " needs " + std::to_string(bits) +
                                 " bits, cap is " + std::to_string(cap));
    }
}

void note_bits(std::uint64_t bits)
{
    auto seen = g_high_water.load(std::memory_order_relaxed);
    while (bits > seen && !g_high_water.compare_exchange_weak(seen, bits)) {
    }
}

std::uint64_t high_water_bits() { return g_high_water.load(); }

void reset_high_water_bits() { g_high_water = 0; }

}  // namespace primerep
