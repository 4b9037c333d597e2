#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace primerep::cli {

struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

/// "A..B" or "A".
IndexRange parse_range(const std::string& text);

struct Options {
    std::string command;
    std::string spec;
    std::optional<std::size_t> digits;
    std::optional<std::size_t> count;
    std::optional<std::size_t> terms;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> K;
    std::optional<IndexRange> j;
    std::optional<IndexRange> n;
    std::vector<unsigned long> a;
    std::vector<unsigned long> m;
    std::vector<unsigned> r;
    std::optional<std::string> weight;
    bool allow_slow = false;
};

RunReport cmd_compute(const Options& opt);
RunReport cmd_extract(const Options& opt);
RunReport cmd_verify(const Options& opt);
RunReport cmd_diagnose(const Options& opt);

}  // namespace primerep::cli
