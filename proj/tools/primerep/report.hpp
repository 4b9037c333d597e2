#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primerep/bignum.hpp"
#include "primerep/digits.hpp"
#include "primerep/interval.hpp"

namespace primerep::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, usage = 1, resource_cap = 2, check_failed = 3 };

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string lhs;  // exact rational strings
    std::string rhs;
};

Check make_check(std::string name, bool holds, const BigRat& lhs, const BigRat& rhs);

struct RunReport {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;
    std::optional<std::string> certified_digits;
    std::size_t terms_used = 0;
    std::uint64_t max_integer_bits = 0;
    double elapsed_seconds = 0.0;
    ExitCode exit_code = ok;  // not serialized; set for partial results


    bool any_failed() const;
    Json to_json() const;
};

/// {"exact": "p/q", "display_only": "..."}
Json exact(const BigRat& x);
Json exact(const BigInt& x);
Json exact(const RatInterval& x, UpperEnd upper = UpperEnd::closed);
Json digits_json(const CertifiedDigits& d);

std::string render_text(const RunReport& report);

}  // namespace primerep::cli
