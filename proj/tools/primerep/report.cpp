#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace primerep::cli {
namespace {

constexpr std::size_t kTextWidth = 96;

std::string abbreviate(const std::string& s)
{
    if (s.size() <= kTextWidth)
        return s;
    return s.substr(0, 40) + "...(" + std::to_string(s.size()) + " chars; exact value in --json)";
}

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return abbreviate(v.get<std::string>());
    if (v.is_object() && v.contains("exact")) {
        std::string out = abbreviate(v["exact"].get<std::string>());
        if (v.contains("display_only"))
            out += "  (~" + v["display_only"].get<std::string>() + ")";
        return out;
    }
    if (v.is_object() && v.contains("lo") && v.contains("hi"))
        return "[" + scalar_text(v["lo"]) + ", " + scalar_text(v["hi"]) + (v.value("upper", "closed") == "open" ? ")" : "]");
    return abbreviate(v.dump());
}

void render_value(std::ostream& os, const std::string& key, const Json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << pad << key << ":\n";
        for (const auto& row : v) {
            os << pad << "  ";
            bool first = true;
            for (const auto& [k, cell] : row.items()) {
                os << (first ? "" : "  ") << k << "=" << scalar_text(cell);
                first = false;
            }
            os << "\n";
        }
        return;
    }
    if (v.is_object() && !v.contains("exact") && !(v.contains("lo") && v.contains("hi"))) {
        os << pad << key << ":\n";
        for (const auto& [k, child] : v.items())
            render_value(os, k, child, indent + 2);
        return;
    }
    os << pad << key << ": " << scalar_text(v) << "\n";
}

}  // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "skipped";
}

Check make_check(std::string name, bool holds, const BigRat& lhs, const BigRat& rhs)
{
    return Check{std::move(name), holds ? CheckStatus::pass : CheckStatus::fail, primerep::to_string(lhs),
                 primerep::to_string(rhs)};
}

bool RunReport::any_failed() const
{
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

Json RunReport::to_json() const
{
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    j["checks"] = Json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    j["certified_digits"] = certified_digits ? Json(*certified_digits) : Json(nullptr);
    j["resource"] = {{"terms_used", terms_used},
                     {"max_integer_bits", max_integer_bits},
                     {"elapsed_seconds", elapsed_seconds}};
    return j;
}

Json exact(const BigRat& x) { return {{"exact", primerep::to_string(x)}, {"display_only", approx_decimal(x, 16)}}; }

Json exact(const BigInt& x) { return Json(primerep::to_string(x)); }

Json exact(const RatInterval& x, UpperEnd upper)
{
    return {{"lo", exact(x.lo())}, {"hi", exact(x.hi())}, {"upper", upper == UpperEnd::open ? "open" : "closed"}};
}

Json digits_json(const CertifiedDigits& d)
{
    return {{"text", d.text()},
            {"requested_fraction_digits", d.requested},
            {"certified_fraction_digits", d.certified_fraction_digits()},
            {"complete", d.complete()}};
}

std::string render_text(const RunReport& report)
{
    std::ostringstream os;
    os << "command: " << report.command << "\n";
    if (!report.parameters.empty())
        render_value(os, "parameters", report.parameters, 0);
    for (const auto& [k, v] : report.results.items())
        render_value(os, k, v, 0);
    if (!report.checks.empty()) {
        std::size_t passed = 0;
        for (const auto& c : report.checks)
            passed += c.status == CheckStatus::pass ? 1 : 0;
        os << "checks: " << passed << "/" << report.checks.size() << " pass\n";
        for (const auto& c : report.checks) {
            if (c.status == CheckStatus::pass && report.checks.size() > 40)
                continue;
            os << "  [" << to_string(c.status) << "] " << c.name << "  lhs=" << abbreviate(c.lhs)
               << "  rhs=" << abbreviate(c.rhs) << "\n";
        }
    }
    if (report.certified_digits)
        os << "certified digits: " << *report.certified_digits << "\n";
    os << "resource: terms=" << report.terms_used << " max_bits=" << report.max_integer_bits
       << " elapsed=" << report.elapsed_seconds << "s\n";
    return os.str();
}

}  // namespace primerep::cli
