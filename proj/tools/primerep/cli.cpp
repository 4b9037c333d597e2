#include "cli.hpp"

#include <chrono>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "primerep/classic.hpp"
#include "primerep/limits.hpp"

namespace primerep::cli {
namespace {

class DeadlineGuard {
public:
    explicit DeadlineGuard(std::optional<double> seconds)
    {
        if (seconds) {
            const auto span = std::chrono::duration<double>(*seconds);
            set_deadline(std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(span));
        }
    }
    ~DeadlineGuard() { set_deadline(std::nullopt); }
    DeadlineGuard(const DeadlineGuard&) = delete;
    DeadlineGuard& operator=(const DeadlineGuard&) = delete;
};

RunReport error_report(const std::string& command, const std::string& spec, const std::string& message)
{
    RunReport r;
    r.command = command;
    r.parameters["spec"] = spec;
    r.results["error"] = message;
    return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prime-representing constants: construction, extraction, verification, diagnostics", "primerep"};
    Options opt;
    bool json = false;
    std::optional<std::uint64_t> max_bits;
    std::optional<std::uint64_t> max_terms;
    std::optional<double> timeout;
    std::string j_text, n_text;

    app.add_option("command", opt.command, "compute | extract | verify | diagnose")
        ->required()
        ->check(CLI::IsMember({"compute", "extract", "verify", "diagnose"}));
    app.add_option("spec", opt.spec,
                   "constant spec (weight string, mills, wright[:largest|:smallest], buenos-aires) or verify suite")
        ->required();
    app.add_option("--digits", opt.digits, "decimal digits to certify");
    app.add_option("--count", opt.count, "number of primes or tower levels to extract");
    app.add_option("--terms", opt.terms, "initial series length");
    app.add_option("--depth", opt.depth, "tower depth or lemma tail depth");
    app.add_option("--K", opt.K, "Bertrand check length");
    app.add_option("--j", j_text, "index range A..B");
    app.add_option("--n", n_text, "degree or index range A..B");
    app.add_option("--a", opt.a, "base list")->delimiter(',');
    app.add_option("--m", opt.m, "exponent list")->delimiter(',');
    app.add_option("--r", opt.r, "Bertrand ratio list (2, 4)")->delimiter(',');
    app.add_option("--weight", opt.weight, "weight spec for verify lemma");
    app.add_flag("--json", json, "emit a JSON RunReport");
    app.add_flag("--allow-slow", opt.allow_slow, "permit Wright depth >= 4");
    app.add_option("--max-bits", max_bits, "cap on integer bit length")->envname("PRIMEREP_MAX_BITS");
    app.add_option("--max-terms", max_terms, "cap on auto-grown series length");
    app.add_option("--timeout-secs", timeout, "wall-clock limit")->envname("PRIMEREP_TIMEOUT_SECS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    ResourceLimits limits = current_limits();
    if (max_bits)
        limits.max_bits = *max_bits;
    if (max_terms)
        limits.max_terms = *max_terms;
    ScopedLimits scoped(limits);
    DeadlineGuard deadline(timeout);
    reset_high_water_bits();

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    int code = ok;
    try {
        if (!j_text.empty())
            opt.j = parse_range(j_text);
        if (!n_text.empty())
            opt.n = parse_range(n_text);
        if (opt.command == "compute")
            report = cmd_compute(opt);
        else if (opt.command == "extract")
            report = cmd_extract(opt);
        else if (opt.command == "verify")
            report = cmd_verify(opt);
        else
            report = cmd_diagnose(opt);
        code = report.exit_code != ok ? report.exit_code : (report.any_failed() ? check_failed : ok);
    } catch (const ResourceLimitError& e) {
        report = error_report(opt.command, opt.spec, e.what());
        code = resource_cap;
    } catch (const TowerBreakError& e) {
        report = error_report(opt.command, opt.spec, e.what());
        code = check_failed;
    } catch (const std::invalid_argument& e) {
        report = error_report(opt.command, opt.spec, e.what());
        code = usage;
    } catch (const std::domain_error& e) {
        report = error_report(opt.command, opt.spec, e.what());
        code = usage;
    }
    report.max_integer_bits = high_water_bits();
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (json)
        out << report.to_json().dump(2) << "\n";
    else
        out << render_text(report);
    if (code != ok && report.results.contains("error"))
        err << "primerep: " << report.results["error"].get<std::string>() << "\n";
    return code;
}

}  // namespace primerep::cli
