#include "commands.hpp"

#include <algorithm>
#include <charconv>

#include "primerep/classic.hpp"
#include "primerep/diagnostics.hpp"
#include "primerep/limits.hpp"
#include "primerep/series.hpp"
#include "primerep/weight.hpp"

namespace primerep::cli {

using primerep::to_string;

namespace {

enum class SpecKind { series, mills, wright, buenos_aires };

struct Spec {
    SpecKind kind = SpecKind::series;
    std::optional<WeightFunction> weight;
    WrightVariant variant = WrightVariant::largest;
};

Spec parse_spec(const std::string& text)
{
    Spec s;
    if (text == "mills") {
        s.kind = SpecKind::mills;
    } else if (text == "wright" || text == "wright:largest") {
        s.kind = SpecKind::wright;
    } else if (text == "wright:smallest") {
        s.kind = SpecKind::wright;
        s.variant = WrightVariant::smallest;
    } else if (text == "buenos-aires") {
        s.kind = SpecKind::buenos_aires;
    } else {
        s.weight = parse_weight(text);
    }
    return s;
}

std::size_t parse_index(const std::string& text)
{
    std::size_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw PreconditionError("expected a non-negative integer, got '" + text + "'");
    return v;
}

Json range_json(const IndexRange& r) { return std::to_string(r.first) + ".." + std::to_string(r.last); }

template <typename T>
Json list_json(const std::vector<T>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x);
    return out;
}

Json tower_json(const std::vector<BigInt>& values)
{
    Json out = Json::array();
    for (std::size_t k = 0; k < values.size(); ++k)
        out.push_back({{"k", k + 1}, {"value", exact(values[k])}, {"decimal_digits", to_string(values[k]).size()}});
    return out;
}

std::string opt_string(const std::optional<BigInt>& v) { return v ? to_string(*v) : "n/a"; }

void add_floor_rows(RunReport& report, const std::vector<TowerFloorRow>& rows, const std::string& label)
{
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back({{"k", row.k},
                       {"expected", exact(row.expected)},
                       {"floor_lo", opt_string(row.floor_lo)},
                       {"floor_hi", opt_string(row.floor_hi)},
                       {"match", row.pass}});
        report.checks.push_back(Check{label + " k=" + std::to_string(row.k),
                                      row.pass ? CheckStatus::pass : CheckStatus::fail,
                                      opt_string(row.floor_lo) + ".." + opt_string(row.floor_hi),
                                      to_string(row.expected)});
    }
    report.results[label] = std::move(out);
}

void record_partial(RunReport& report, const PrecisionError& e)
{
    report.exit_code = resource_cap;
    report.results["error"] = e.what();
    report.results["digits"] = digits_json(e.partial());
    report.certified_digits = e.partial().text();
}

// ---- compute ---------------------------------------------------------------

void compute_series(RunReport& report, const WeightFunction& w, const Options& opt, PrimeSource& src)
{
    const std::size_t digits = opt.digits.value_or(20);
    const std::size_t initial = opt.terms.value_or(1);
    report.parameters["weight"] = w.name();
    report.parameters["digits"] = digits;
    report.parameters["initial_terms"] = initial;
    try {
        const SeriesDigits sd = certify_series_digits(w, digits, src, initial);
        report.terms_used = sd.terms;
        report.results["terms"] = sd.terms;
        report.results["weight_validated"] = weight_validate(w, std::max<std::size_t>(sd.terms, 2)).passed();
        report.results["enclosure"] = exact(sd.enclosure);
        report.results["digits"] = digits_json(sd.digits);
        report.certified_digits = sd.digits.text();
    } catch (const PrecisionError& e) {
        record_partial(report, e);
    }
}

void compute_mills(RunReport& report, const Options& opt)
{
    const std::size_t digits = opt.digits.value_or(11);
    const std::size_t max_depth = opt.depth.value_or(kDefaultMaxMillsDepth);
    report.parameters["digits"] = digits;
    report.parameters["max_depth"] = max_depth;
    MillsState state = mills_sequence(1);
    try {
        const ThetaDigits td = mills_theta(state, digits, max_depth);
        report.results["depth"] = td.depth;
        report.results["enclosure"] = exact(td.enclosure.interval, td.enclosure.upper);
        report.results["digits"] = digits_json(td.digits);
        report.certified_digits = td.digits.text();
    } catch (const PrecisionError& e) {
        record_partial(report, e);
        report.results["depth"] = state.depth();
        report.results["enclosure"] = exact(state.theta.interval, state.theta.upper);
    }
    report.results["tower"] = tower_json(state.primes);
    report.terms_used = state.depth();
}

void compute_wright(RunReport& report, WrightVariant variant, const Options& opt)
{
    const std::size_t digits = opt.digits.value_or(6);
    const std::size_t depth = opt.depth.value_or(3);
    report.parameters["variant"] = to_string(variant);
    report.parameters["digits"] = digits;
    report.parameters["depth"] = depth;
    report.parameters["allow_slow"] = opt.allow_slow;
    const WrightState state = wright_sequence(variant, depth, opt.allow_slow);
    report.results["tower"] = tower_json(state.primes);
    report.results["enclosure"] = exact(state.alpha.interval, state.alpha.upper);
    report.terms_used = state.depth();
    try {
        const CertifiedDigits d = wright_alpha(state, digits);
        report.results["digits"] = digits_json(d);
        report.certified_digits = d.text();
    } catch (const PrecisionError& e) {
        record_partial(report, e);
    }
}

void compute_buenos_aires(RunReport& report, const Options& opt, PrimeSource& src)
{
    const std::size_t digits = opt.digits.value_or(13);
    const std::size_t initial = opt.terms.value_or(8);
    report.parameters["digits"] = digits;
    report.parameters["initial_terms"] = initial;
    try {
        const LambdaDigits ld = buenos_aires_digits(digits, src, initial);
        report.terms_used = ld.state.terms;
        report.results["terms"] = ld.state.terms;
        report.results["enclosure"] = exact(ld.state.enclosure);
        report.results["digits"] = digits_json(ld.digits);
        report.certified_digits = ld.digits.text();
    } catch (const PrecisionError& e) {
        record_partial(report, e);
    }
}

// ---- verify ----------------------------------------------------------------

void verify_lemma(RunReport& report, const Options& opt, PrimeSource& src)
{
    const WeightFunction w = parse_weight(opt.weight.value_or("factorial-tower:2"));
    const IndexRange n = opt.n.value_or(IndexRange{1, 5});
    const std::size_t depth = opt.depth.value_or(kDefaultTailDepth);
    report.parameters["weight"] = w.name();
    report.parameters["n"] = range_json(n);
    report.parameters["depth"] = depth;
    Json rows = Json::array();
    for (std::size_t i = std::max<std::size_t>(n.first, 1); i <= n.last; ++i) {
        if (!lemma_tail_applies(w, i, depth)) {
            rows.push_back({{"n", i}, {"skipped", "growth hypothesis fails for some k > n"}});
            report.checks.push_back(Check{"tail < 1/2 + 2^-(n+4) n=" + std::to_string(i), CheckStatus::skipped,
                                          "", ""});
            continue;
        }
        const TailReport t = lemma_tail_check(w, i, depth, src);
        rows.push_back({{"n", i},
                        {"truncated_tail", exact(t.truncated_tail)},
                        {"remainder_bound", exact(t.remainder_bound)},
                        {"total", exact(t.total)},
                        {"half_bound", exact(t.half_bound)}});
        const std::string tag = " n=" + std::to_string(i);
        report.checks.push_back(make_check("tail < 1/2 + 2^-(n+4)" + tag, t.below_half_bound(), t.total, t.half_bound));
        report.checks.push_back(make_check("tail < 1" + tag, t.below_one(), t.total, BigRat(1)));
        report.terms_used = std::max(report.terms_used, i + depth);
    }
    report.results["rows"] = std::move(rows);
}

void verify_liouville(RunReport& report, const Options& opt, PrimeSource& src)
{
    const std::vector<unsigned long> as = opt.a.empty() ? std::vector<unsigned long>{2, 3, 10} : opt.a;
    const IndexRange n = opt.n.value_or(IndexRange{2, 4});
    const IndexRange j = opt.j.value_or(IndexRange{1, 3});
    report.parameters["a"] = list_json(as);
    report.parameters["n"] = range_json(n);
    report.parameters["j"] = range_json(j);
    Json grid = Json::array();
    for (unsigned long a : as) {
        for (std::size_t deg = n.first; deg <= n.last; ++deg) {
            const LiouvilleReport lr = liouville_check(a, deg, j.last, src);
            Json rows = Json::array();
            for (const auto& row : lr.rows) {
                if (row.approx.j < j.first)
                    continue;
                const std::string tag = " a=" + std::to_string(a) + " n=" + std::to_string(deg) +
                                        " j=" + std::to_string(row.approx.j);
                rows.push_back({{"j", row.approx.j},
                                {"s_bits", bit_length(row.approx.s)},
                                {"gap_hi", exact(row.approx.gap_hi)},
                                {"scaled_gap", exact(row.scaled_gap)},
                                {"constant_bound", exact(row.constant_bound.rhs)}});
                report.checks.push_back(make_check("(i) " + row.tail_bound.name + tag, row.tail_bound.holds,
                                                   row.tail_bound.lhs, row.tail_bound.rhs));
                report.checks.push_back(make_check("(ii) " + row.constant_bound.name + tag,
                                                   row.constant_bound.holds, row.constant_bound.lhs,
                                                   row.constant_bound.rhs));
                report.terms_used = std::max(report.terms_used, row.approx.truncation_index + 1);
            }
            grid.push_back({{"a", a}, {"n", deg}, {"constant_sup", exact(lr.constant_sup)}, {"rows", rows}});
        }
    }
    report.results["grid"] = std::move(grid);
}

void verify_roth(RunReport& report, const Options& opt, PrimeSource& src)
{
    const std::vector<unsigned long> as = opt.a.empty() ? std::vector<unsigned long>{2, 3} : opt.a;
    const std::vector<unsigned long> ms = opt.m.empty() ? std::vector<unsigned long>{3, 4} : opt.m;
    const IndexRange j = opt.j.value_or(IndexRange{2, 6});
    report.parameters["a"] = list_json(as);
    report.parameters["m"] = list_json(ms);
    report.parameters["j"] = range_json(j);
    Json grid = Json::array();
    for (unsigned long a : as) {
        for (unsigned long m : ms) {
            const RothReport rr = roth_check(a, m, j.last, src);
            Json rows = Json::array();
            for (const auto& row : rr.rows) {
                if (row.approx.j < j.first)
                    continue;
                const std::string tag =
                    " a=" + std::to_string(a) + " m=" + std::to_string(m) + " j=" + std::to_string(row.approx.j);
                rows.push_back({{"j", row.approx.j},
                                {"s_bits", bit_length(row.approx.s)},
                                {"gap_hi", exact(row.approx.gap_hi)},
                                {"s_ge_a_pow_2jm", row.denominator_condition.holds},
                                {"informational", "s >= a^(2jm) is reported, not required"}});
                report.checks.push_back(make_check("(ii) " + row.geometric_bound.name + tag,
                                                   row.geometric_bound.holds, row.geometric_bound.lhs,
                                                   row.geometric_bound.rhs));
                report.checks.push_back(make_check("(iii) " + row.roth_bound.name + tag, row.roth_bound.holds,
                                                   row.roth_bound.lhs, row.roth_bound.rhs));
                report.terms_used = std::max(report.terms_used, row.approx.truncation_index + 1);
            }
            grid.push_back({{"a", a}, {"m", m}, {"rows", rows}});
        }
    }
    report.results["grid"] = std::move(grid);
}

void verify_bertrand(RunReport& report, const Options& opt, PrimeSource& src)
{
    const std::size_t K = opt.K.value_or(10000);
    const std::vector<unsigned> rs = opt.r.empty() ? std::vector<unsigned>{2, 4} : opt.r;
    report.parameters["K"] = K;
    report.parameters["r"] = list_json(rs);
    Json rows = Json::array();
    for (unsigned r : rs) {
        const BertrandReport br = bertrand_bound_check(src, K, r);
        rows.push_back({{"check", "p_k <= " + std::to_string(r) + "^k"},
                        {"checked", br.checked},
                        {"first_violation", br.first_violation ? Json(*br.first_violation) : Json(nullptr)}});
        report.checks.push_back(make_check("p_k <= " + std::to_string(r) + "^k for k <= " + std::to_string(K),
                                           br.passed(), BigRat(br.checked), BigRat(K)));
    }
    const GapReport gr = bertrand_gap_check(src, K);
    rows.push_back({{"check", "p_{k+1} - p_k < p_k"},
                    {"checked", gr.checked},
                    {"first_violation", gr.first_violation ? Json(*gr.first_violation) : Json(nullptr)}});
    report.checks.push_back(make_check("p_{k+1} - p_k < p_k for k < " + std::to_string(K), gr.passed(),
                                       BigRat(gr.checked), BigRat(K - 1)));
    report.results["rows"] = std::move(rows);
    report.terms_used = K;
}

void verify_towers(RunReport& report, const Options& opt)
{
    const std::size_t mills_depth = opt.depth.value_or(5);
    const std::size_t wright_depth = opt.allow_slow ? 4 : 3;
    report.parameters["mills_depth"] = mills_depth;
    report.parameters["wright_depth"] = wright_depth;
    report.parameters["allow_slow"] = opt.allow_slow;
    const MillsState mills = mills_sequence(mills_depth);
    add_floor_rows(report, mills_forward_check(mills), "mills");
    for (WrightVariant v : {WrightVariant::largest, WrightVariant::smallest}) {
        const WrightState w = wright_sequence(v, wright_depth, opt.allow_slow);
        add_floor_rows(report, wright_tower_floors(w), "wright:" + to_string(v));
    }
    report.terms_used = std::max(mills_depth, wright_depth);
}

}  // namespace

IndexRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    IndexRange r;
    if (dots == std::string::npos) {
        r.first = r.last = parse_index(text);
    } else {
        r.first = parse_index(text.substr(0, dots));
        r.last = parse_index(text.substr(dots + 2));
    }
    if (r.last < r.first)
        throw PreconditionError("empty range '" + text + "'");
    return r;
}

RunReport cmd_compute(const Options& opt)
{
    RunReport report;
    report.command = "compute";
    report.parameters["spec"] = opt.spec;
    const Spec spec = parse_spec(opt.spec);
    PrimeSource src;
    switch (spec.kind) {
    case SpecKind::series:
        compute_series(report, *spec.weight, opt, src);
        break;
    case SpecKind::mills:
        compute_mills(report, opt);
        break;
    case SpecKind::wright:
        compute_wright(report, spec.variant, opt);
        break;
    case SpecKind::buenos_aires:
        compute_buenos_aires(report, opt, src);
        break;
    }
    return report;
}

RunReport cmd_extract(const Options& opt)
{
    RunReport report;
    report.command = "extract";
    report.parameters["spec"] = opt.spec;
    const Spec spec = parse_spec(opt.spec);
    PrimeSource src;
    switch (spec.kind) {
    case SpecKind::series: {
        const std::size_t N = opt.count.value_or(10);
        const std::size_t K = std::max(N, opt.terms.value_or(N));
        report.parameters["weight"] = spec.weight->name();
        report.parameters["count"] = N;
        report.parameters["terms"] = K;
        const SeriesConstant c = build_constant(*spec.weight, K, src);
        const ExtractionReport er = extract_all(c, N, src);
        Json rows = Json::array();
        for (const auto& row : er.rows) {
            rows.push_back({{"n", row.n}, {"extracted", exact(row.extracted)}, {"expected", exact(row.expected)},
                            {"match", row.match}});
            report.checks.push_back(make_check("p_" + std::to_string(row.n) + " extracted", row.match,
                                               BigRat(row.extracted), BigRat(row.expected)));
        }
        report.results["weight_validated"] = er.weight_validated;
        report.results["rows"] = std::move(rows);
        report.terms_used = K;
        break;
    }
    case SpecKind::buenos_aires: {
        const std::size_t N = opt.count.value_or(5);
        const std::size_t K = opt.terms.value_or(std::max<std::size_t>(8, 2 * N));
        report.parameters["count"] = N;
        report.parameters["initial_terms"] = K;
        const BuenosAiresExtraction ex = buenos_aires_extract(buenos_aires_lambda(K, src), N, src);
        Json rows = Json::array();
        for (const auto& row : ex.rows) {
            rows.push_back(
                {{"n", row.n}, {"extracted", exact(row.floor)}, {"expected", exact(row.expected)}, {"match", row.match}});
            report.checks.push_back(make_check("floor(lambda_" + std::to_string(row.n) + ")", row.match,
                                               BigRat(row.floor), BigRat(row.expected)));
        }
        report.results["rows"] = std::move(rows);
        report.results["enclosure"] = exact(ex.state.enclosure);
        report.terms_used = ex.state.terms;
        break;
    }
    case SpecKind::mills: {
        const std::size_t depth = opt.count.value_or(5);
        report.parameters["count"] = depth;
        const MillsState state = mills_sequence(depth);
        report.results["enclosure"] = exact(state.theta.interval, state.theta.upper);
        add_floor_rows(report, mills_forward_check(state), "rows");
        report.terms_used = depth;
        break;
    }
    case SpecKind::wright: {
        const std::size_t depth = opt.count.value_or(3);
        report.parameters["variant"] = to_string(spec.variant);
        report.parameters["count"] = depth;
        report.parameters["allow_slow"] = opt.allow_slow;
        const WrightState state = wright_sequence(spec.variant, depth, opt.allow_slow);
        report.results["tower"] = tower_json(state.primes);
        add_floor_rows(report, wright_tower_floors(state), "rows");
        report.terms_used = depth;
        break;
    }
    }
    return report;
}

RunReport cmd_verify(const Options& opt)
{
    RunReport report;
    report.command = "verify";
    report.parameters["suite"] = opt.spec;
    PrimeSource src;
    if (opt.spec == "lemma")
        verify_lemma(report, opt, src);
    else if (opt.spec == "liouville")
        verify_liouville(report, opt, src);
    else if (opt.spec == "roth")
        verify_roth(report, opt, src);
    else if (opt.spec == "bertrand")
        verify_bertrand(report, opt, src);
    else if (opt.spec == "towers")
        verify_towers(report, opt);
    else
        throw PreconditionError("unknown verify suite '" + opt.spec +
                                "' (expected lemma, liouville, roth, bertrand or towers)");
    return report;
}

RunReport cmd_diagnose(const Options& opt)
{
    RunReport report;
    report.command = "diagnose";
    report.parameters["spec"] = opt.spec;
    const Spec spec = parse_spec(opt.spec);
    if (spec.kind != SpecKind::series)
        throw PreconditionError("diagnose takes a series weight spec");
    const WeightFunction& w = *spec.weight;
    const bool factorial = w.family() == WeightFamily::factorial_tower;
    const bool exp_tower = w.family() == WeightFamily::exp_tower;
    std::optional<std::size_t> degree;
    if (factorial)
        degree = opt.n ? opt.n->first : 2;
    const IndexRange j = opt.j.value_or(exp_tower ? IndexRange{2, 5} : IndexRange{1, 3});
    report.parameters["weight"] = w.name();
    if (degree)
        report.parameters["n"] = *degree;
    report.parameters["j"] = range_json(j);

    PrimeSource src;
    Json rows = Json::array();
    std::vector<ExponentEstimate> estimates;
    for (std::size_t jj = j.first; jj <= j.last; ++jj) {
        check_deadline();
        const Approximant ap = truncation_approximant(w, degree, jj, src);
        const ExponentEstimate e = exponent_bracket(ap);
        rows.push_back({{"j", jj},
                        {"truncation_index", ap.truncation_index},
                        {"s_bits", bit_length(ap.s)},
                        {"gap_lo", exact(ap.gap_lo)},
                        {"gap_hi", exact(ap.gap_hi)},
                        {"exponent_lo", exact(e.lo)},
                        {"exponent_hi", exact(e.hi)}});
        estimates.push_back(e);
        report.terms_used = std::max(report.terms_used, ap.truncation_index + 1);
    }
    if (factorial) {
        for (std::size_t i = 1; i < estimates.size(); ++i) {
            const auto& prev = estimates[i - 1];
            const auto& cur = estimates[i];
            report.checks.push_back(make_check("e_" + std::to_string(cur.j) + " > e_" + std::to_string(prev.j),
                                               cur.lo > prev.hi, cur.lo, prev.hi));
        }
    }
    if (exp_tower) {
        const BigRat m(static_cast<long>(w.m()));
        for (const auto& e : estimates) {
            if (e.j < 2)
                continue;
            const std::string tag = "e_" + std::to_string(e.j);
            report.checks.push_back(make_check(tag + " >= m - 3/4", e.lo >= m - BigRat(3, 4), e.lo, m - BigRat(3, 4)));
            report.checks.push_back(make_check(tag + " <= m + 1/2", e.hi <= m + BigRat(1, 2), e.hi, m + BigRat(1, 2)));
        }
    }
    report.results["rows"] = std::move(rows);
    return report;
}

}  // namespace primerep::cli
