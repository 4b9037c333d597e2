#include "primerep/weight.hpp"

#include <fstream>
#include <sstream>

#include "primerep/limits.hpp"

namespace primerep {
namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

unsigned long parse_param(const std::string& text, std::string_view spec)
{
    const BigInt v = parse_bigint(text);
    if (v < 0 || !v.fits_ulong_p())
        throw PreconditionError("bad parameter '" + text + "' in weight '" + std::string(spec) + "'");
    return v.get_ui();
}

}  // namespace

WeightFunction WeightFunction::power_square(unsigned long r)
{
    if (r < 2)
        throw PreconditionError("power-square weight needs r >= 2");
    WeightFunction w;
    w.family_ = WeightFamily::power_square;
    w.a_ = r;
    return w;
}

WeightFunction WeightFunction::double_exp()
{
    WeightFunction w;
    w.family_ = WeightFamily::double_exp;
    w.a_ = 10;
    return w;
}

WeightFunction WeightFunction::factorial_tower(unsigned long a)
{
    if (a < 2)
        throw PreconditionError("factorial-tower weight needs a >= 2");
    WeightFunction w;
    w.family_ = WeightFamily::factorial_tower;
    w.a_ = a;
    return w;
}

WeightFunction WeightFunction::exp_tower(unsigned long a, unsigned long m)
{
    if (a < 2)
        throw PreconditionError("exp-tower weight needs a >= 2");
    if (m < 3)
        throw PreconditionError("exp-tower weight needs m >= 3");
    WeightFunction w;
    w.family_ = WeightFamily::exp_tower;
    w.a_ = a;
    w.m_ = m;
    return w;
}

WeightFunction WeightFunction::minimal()
{
    WeightFunction w;
    w.family_ = WeightFamily::minimal;
    w.a_ = 2;
    return w;
}

WeightFunction WeightFunction::custom(std::vector<BigInt> values)
{
    if (values.empty())
        throw PreconditionError("custom weight table is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] <= 0)
            throw PreconditionError("custom weight values must be positive");
        if (i > 0 && values[i] <= values[i - 1])
            throw PreconditionError("custom weight values must be strictly ascending");
    }
    WeightFunction w;
    w.family_ = WeightFamily::custom;
    w.table_ = std::move(values);
    return w;
}

std::string WeightFunction::name() const
{
    switch (family_) {
    case WeightFamily::power_square:
        return "power-square:" + std::to_string(a_);
    case WeightFamily::double_exp:
        return "double-exp";
    case WeightFamily::factorial_tower:
        return "factorial-tower:" + std::to_string(a_);
    case WeightFamily::exp_tower:
        return "exp-tower:" + std::to_string(a_) + ":" + std::to_string(m_);
    case WeightFamily::minimal:
        return "minimal";
    case WeightFamily::custom:
        return "custom[" + std::to_string(table_.size()) + "]";
    }
    return "unknown";
}

BigInt WeightFunction::radix() const
{
    if (!has_radix_form())
        throw PreconditionError("custom weights have no radix form");
    return BigInt(a_);
}

BigInt WeightFunction::exponent(std::size_t k) const
{
    if (k == 0)
        throw PreconditionError("weight index is 1-based");
    const BigInt kk(static_cast<unsigned long>(k));
    switch (family_) {
    case WeightFamily::power_square:
        return kk * kk;
    case WeightFamily::double_exp:
        return BigInt(1) << static_cast<mp_bitcnt_t>(k);
    case WeightFamily::factorial_tower:
        return kk + factorial(k);
    case WeightFamily::exp_tower: {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), m_, static_cast<unsigned long>(k));
        return kk + p;
    }
    case WeightFamily::minimal:
        return k == 1 ? BigInt(0) : BigInt((kk + 1) * (kk + 2) / 2 - 3);
    case WeightFamily::custom:
        break;
    }
    throw PreconditionError("custom weights have no radix form");
}

std::optional<std::size_t> WeightFunction::max_index() const
{
    if (family_ == WeightFamily::custom)
        return table_.size();
    return std::nullopt;
}

BigInt weight_eval(const WeightFunction& w, std::size_t k)
{
    if (k == 0)
        throw PreconditionError("weight index is 1-based");
    if (!w.has_radix_form()) {
        if (k > w.table().size())
            throw PreconditionError("custom weight index " + std::to_string(k) + " beyond table length");
        return w.table()[k - 1];
    }
    return ipow(w.radix(), w.exponent(k));
}

BigInt ratio_exponent(const WeightFunction& w, std::size_t n)
{
    if (n < 2)
        throw PreconditionError("ratio_exponent needs n >= 2");
    return w.exponent(n) - w.exponent(n - 1);
}

BigRat weight_quotient(const WeightFunction& w, std::size_t k, std::size_t j)
{
    if (!w.has_radix_form())
        return make_rat(weight_eval(w, k), weight_eval(w, j));
    const BigInt d = w.exponent(k) - w.exponent(j);
    if (d >= 0)
        return BigRat(ipow(w.radix(), d));
    return make_rat(1, ipow(w.radix(), -d));
}

WeightReport weight_validate(const WeightFunction& w, std::size_t K)
{
    if (K < 2)
        throw PreconditionError("weight_validate needs K >= 2");
    if (auto cap = w.max_index(); cap && K > *cap)
        throw PreconditionError("weight_validate: K exceeds custom table length");
    WeightReport report{w.name(), K, {}};
    for (std::size_t k = 2; k <= K; ++k) {
        bool divides = false;
        bool grows = false;
        if (w.has_radix_form()) {
            const BigInt d = ratio_exponent(w, k);
            divides = d >= 0;
            if (d >= static_cast<unsigned long>(k + 1))
                grows = true;
            else if (d >= 0)
                grows = ipow(w.radix(), d) >= (BigInt(1) << static_cast<mp_bitcnt_t>(k + 1));
        } else {
            const BigInt& prev = w.table()[k - 2];
            const BigInt& cur = w.table()[k - 1];
            divides = mpz_divisible_p(cur.get_mpz_t(), prev.get_mpz_t()) != 0;
            grows = cur >= (prev << static_cast<mp_bitcnt_t>(k + 1));
        }
        if (!grows)
            report.violations.push_back({k, "growth"});
        if (!divides)
            report.violations.push_back({k, "divisibility"});
    }
    return report;
}

WeightFunction parse_weight(std::string_view spec)
{
    if (spec.rfind("custom:@", 0) == 0) {
        const std::string path(spec.substr(8));
        std::ifstream in(path);
        if (!in)
            throw PreconditionError("cannot open custom weight file '" + path + "'");
        std::vector<BigInt> values;
        std::string tok;
        while (in >> tok)
            values.push_back(parse_bigint(tok));
        return WeightFunction::custom(std::move(values));
    }
    const auto parts = split(spec, ':');
    const std::string& head = parts[0];
    if (head == "double-exp" && parts.size() == 1)
        return WeightFunction::double_exp();
    if (head == "minimal" && parts.size() == 1)
        return WeightFunction::minimal();
    if (head == "power-square" && parts.size() == 2)
        return WeightFunction::power_square(parse_param(parts[1], spec));
    if (head == "factorial-tower" && parts.size() == 2)
        return WeightFunction::factorial_tower(parse_param(parts[1], spec));
    if (head == "exp-tower" && parts.size() == 3)
        return WeightFunction::exp_tower(parse_param(parts[1], spec), parse_param(parts[2], spec));
    throw PreconditionError("unknown weight spec '" + std::string(spec) + "'");
}

}  // namespace primerep
