#include "primerep/interval.hpp"

#include <algorithm>
#include <array>

#include "primerep/limits.hpp"

namespace primerep {

RatInterval::RatInterval(BigRat lo, BigRat hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw PreconditionError("interval with lo > hi: [" + to_string(lo_) + ", " + to_string(hi_) + "]");
}

RatInterval interval_arith(const RatInterval& a, const RatInterval& b, IntervalOp op)
{
    switch (op) {
    case IntervalOp::add:
        return RatInterval(a.lo() + b.lo(), a.hi() + b.hi());
    case IntervalOp::sub:
        return RatInterval(a.lo() - b.hi(), a.hi() - b.lo());
    case IntervalOp::mul: {
        const std::array<BigRat, 4> p{BigRat(a.lo() * b.lo()), BigRat(a.lo() * b.hi()),
                                      BigRat(a.hi() * b.lo()), BigRat(a.hi() * b.hi())};
        auto [mn, mx] = std::minmax_element(p.begin(), p.end());
        return RatInterval(*mn, *mx);
    }
    }
    throw PreconditionError("unknown interval op");
}

std::string to_string(const RatInterval& x)
{
    return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

}  // namespace primerep
