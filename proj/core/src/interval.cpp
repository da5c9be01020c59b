#include "tapn/interval.h"

#include <stdexcept>

namespace tapn {

TimeInterval TimeInterval::make(std::int64_t lower, bool lower_strict,
                                std::optional<std::int64_t> upper, bool upper_strict) {
    if (lower < 0) throw std::invalid_argument("interval lower bound must be nonnegative");
    if (upper) {
        if (*upper < lower) throw std::invalid_argument("interval lower bound exceeds upper bound");
        if (*upper == lower && (lower_strict || upper_strict)) {
            throw std::invalid_argument("point intervals must be closed");
        }
    } else if (!upper_strict) {
        throw std::invalid_argument("infinite upper bound must be open");
    }
    TimeInterval iv;
    iv.lower_ = lower;
    iv.lower_strict_ = lower_strict;
    iv.upper_ = upper;
    iv.upper_strict_ = upper ? upper_strict : true;
    return iv;
}

bool TimeInterval::contains(const Rational& value) const {
    const Rational lo(lower_);
    if (lower_strict_ ? !(value > lo) : value < lo) return false;
    if (!upper_) return true;
    const Rational hi(*upper_);
    return upper_strict_ ? value < hi : !(value > hi);
}

std::string TimeInterval::to_string() const {
    std::string out = lower_strict_ ? "(" : "[";
    out += std::to_string(lower_) + ",";
    if (upper_) {
        out += std::to_string(*upper_);
        out += upper_strict_ ? ")" : "]";
    } else {
        out += "inf)";
    }
    return out;
}

} // namespace tapn
