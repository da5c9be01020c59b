#ifndef TAPN_INTERVAL_H
#define TAPN_INTERVAL_H

#include <cstdint>
#include <optional>
#include <string>

#include "tapn/rational.h"

namespace tapn {

/// A time interval [a,b], [a,b), (a,b], (a,b), [a,a], [a,inf) or (a,inf).
///
/// An infinite upper endpoint is always open. Construction goes through
/// make(), which rejects anything outside that grammar.
class TimeInterval {
public:
    /// [0,inf)
    TimeInterval() = default;

    static TimeInterval make(std::int64_t lower, bool lower_strict,
                             std::optional<std::int64_t> upper, bool upper_strict);
    static TimeInterval closed(std::int64_t lower, std::int64_t upper) {
        return make(lower, false, upper, false);
    }
    static TimeInterval unbounded() { return {}; }

    std::int64_t lower() const noexcept { return lower_; }
    bool lower_strict() const noexcept { return lower_strict_; }
    const std::optional<std::int64_t>& upper() const noexcept { return upper_; }
    bool upper_strict() const noexcept { return upper_strict_; }
    bool is_unbounded_above() const noexcept { return !upper_; }

    /// The [0,inf) interval.
    bool is_trivial() const noexcept { return lower_ == 0 && !lower_strict_ && !upper_; }
    /// Invariant intervals must contain 0.
    bool contains_zero() const noexcept { return lower_ == 0 && !lower_strict_; }

    bool contains(const Rational& value) const;

    /// Largest finite constant in the interval.
    std::int64_t max_constant() const noexcept { return upper_ ? *upper_ : lower_; }

    std::string to_string() const;

    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

private:
    std::int64_t lower_ = 0;
    bool lower_strict_ = false;
    std::optional<std::int64_t> upper_;
    bool upper_strict_ = true;
};

} // namespace tapn

#endif
