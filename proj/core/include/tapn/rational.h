#ifndef TAPN_RATIONAL_H
#define TAPN_RATIONAL_H

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace boost {
// Mixed equality between rational<int64_t> and a built-in integer recurses
// forever in Boost 1.74 under C++20 rewritten comparisons. Compare against a
// rational instead.
bool operator==(const rational<std::int64_t>&, int) = delete;
bool operator==(const rational<std::int64_t>&, long) = delete;
bool operator==(const rational<std::int64_t>&, long long) = delete;
bool operator==(int, const rational<std::int64_t>&) = delete;
bool operator==(long, const rational<std::int64_t>&) = delete;
bool operator==(long long, const rational<std::int64_t>&) = delete;
bool operator!=(const rational<std::int64_t>&, int) = delete;
bool operator!=(const rational<std::int64_t>&, long) = delete;
bool operator!=(const rational<std::int64_t>&, long long) = delete;
bool operator!=(int, const rational<std::int64_t>&) = delete;
bool operator!=(long, const rational<std::int64_t>&) = delete;
bool operator!=(long long, const rational<std::int64_t>&) = delete;
} // namespace boost

namespace tapn {

/// Exact token ages and delays. Strict interval endpoints make floating
/// point comparisons unusable here.
using Rational = boost::rational<std::int64_t>;

/// Renders a rational as a terminating decimal when the denominator only has
/// factors 2 and 5 (e.g. "2.5"), and as "n/d" otherwise.
std::string to_string(const Rational& value);

/// Parses "3", "2.5", "-1/4" or "7/3". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace tapn

#endif
