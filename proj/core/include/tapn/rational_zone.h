#ifndef TAPN_RATIONAL_ZONE_H
#define TAPN_RATIONAL_ZONE_H

#include <optional>
#include <vector>

#include "tapn/dbm.h"
#include "tapn/rational.h"

namespace tapn {

/// Difference constraints with rational constants. Used where concrete
/// (non-integer) clock values have to be pinned inside an integer zone:
/// valuation sampling and trace concretization.
class RationalZone {
public:
    struct Entry {
        Rational value;
        bool strict = true;
        bool infinite = true;

        bool tighter_than(const Entry& other) const;
        friend Entry operator+(const Entry& a, const Entry& b);
    };

    explicit RationalZone(const Dbm& d);

    std::size_t dimension() const noexcept { return dim_; }
    const Entry& at(Clock i, Clock j) const { return m_[i * dim_ + j]; }

    /// v(i) - v(j) < value (strict) or <= value. Returns false iff empty.
    bool constrain(Clock i, Clock j, const Rational& value, bool strict);
    /// v(i) == value.
    bool fix(Clock i, const Rational& value);

    /// Fixes clocks in index order. Each clock takes the midpoint of its
    /// remaining interval when that interval is bounded, its lower bound when
    /// unbounded above with an attained lower bound, and lower + 1/2 when
    /// unbounded above with a strict lower bound.
    std::vector<Rational> sample() const;

    /// The same rule for a single variable confined to the given interval.
    static Rational pick(const Entry& lower, const Entry& upper);

private:
    bool close();
    std::size_t dim_;
    std::vector<Entry> m_;
};

} // namespace tapn

#endif
