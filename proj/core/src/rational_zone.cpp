#include "tapn/rational_zone.h"

#include <cassert>
#include <stdexcept>

namespace tapn {

bool RationalZone::Entry::tighter_than(const Entry& other) const {
    if (infinite) return false;
    if (other.infinite) return true;
    if (value != other.value) return value < other.value;
    return strict && !other.strict;
}

RationalZone::Entry operator+(const RationalZone::Entry& a, const RationalZone::Entry& b) {
    if (a.infinite || b.infinite) return {};
    return {a.value + b.value, a.strict || b.strict, false};
}

RationalZone::RationalZone(const Dbm& d) : dim_(d.dimension()), m_(dim_ * dim_) {
    for (Clock i = 0; i < dim_; ++i) {
        for (Clock j = 0; j < dim_; ++j) {
            const Bound b = d(i, j);
            if (!b.is_infinity()) m_[i * dim_ + j] = {Rational(b.value()), b.is_strict(), false};
        }
    }
    if (!close()) throw std::logic_error("rational zone built from an empty DBM");
}

bool RationalZone::close() {
    for (Clock k = 0; k < dim_; ++k) {
        for (Clock i = 0; i < dim_; ++i) {
            const Entry ik = m_[i * dim_ + k];
            if (ik.infinite) continue;
            for (Clock j = 0; j < dim_; ++j) {
                const Entry candidate = ik + m_[k * dim_ + j];
                if (candidate.tighter_than(m_[i * dim_ + j])) m_[i * dim_ + j] = candidate;
            }
        }
    }
    for (Clock i = 0; i < dim_; ++i) {
        const Entry& e = m_[i * dim_ + i];
        if (e.value < 0 || (e.value == Rational(0) && e.strict)) return false;
    }
    return true;
}

bool RationalZone::constrain(Clock i, Clock j, const Rational& value, bool strict) {
    const Entry e{value, strict, false};
    if (e.tighter_than(m_[i * dim_ + j])) m_[i * dim_ + j] = e;
    return close();
}

bool RationalZone::fix(Clock i, const Rational& value) {
    const Entry upper{value, false, false};
    const Entry lower{-value, false, false};
    if (upper.tighter_than(m_[i * dim_])) m_[i * dim_] = upper;
    if (lower.tighter_than(m_[i])) m_[i] = lower;
    return close();
}

Rational RationalZone::pick(const Entry& lower, const Entry& upper) {
    assert(!lower.infinite);
    if (upper.infinite) return lower.strict ? lower.value + Rational(1, 2) : lower.value;
    if (upper.value == lower.value) return lower.value;
    return (lower.value + upper.value) / 2;
}

std::vector<Rational> RationalZone::sample() const {
    std::vector<Rational> v(dim_, Rational(0));
    for (Clock i = 1; i < dim_; ++i) {
        // lower: v(i) > / >= max_j (v(j) - D(j,i)); upper: v(i) < / <= min_j (v(j) + D(i,j))
        Entry lower{Rational(0), false, false};
        Entry upper{};
        for (Clock j = 0; j < i; ++j) {
            const Entry& ji = m_[j * dim_ + i];
            if (!ji.infinite) {
                const Rational lo = v[j] - ji.value;
                if (lo > lower.value || (lo == lower.value && ji.strict)) {
                    lower = {lo, ji.strict, false};
                }
            }
            const Entry& ij = m_[i * dim_ + j];
            if (!ij.infinite) {
                const Entry hi{v[j] + ij.value, ij.strict, false};
                if (hi.tighter_than(upper)) upper = hi;
            }
        }
        if (!upper.infinite && (upper.value < lower.value ||
                                (upper.value == lower.value && (upper.strict || lower.strict)))) {
            throw std::logic_error("sample of an empty zone");
        }
        v[i] = pick(lower, upper);
    }
    return v;
}

} // namespace tapn
