#include "tapn/dbm.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "tapn/rational_zone.h"

namespace tapn {

std::string Bound::to_string() const {
    if (is_infinity()) return "(inf,<)";
    return "(" + std::to_string(value()) + (is_strict() ? ",<)" : ",<=)");
}

Dbm::Dbm(std::size_t dimension)
    : dim_(dimension), bounds_(dimension * dimension, Bound::infinity()) {
    for (Clock i = 0; i < dim_; ++i) at(i, i) = Bound::zero();
}

Dbm Dbm::zero(std::size_t dimension) {
    Dbm d(dimension);
    std::fill(d.bounds_.begin(), d.bounds_.end(), Bound::zero());
    return d;
}

Dbm Dbm::universal(std::size_t dimension) {
    Dbm d(dimension);
    for (Clock j = 1; j < dimension; ++j) d.at(0, j) = Bound::zero();
    return d;
}

bool Dbm::close() {
    const std::size_t n = dim_;
    for (Clock k = 0; k < n; ++k) {
        for (Clock i = 0; i < n; ++i) {
            const Bound ik = at(i, k);
            if (ik.is_infinity()) continue;
            for (Clock j = 0; j < n; ++j) {
                const Bound candidate = ik + at(k, j);
                if (candidate < at(i, j)) at(i, j) = candidate;
            }
        }
        for (Clock i = 0; i < n; ++i) {
            if (at(i, i) < Bound::zero()) return false;
        }
    }
    return true;
}

bool Dbm::is_canonical() const {
    for (Clock i = 0; i < dim_; ++i) {
        if (at(i, i) != Bound::zero()) return false;
        for (Clock j = 0; j < dim_; ++j) {
            for (Clock k = 0; k < dim_; ++k) {
                if (at(i, k) + at(k, j) < at(i, j)) return false;
            }
        }
    }
    return true;
}

bool Dbm::constrain(Clock i, Clock j, Bound b) {
    if (!(b < at(i, j))) return true;
    if (at(j, i) + b < Bound::zero()) return false;
    at(i, j) = b;
    const std::size_t n = dim_;
    // Every path improved by the new edge goes through i -> j.
    for (Clock p = 0; p < n; ++p) {
        const Bound pi = at(p, i);
        if (pi.is_infinity()) continue;
        const Bound pij = pi + b;
        for (Clock q = 0; q < n; ++q) {
            const Bound candidate = pij + at(j, q);
            if (candidate < at(p, q)) at(p, q) = candidate;
        }
    }
    return true;
}

void Dbm::up() {
    for (Clock i = 1; i < dim_; ++i) at(i, 0) = Bound::infinity();
}

void Dbm::reset(Clock x) {
    assert(x != 0 && x < dim_);
    for (Clock j = 0; j < dim_; ++j) {
        at(x, j) = at(0, j);
        at(j, x) = at(j, 0);
    }
    at(x, x) = Bound::zero();
}

bool Dbm::contains(std::span<const Rational> v) const {
    assert(v.size() == dim_);
    for (Clock i = 0; i < dim_; ++i) {
        for (Clock j = 0; j < dim_; ++j) {
            const Bound b = at(i, j);
            if (b.is_infinity()) continue;
            const Rational diff = v[i] - v[j];
            const Rational m(b.value());
            if (b.is_strict() ? !(diff < m) : diff > m) return false;
        }
    }
    return true;
}

Dbm Dbm::project(std::span<const Clock> clocks) const {
    std::vector<Clock> keep{0};
    for (Clock c : clocks) {
        if (c != 0) keep.push_back(c);
    }
    Dbm out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(keep[i], keep[j]);
    }
    return out;
}

bool Dbm::is_well_formed() const {
    for (Clock i = 0; i < dim_; ++i) {
        if (at(i, i) != Bound::zero()) return false;
        if (i == 0) continue;
        const Bound lo = at(0, i);
        if (lo.is_infinity() || lo.value() > 0) return false;
        const Bound hi = at(i, 0);
        if (!hi.is_infinity() && hi.value() < 0) return false;
    }
    return true;
}

std::string Dbm::to_string() const { return render_table(*this); }

std::size_t Dbm::hash() const noexcept {
    std::size_t h = dim_;
    for (const Bound b : bounds_) {
        h ^= static_cast<std::size_t>(b.raw()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::optional<Dbm> canonicalize(Dbm d) {
    if (!d.close()) return std::nullopt;
    return d;
}

Dbm up(Dbm d) {
    d.up();
    return d;
}

Dbm reset(Dbm d, std::span<const Clock> clocks) {
    for (Clock c : clocks) d.reset(c);
    return d;
}

std::optional<Dbm> intersect(const Dbm& a, const Dbm& b) {
    assert(a.dimension() == b.dimension());
    Dbm out = a;
    for (Clock i = 0; i < a.dimension(); ++i) {
        for (Clock j = 0; j < a.dimension(); ++j) {
            if (b(i, j) < out(i, j)) out.at(i, j) = b(i, j);
        }
    }
    return canonicalize(std::move(out));
}

Dbm interval_dbm(std::size_t dimension, Clock i, const TimeInterval& iv) {
    assert(i != 0 && i < dimension);
    Dbm d = Dbm::universal(dimension);
    d.constrain(0, i, Bound::make(-iv.lower(), iv.lower_strict()));
    if (iv.upper()) d.constrain(i, 0, Bound::make(*iv.upper(), iv.upper_strict()));
    return d;
}

bool zone_subset(const Dbm& a, const Dbm& b) {
    assert(a.dimension() == b.dimension());
    for (Clock i = 0; i < a.dimension(); ++i) {
        for (Clock j = 0; j < a.dimension(); ++j) {
            if (b(i, j) < a(i, j)) return false;
        }
    }
    return true;
}

Dbm extrapolate(const Dbm& d, std::span<const std::int64_t> mc) {
    assert(mc.size() == d.dimension());
    const std::size_t n = d.dimension();
    Dbm out = d;
    // lb(i) = -D(0,i).value; "above" tests compare values only.
    std::vector<char> lower_above(n, 0);
    for (Clock i = 1; i < n; ++i) lower_above[i] = -d(0, i).value() > mc[i] ? 1 : 0;

    for (Clock i = 1; i < n; ++i) {
        if (lower_above[i]) {
            out.at(0, i) = Bound::strict(-mc[i]);
            out.at(i, 0) = Bound::infinity();
        }
        const Bound ub = d(i, 0);
        if (ub.is_infinity() || ub.value() > mc[i]) out.at(i, 0) = Bound::infinity();
        for (Clock j = 1; j < n; ++j) {
            if (i == j) continue;
            const Bound b = d(i, j);
            if (lower_above[i] || lower_above[j] || b.is_infinity() || b.value() > mc[i]) {
                out.at(i, j) = Bound::infinity();
            }
        }
    }
    return out;
}

LowerBoundInfo lower_bound_info(const Dbm& d, Clock i) {
    const Bound b = d(0, i);
    return {-b.value(), b.is_weak()};
}

std::vector<Rational> sample_valuation(const Dbm& d) { return RationalZone(d).sample(); }

std::string render_table(const Dbm& d) {
    std::ostringstream out;
    for (Clock i = 0; i < d.dimension(); ++i) {
        for (Clock j = 0; j < d.dimension(); ++j) {
            if (j) out << ' ';
            out << d(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tapn
