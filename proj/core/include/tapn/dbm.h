#ifndef TAPN_DBM_H
#define TAPN_DBM_H

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tapn/interval.h"
#include "tapn/rational.h"

namespace tapn {

/// A DBM entry (m, <) or (m, <=), or (inf, <).
///
/// Encoded as raw = 2*m + (weak ? 1 : 0), so that the bound ordering is the
/// integer ordering of the raw values and infinity is the largest value.
class Bound {
public:
    constexpr Bound() = default;

    static constexpr Bound weak(std::int64_t m) { return Bound(2 * m + 1); }
    static constexpr Bound strict(std::int64_t m) { return Bound(2 * m); }
    static constexpr Bound infinity() { return Bound(kInfRaw); }
    static constexpr Bound zero() { return weak(0); }
    static constexpr Bound make(std::int64_t m, bool strict_cmp) {
        return strict_cmp ? strict(m) : weak(m);
    }

    constexpr bool is_infinity() const noexcept { return raw_ == kInfRaw; }
    constexpr bool is_strict() const noexcept { return (raw_ & 1) == 0; }
    constexpr bool is_weak() const noexcept { return (raw_ & 1) != 0; }
    /// Meaningless for infinity.
    constexpr std::int64_t value() const noexcept { return raw_ >> 1; }
    constexpr std::int64_t raw() const noexcept { return raw_; }

    friend constexpr Bound operator+(Bound a, Bound b) {
        if (a.is_infinity() || b.is_infinity()) return infinity();
        return Bound(((a.raw_ & ~std::int64_t{1}) + (b.raw_ & ~std::int64_t{1})) |
                     (a.raw_ & b.raw_ & 1));
    }
    friend constexpr auto operator<=>(Bound a, Bound b) = default;

    std::string to_string() const;

private:
    static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max() - 1;
    constexpr explicit Bound(std::int64_t raw) : raw_(raw) {}
    std::int64_t raw_ = 1;
};

using Clock = std::size_t;

/// Difference Bound Matrix over clocks 0..n, where clock 0 is the constant
/// zero. Entry (i, j) bounds v(i) - v(j).
///
/// Operations documented as taking a canonical DBM leave the result
/// canonical. A Dbm is a plain value; canonicity is not tracked by the type.
class Dbm {
public:
    Dbm() = default;

    /// The single valuation where every clock is 0.
    static Dbm zero(std::size_t dimension);
    /// All nonnegative valuations.
    static Dbm universal(std::size_t dimension);

    std::size_t dimension() const noexcept { return dim_; }
    Bound at(Clock i, Clock j) const { return bounds_[i * dim_ + j]; }
    Bound& at(Clock i, Clock j) { return bounds_[i * dim_ + j]; }
    Bound operator()(Clock i, Clock j) const { return bounds_[i * dim_ + j]; }

    /// Lower bound on clock i as stored, i.e. D(0,i) = (-m, cmp).
    Bound lower(Clock i) const { return at(0, i); }
    Bound upper(Clock i) const { return at(i, 0); }

    /// Shortest-path closure. Returns false iff the zone is empty, in which
    /// case the matrix content is unspecified.
    bool close();
    bool is_canonical() const;

    /// Tightens entry (i, j) to `b` and restores canonical form in O(n^2).
    /// Requires a canonical matrix; returns false iff the zone became empty.
    bool constrain(Clock i, Clock j, Bound b);

    /// Removes the upper bounds of all clocks (let time elapse).
    void up();
    /// Sets clock x to 0.
    void reset(Clock x);

    bool contains(std::span<const Rational> valuation) const;

    /// Sub-matrix on the listed clocks; clock 0 is always kept first.
    Dbm project(std::span<const Clock> clocks) const;

    /// Structural checks on the 0-row, 0-column and diagonal.
    bool is_well_formed() const;

    std::string to_string() const;

    friend bool operator==(const Dbm&, const Dbm&) = default;

    std::size_t hash() const noexcept;

private:
    explicit Dbm(std::size_t dimension);
    std::size_t dim_ = 0;
    std::vector<Bound> bounds_;
};

std::optional<Dbm> canonicalize(Dbm d);
Dbm up(Dbm d);
Dbm reset(Dbm d, std::span<const Clock> clocks);
std::optional<Dbm> intersect(const Dbm& a, const Dbm& b);
/// { v | v(i) in iv }; other clocks unconstrained.
Dbm interval_dbm(std::size_t dimension, Clock i, const TimeInterval& iv);
/// [a] is a subset of [b]; `a` must be canonical.
bool zone_subset(const Dbm& a, const Dbm& b);

/// Placement-dependent extrapolation. `max_constants[i]` is the maximum
/// constant of the place holding clock i (entry 0 unused). Every case reads
/// the input matrix; the result is not re-canonicalized.
Dbm extrapolate(const Dbm& d, std::span<const std::int64_t> max_constants);

struct LowerBoundInfo {
    std::int64_t infimum;
    bool attained;
};
LowerBoundInfo lower_bound_info(const Dbm& d, Clock i);

/// A deterministic member of a consistent canonical DBM (see RationalZone).
std::vector<Rational> sample_valuation(const Dbm& d);

/// One row per clock:
///   (0,<=) (-1,<=) (-3,<=)
std::string render_table(const Dbm& d);

} // namespace tapn

#endif
