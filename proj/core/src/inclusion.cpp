#include "tapn/inclusion.h"

#include <algorithm>
#include <cassert>

namespace tapn {

PlaceSet all_places(const TimedArcPetriNet& net) { return PlaceSet(net.place_count(), 1); }
PlaceSet no_places(const TimedArcPetriNet& net) { return PlaceSet(net.place_count(), 0); }

int cut(const Placement& placement, std::span<const int> tokens, PlaceId place) {
    int n = 0;
    for (int i : tokens) {
        if (placement[static_cast<std::size_t>(i)] == place) ++n;
    }
    return n;
}

std::vector<int> compute_inc(const TimedArcPetriNet& net, const SymbolicMarking& m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        const PlaceId p = m.placement[i];
        if (p == kBottom) continue;
        if (!net.place(p).invariant.is_trivial()) continue;
        if (net.has_outgoing_inhibitor(p)) continue;
        if (!net.untimed(p)) {
            const LowerBoundInfo lb = lower_bound_info(m.zone, i + 1);
            const std::int64_t mc = net.max_constant(p);
            if (lb.attained ? !(mc < lb.infimum) : !(mc <= lb.infimum)) continue;
        }
        out.push_back(static_cast<int>(i));
    }
    return out;
}

TokenPartition partition(const TimedArcPetriNet& net, const SymbolicMarking& m,
                         const PlaceSet& p_inc) {
    TokenPartition part;
    part.inc_counts.assign(net.place_count(), 0);
    part.eq_counts.assign(net.place_count(), 0);
    std::vector<char> is_inc(m.placement.size(), 0);
    for (int i : compute_inc(net, m)) {
        if (p_inc[static_cast<std::size_t>(m.placement[static_cast<std::size_t>(i)])]) {
            is_inc[static_cast<std::size_t>(i)] = 1;
        }
    }
    for (std::size_t i = 0; i < m.placement.size(); ++i) {
        const PlaceId p = m.placement[i];
        const int token = static_cast<int>(i);
        if (p == kBottom) {
            part.bot.push_back(token);
        } else if (is_inc[i]) {
            part.inc.push_back(token);
            ++part.inc_counts[static_cast<std::size_t>(p)];
        } else {
            part.eq.push_back(token);
            ++part.eq_counts[static_cast<std::size_t>(p)];
        }
    }
    return part;
}

InclusionView make_view(const TimedArcPetriNet& net, const SymbolicMarking& m,
                        const PlaceSet& p_inc) {
    return {&m, partition(net, m, p_inc), extrapolate_for(net, m.placement, m.zone)};
}

namespace {

// Backtracking search for the eq bijection. Clock i of `small` maps to clock
// h[i] of `large`.
//
// An eq clock of `small` whose every value lies above mc only needs an image
// that can also lie above mc; its exact age and its differences to other
// clocks are irrelevant. The remaining clocks must be matched exactly: every
// entry between them is checked against the widened zone of `large`, with the
// images of the above-mc clocks pushed above mc.
class BijectionSearch {
public:
    BijectionSearch(const TimedArcPetriNet& net, const InclusionView& a, const InclusionView& b)
        : net_(net), a_(a), b_(b) {
        const auto& eq_a = a.part.eq;
        used_.assign(b.part.eq.size(), 0);
        image_.assign(eq_a.size(), 0);
        above_.assign(eq_a.size(), 0);
        for (std::size_t n = 0; n < eq_a.size(); ++n) {
            const Clock c = static_cast<Clock>(eq_a[n]) + 1;
            above_[n] = a.marking->zone(0, c) <= Bound::strict(-mc(*a.marking, eq_a[n])) ? 1 : 0;
            any_above_ = any_above_ || above_[n];
        }
    }

    bool run() { return extend(0); }

private:
    std::int64_t mc(const SymbolicMarking& m, int token) const {
        return net_.max_constant(m.placement[static_cast<std::size_t>(token)]);
    }

    bool admissible(std::size_t n, Clock ci, Clock cj) const {
        const Dbm& d1 = a_.marking->zone;
        const Dbm& e2 = b_.widened;
        if (above_[n]) return e2(cj, 0) > Bound::weak(mc(*a_.marking, a_.part.eq[n]));
        return d1(ci, 0) <= e2(cj, 0) && d1(0, ci) <= e2(0, cj);
    }

    // Full check once every clock has an image.
    bool verify() const {
        if (!any_above_) return true;
        const auto& eq_a = a_.part.eq;
        const auto& eq_b = b_.part.eq;
        Dbm e2 = b_.widened;
        for (std::size_t n = 0; n < eq_a.size(); ++n) {
            if (!above_[n]) continue;
            const Clock cj = static_cast<Clock>(eq_b[image_[n]]) + 1;
            if (!e2.constrain(0, cj, Bound::strict(-mc(*a_.marking, eq_a[n])))) return false;
        }
        const Dbm& d1 = a_.marking->zone;
        for (std::size_t n = 0; n < eq_a.size(); ++n) {
            if (above_[n]) continue;
            const Clock ci = static_cast<Clock>(eq_a[n]) + 1;
            const Clock cj = static_cast<Clock>(eq_b[image_[n]]) + 1;
            if (!(d1(ci, 0) <= e2(cj, 0) && d1(0, ci) <= e2(0, cj))) return false;
            for (std::size_t m = 0; m < n; ++m) {
                if (above_[m]) continue;
                const Clock pi = static_cast<Clock>(eq_a[m]) + 1;
                const Clock pj = static_cast<Clock>(eq_b[image_[m]]) + 1;
                if (!(d1(ci, pi) <= e2(cj, pj) && d1(pi, ci) <= e2(pj, cj))) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t n) {
        const auto& eq_a = a_.part.eq;
        const auto& eq_b = b_.part.eq;
        if (n == eq_a.size()) return verify();
        const Dbm& d1 = a_.marking->zone;
        const Dbm& e2 = b_.widened;
        const int ta = eq_a[n];
        const PlaceId place = a_.marking->placement[static_cast<std::size_t>(ta)];
        const Clock ci = static_cast<Clock>(ta) + 1;
        for (std::size_t k = 0; k < eq_b.size(); ++k) {
            if (used_[k]) continue;
            const int tb = eq_b[k];
            if (b_.marking->placement[static_cast<std::size_t>(tb)] != place) continue;
            const Clock cj = static_cast<Clock>(tb) + 1;
            if (!admissible(n, ci, cj)) continue;
            bool ok = true;
            // Pruning against the unconstrained widened zone is a necessary
            // condition for the check in verify().
            for (std::size_t m = 0; ok && m < n && !above_[n]; ++m) {
                if (above_[m]) continue;
                const Clock pi = static_cast<Clock>(eq_a[m]) + 1;
                const Clock pj = static_cast<Clock>(eq_b[image_[m]]) + 1;
                ok = d1(ci, pi) <= e2(cj, pj) && d1(pi, ci) <= e2(pj, cj);
            }
            if (!ok) continue;
            used_[k] = 1;
            image_[n] = k;
            if (extend(n + 1)) return true;
            used_[k] = 0;
        }
        return false;
    }

    const TimedArcPetriNet& net_;
    const InclusionView& a_;
    const InclusionView& b_;
    std::vector<char> used_;
    std::vector<std::size_t> image_;
    std::vector<char> above_;
    bool any_above_ = false;
};

} // namespace

bool included(const TimedArcPetriNet& net, const InclusionView& a, const InclusionView& b) {
    assert(a.marking->placement.size() == b.marking->placement.size());
    if (a.part.eq.size() != b.part.eq.size()) return false;
    if (a.part.eq_counts != b.part.eq_counts) return false;
    for (std::size_t p = 0; p < a.part.inc_counts.size(); ++p) {
        if (a.part.inc_counts[p] > b.part.inc_counts[p]) return false;
    }
    return BijectionSearch(net, a, b).run();
}

bool included(const TimedArcPetriNet& net, const SymbolicMarking& a, const SymbolicMarking& b,
              const PlaceSet& p_inc) {
    const InclusionView va = make_view(net, a, p_inc);
    const InclusionView vb = make_view(net, b, p_inc);
    return included(net, va, vb);
}

} // namespace tapn
