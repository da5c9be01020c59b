#include "tapn/symbolic.h"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace tapn {

namespace {

// Adds a ≤ v(clock) ≤ b style constraints in place; false when empty.
bool constrain_interval(Dbm& d, Clock c, const TimeInterval& iv) {
    if (!d.constrain(0, c, Bound::make(-iv.lower(), iv.lower_strict()))) return false;
    if (iv.upper() && !d.constrain(c, 0, Bound::make(*iv.upper(), iv.upper_strict()))) return false;
    return true;
}

bool apply_invariants(const TimedArcPetriNet& net, const Placement& placement, Dbm& d) {
    for (std::size_t i = 0; i < placement.size(); ++i) {
        if (placement[i] == kBottom) continue;
        const TimeInterval& inv = net.place(placement[i]).invariant;
        if (inv.is_trivial()) continue;
        if (!constrain_interval(d, i + 1, inv)) return false;
    }
    return true;
}

bool apply_guards(const TimedArcPetriNet& net, TransitionId t, const TokenBinding& binding, Dbm& d) {
    const auto& pairing = net.transition(t).pairing;
    for (std::size_t e = 0; e < pairing.size(); ++e) {
        if (pairing[e].source == kBottom) continue;
        const TimeInterval& guard = net.input_arcs()[*pairing[e].input_arc].interval;
        if (guard.is_trivial()) continue;
        if (!constrain_interval(d, static_cast<Clock>(binding[e]) + 1, guard)) return false;
    }
    return true;
}

struct MarkingHash {
    std::size_t operator()(const SymbolicMarking& m) const noexcept {
        std::size_t h = m.zone.hash();
        for (PlaceId p : m.placement) {
            h ^= static_cast<std::size_t>(p + 2) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

std::vector<std::int64_t> clock_constants(const TimedArcPetriNet& net, const Placement& placement) {
    std::vector<std::int64_t> mc(placement.size() + 1, 0);
    for (std::size_t i = 0; i < placement.size(); ++i) mc[i + 1] = net.max_constant(placement[i]);
    return mc;
}

Dbm guard_zone(const TimedArcPetriNet& net, const Placement& placement, const TokenBinding& binding,
               TransitionId t) {
    Dbm d = Dbm::universal(placement.size() + 1);
    const bool ok = apply_guards(net, t, binding, d);
    assert(ok);
    (void)ok;
    return d;
}

Dbm invariant_zone(const TimedArcPetriNet& net, const Placement& placement) {
    Dbm d = Dbm::universal(placement.size() + 1);
    const bool ok = apply_invariants(net, placement, d);
    assert(ok);
    (void)ok;
    return d;
}

Dbm extrapolate_for(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone) {
    const auto mc = clock_constants(net, placement);
    Dbm out = extrapolate(zone, mc);
    const bool ok = out.close();
    assert(ok);
    (void)ok;
    return out;
}

Dbm delay_zone(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone) {
    Dbm d = zone;
    d.up();
    const bool ok = apply_invariants(net, placement, d);
    assert(ok);
    (void)ok;
    return d;
}

std::vector<Clock> reset_clocks(const TimedArcPetriNet& net, TransitionId t,
                                const TokenBinding& binding) {
    const auto& pairing = net.transition(t).pairing;
    std::vector<Clock> out;
    for (std::size_t e = 0; e < pairing.size(); ++e) {
        if (!pairing[e].transport) out.push_back(static_cast<Clock>(binding[e]) + 1);
    }
    return out;
}

std::optional<Dbm> fire_zone(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone,
                             TransitionId t, const TokenBinding& binding) {
    Dbm d = zone;
    if (!apply_guards(net, t, binding, d)) return std::nullopt;
    for (Clock c : reset_clocks(net, t, binding)) d.reset(c);
    const Placement next = move_tokens(net, placement, t, binding);
    if (!apply_invariants(net, next, d)) return std::nullopt;
    return d;
}

SymbolicMarking initial_symbolic(const TimedArcPetriNet& net) {
    const Placement& p0 = net.initial_placement();
    const Dbm z = delay_zone(net, p0, Dbm::zero(p0.size() + 1));
    return {p0, extrapolate_for(net, p0, z)};
}

std::vector<TokenBinding> candidate_bindings(const TimedArcPetriNet& net, const Placement& placement,
                                             TransitionId t, bool* bottom_short) {
    const Transition& tr = net.transition(t);
    if (bottom_short) *bottom_short = false;
    for (PlaceId p : tr.inhibitors) {
        if (count_tokens(placement, p) > 0) return {};
    }

    // Tokens available for each pairing entry with a real source place.
    std::vector<std::vector<int>> choices(tr.pairing.size());
    std::vector<int> bottoms;
    for (int i = 0; i < static_cast<int>(placement.size()); ++i) {
        if (placement[static_cast<std::size_t>(i)] == kBottom) bottoms.push_back(i);
    }
    for (std::size_t e = 0; e < tr.pairing.size(); ++e) {
        const PlaceId src = tr.pairing[e].source;
        if (src == kBottom) continue;
        for (int i = 0; i < static_cast<int>(placement.size()); ++i) {
            if (placement[static_cast<std::size_t>(i)] == src) choices[e].push_back(i);
        }
        if (choices[e].empty()) return {};
    }
    if (static_cast<int>(bottoms.size()) < tr.bottom_inputs) {
        if (bottom_short) *bottom_short = true;
        return {};
    }

    std::vector<TokenBinding> out;
    TokenBinding binding(tr.pairing.size(), -1);
    std::size_t next_bottom = 0;
    for (std::size_t e = 0; e < tr.pairing.size(); ++e) {
        if (tr.pairing[e].source == kBottom) binding[e] = bottoms[next_bottom++];
    }
    // Odometer over the real-source entries. Source places are distinct, so
    // the chosen tokens are automatically distinct.
    std::vector<std::size_t> pos(tr.pairing.size(), 0);
    while (true) {
        for (std::size_t e = 0; e < tr.pairing.size(); ++e) {
            if (!choices[e].empty()) binding[e] = choices[e][pos[e]];
        }
        out.push_back(binding);
        std::size_t e = 0;
        for (; e < tr.pairing.size(); ++e) {
            if (choices[e].empty()) continue;
            if (++pos[e] < choices[e].size()) break;
            pos[e] = 0;
        }
        if (e == tr.pairing.size()) break;
    }
    return out;
}

namespace {

// Would t fire with the real-source tokens of some choice if enough ⊥ tokens
// existed? Fresh tokens start at 0, which every invariant admits, so only the
// guards and the targets of transported tokens matter.
bool fires_without_bottom_limit(const TimedArcPetriNet& net, const Placement& placement,
                                const Dbm& zone, TransitionId t) {
    const Transition& tr = net.transition(t);
    const int have = static_cast<int>(std::count(placement.begin(), placement.end(), kBottom));
    if (have >= tr.bottom_inputs) return false;

    Placement widened = placement;
    widened.resize(placement.size() + static_cast<std::size_t>(tr.bottom_inputs - have), kBottom);
    bool short_flag = false;
    const auto bindings = candidate_bindings(net, widened, t, &short_flag);
    for (const TokenBinding& b : bindings) {
        Dbm d = zone;
        bool ok = true;
        for (std::size_t e = 0; ok && e < tr.pairing.size(); ++e) {
            const PairingEntry& entry = tr.pairing[e];
            if (entry.source == kBottom) continue;
            const Clock c = static_cast<Clock>(b[e]) + 1;
            ok = constrain_interval(d, c, net.input_arcs()[*entry.input_arc].interval);
            if (ok && entry.transport && entry.target != kBottom) {
                ok = constrain_interval(d, c, net.place(entry.target).invariant);
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

SuccessorSet successors(const TimedArcPetriNet& net, const SymbolicMarking& m) {
    SuccessorSet out;
    std::unordered_set<SymbolicMarking, MarkingHash> seen;
    for (TransitionId t = 0; t < static_cast<TransitionId>(net.transition_count()); ++t) {
        bool bottom_short = false;
        const auto bindings = candidate_bindings(net, m.placement, t, &bottom_short);
        if (bottom_short) {
            // Only the real-source part is checked, in a zone extended by the
            // missing ⊥ clocks.
            const std::size_t extra = static_cast<std::size_t>(net.transition(t).bottom_inputs) -
                                      static_cast<std::size_t>(std::count(
                                          m.placement.begin(), m.placement.end(), kBottom));
            Dbm widened = Dbm::universal(m.zone.dimension() + extra);
            for (Clock i = 0; i < m.zone.dimension(); ++i) {
                for (Clock j = 0; j < m.zone.dimension(); ++j) widened.at(i, j) = m.zone(i, j);
            }
            const bool ok = widened.close();
            assert(ok);
            (void)ok;
            if (fires_without_bottom_limit(net, m.placement, widened, t)) out.bound_exhausted = true;
            continue;
        }
        for (const TokenBinding& b : bindings) {
            auto fired = fire_zone(net, m.placement, m.zone, t, b);
            if (!fired) continue;
            Placement next = move_tokens(net, m.placement, t, b);
            Dbm zone = extrapolate_for(net, next, delay_zone(net, next, *fired));
            SymbolicMarking sm{std::move(next), std::move(zone)};
            if (!seen.insert(sm).second) continue;
            out.items.push_back({std::move(sm), t, b});
        }
    }
    return out;
}

} // namespace tapn
