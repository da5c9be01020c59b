#ifndef TAPN_SYMBOLIC_H
#define TAPN_SYMBOLIC_H

#include <cstdint>
#include <optional>
#include <vector>

#include "tapn/dbm.h"
#include "tapn/net.h"

namespace tapn {

/// A placement and a canonical, non-empty zone over clocks 0..k.
struct SymbolicMarking {
    Placement placement;
    Dbm zone;

    friend bool operator==(const SymbolicMarking&, const SymbolicMarking&) = default;
};

/// mc of the place of every clock; index 0 is unused and set to 0.
std::vector<std::int64_t> clock_constants(const TimedArcPetriNet& net, const Placement& placement);

/// Tokens in `binding` satisfy the guards of their input arcs.
Dbm guard_zone(const TimedArcPetriNet& net, const Placement& placement, const TokenBinding& binding,
               TransitionId t);

/// Every token satisfies the invariant of its place.
Dbm invariant_zone(const TimedArcPetriNet& net, const Placement& placement);

/// ext(z) with the constants of `placement`, re-canonicalized.
Dbm extrapolate_for(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone);

/// Delay closure intersected with the invariants: z^ ∩ I(placement).
/// Never empty for a non-empty z that already satisfies the invariants.
Dbm delay_zone(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone);

/// The discrete step without abstraction: ((z ∩ g)[R := 0]) ∩ I(p').
/// Returns nullopt when the result is empty.
std::optional<Dbm> fire_zone(const TimedArcPetriNet& net, const Placement& placement, const Dbm& zone,
                             TransitionId t, const TokenBinding& binding);

/// Clocks reset by firing t with `binding` (every non-transport entry).
std::vector<Clock> reset_clocks(const TimedArcPetriNet& net, TransitionId t,
                                const TokenBinding& binding);

/// Initial placement with the extrapolated delay closure of the zero valuation.
SymbolicMarking initial_symbolic(const TimedArcPetriNet& net);

struct Successor {
    SymbolicMarking marking;
    TransitionId transition;
    TokenBinding binding;
};

struct SuccessorSet {
    std::vector<Successor> items;
    /// Some transition would have fired had more unused tokens been available.
    bool bound_exhausted = false;
};

/// One discrete step (identity abstraction) followed by one delay step with
/// extrapolation, for every transition and token choice. Token choices that
/// give identical markings are reported once.
SuccessorSet successors(const TimedArcPetriNet& net, const SymbolicMarking& m);

/// Candidate bindings for t in `placement`: every choice of one token per
/// input place, the lowest-numbered free ⊥ tokens for ⊥ entries, with no
/// token left in an inhibitor place. `bottom_short` is set when the only
/// obstacle is a lack of ⊥ tokens.
std::vector<TokenBinding> candidate_bindings(const TimedArcPetriNet& net, const Placement& placement,
                                             TransitionId t, bool* bottom_short = nullptr);

} // namespace tapn

#endif
