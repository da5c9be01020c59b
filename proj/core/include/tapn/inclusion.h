#ifndef TAPN_INCLUSION_H
#define TAPN_INCLUSION_H

#include <span>
#include <vector>

#include "tapn/dbm.h"
#include "tapn/net.h"
#include "tapn/symbolic.h"

namespace tapn {

/// Membership flag per place id.
using PlaceSet = std::vector<char>;

PlaceSet all_places(const TimedArcPetriNet& net);
PlaceSet no_places(const TimedArcPetriNet& net);

/// Tokens (0-based) split into inc, eq and bot; counts are per place id.
struct TokenPartition {
    std::vector<int> inc;
    std::vector<int> eq;
    std::vector<int> bot;
    std::vector<int> inc_counts;
    std::vector<int> eq_counts;
};

/// Number of tokens of X sitting in `place`.
int cut(const Placement& placement, std::span<const int> tokens, PlaceId place);

/// Tokens whose exact age can never matter again.
std::vector<int> compute_inc(const TimedArcPetriNet& net, const SymbolicMarking& m);

TokenPartition partition(const TimedArcPetriNet& net, const SymbolicMarking& m,
                         const PlaceSet& p_inc);

/// A marking prepared for repeated inclusion checks.
struct InclusionView {
    const SymbolicMarking* marking = nullptr;
    TokenPartition part;
    /// Closed extrapolation of the zone; used when this is the larger side.
    Dbm widened;
};

InclusionView make_view(const TimedArcPetriNet& net, const SymbolicMarking& m,
                        const PlaceSet& p_inc);

/// a ⊑ b. Sound but possibly incomplete: the age condition on eq tokens is
/// decided by a zone test against the extrapolated zone of b.
bool included(const TimedArcPetriNet& net, const InclusionView& a, const InclusionView& b);
bool included(const TimedArcPetriNet& net, const SymbolicMarking& a, const SymbolicMarking& b,
              const PlaceSet& p_inc);

} // namespace tapn

#endif
