#ifndef TAPN_ORACLE_H
#define TAPN_ORACLE_H

#include <cstddef>

#include "tapn/concrete.h"
#include "tapn/query.h"

namespace tapn {

enum class OracleVerdict { Reachable, Unreachable, DepthExceeded };

struct OracleOptions {
    /// Delays are multiples of 1/granularity. 0 selects 2(k+1).
    int granularity = 0;
    /// Breadth-first layers explored before giving up.
    std::size_t depth_limit = 100000;
    /// Distinct states explored before giving up.
    std::size_t state_limit = 2000000;
};

/// Explicit-state breadth-first search over the discretized concrete
/// semantics. Ages above the maximum constant of their place are collapsed to
/// a single representative. Exponential; meant for cross-checking the
/// symbolic engine on small nets.
OracleVerdict oracle_reach(const TimedArcPetriNet& net, const ConcreteMarking& initial,
                           const Predicate& goal, const OracleOptions& options = {});

} // namespace tapn

#endif
