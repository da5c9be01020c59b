#ifndef TAPN_SEARCH_H
#define TAPN_SEARCH_H

#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tapn/concrete.h"
#include "tapn/error.h"
#include "tapn/inclusion.h"
#include "tapn/query.h"
#include "tapn/symbolic.h"

namespace tapn {

enum class SearchStrategy { BFS, DFS };
enum class Verdict { Satisfied, NotSatisfied, Inconclusive };
enum class LimitReason { None, TokenBound, StateLimit, TimeLimit };

const char* to_string(SearchStrategy s);
const char* to_string(Verdict v);
const char* to_string(LimitReason r);

enum class InclusionMode {
    /// P_inc is empty: only eq matching (symmetry and zone inclusion).
    Off,
    /// P_inc is every place not breaking monotonicity for the query.
    Full,
    /// P_inc is SearchOptions::inclusion_places.
    Custom,
};

struct SearchOptions {
    SearchStrategy strategy = SearchStrategy::BFS;
    InclusionMode inclusion = InclusionMode::Full;
    std::vector<std::string> inclusion_places;
    bool trace = false;
    /// Live stored markings allowed; 0 means unlimited.
    std::size_t max_states = 0;
    /// Wall-clock budget; zero means unlimited.
    std::chrono::milliseconds timeout{0};
};

/// Raised when a user-supplied P_inc names a place that the query bounds
/// from above or exactly, or a place that does not exist.
class InclusionSetError : public Error {
public:
    using Error::Error;
};

/// Raised when a reconstructed trace fails concrete replay.
class InternalTraceError : public Error {
public:
    using Error::Error;
};

struct TraceStep {
    enum class Kind { Delay, Fire };
    Kind kind = Kind::Delay;
    Rational delay{0};
    TransitionId transition = -1;
    TokenBinding binding;

    static TraceStep wait(Rational d) { return {Kind::Delay, d, -1, {}}; }
    static TraceStep fire(TransitionId t, TokenBinding b) {
        return {Kind::Fire, Rational(0), t, std::move(b)};
    }
};

/// delay d0, fire t1, delay d1, ..., fire tn.
struct TimedTrace {
    std::vector<TraceStep> steps;
};

/// One discrete step of a symbolic path.
struct PathStep {
    TransitionId transition;
    TokenBinding binding;
};

struct SearchStats {
    std::size_t explored = 0;
    /// Markings alive on PASSED or WAITING at the end.
    std::size_t stored = 0;
    /// Markings ever inserted into WAITING, the initial one included.
    std::size_t inserted = 0;
    std::size_t successors = 0;
    std::size_t max_waiting = 0;
    std::size_t evictions = 0;
    std::size_t inclusion_hits = 0;
    double elapsed_seconds = 0.0;
};

struct SearchResult {
    Verdict verdict = Verdict::NotSatisfied;
    LimitReason reason = LimitReason::None;
    /// The search body was found. Equals "satisfied" for EF and "violated"
    /// for AG.
    bool witness_found = false;
    /// Leads to a marking satisfying the search body (a counterexample for AG).
    std::optional<TimedTrace> trace;
    std::vector<PathStep> path;
    SearchStats stats;
};

struct SearchNode {
    SymbolicMarking marking;
    std::optional<std::size_t> parent;
    std::optional<PathStep> via;
    std::size_t id = 0;
};

/// Lowest id for BFS, highest for DFS. `waiting` holds ids in increasing
/// order. Removes and returns the chosen id.
std::size_t select_next(std::deque<std::size_t>& waiting, SearchStrategy strategy);

/// P_inc for the given search body. Throws InclusionSetError.
PlaceSet inclusion_set(const TimedArcPetriNet& net, const Predicate& search_body,
                       const SearchOptions& options);

SearchResult reach(const TimedArcPetriNet& net, const Query& query, const SearchOptions& options = {});

/// Concrete delays for a symbolic path, found without extrapolation and
/// checked by replay. The final marking satisfies `goal` (if given).
/// Throws InternalTraceError.
TimedTrace concretize_trace(const TimedArcPetriNet& net, std::span<const PathStep> path,
                            const Predicate* goal = nullptr);

/// Runs a trace from the initial marking. Throws SemanticsError.
ConcreteMarking replay(const TimedArcPetriNet& net, const TimedTrace& trace);

} // namespace tapn

#endif
