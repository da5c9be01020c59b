#include "tapn/oracle.h"

#include <deque>
#include <unordered_set>

namespace tapn {

namespace {

struct StateKey {
    Placement placement;
    // ages in units of 1/granularity
    std::vector<std::int64_t> ticks;

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& s) const noexcept {
        std::size_t h = s.placement.size();
        for (auto p : s.placement) h = h * 31 + static_cast<std::size_t>(p + 1);
        for (auto a : s.ticks) h = h * 1000003 + static_cast<std::size_t>(a);
        return h;
    }
};

class Discretizer {
public:
    Discretizer(const TimedArcPetriNet& net, int granularity) : net_(net), g_(granularity) {}

    /// Collapses ages beyond the place constant; they all behave alike.
    ConcreteMarking normalize(ConcreteMarking m) const {
        for (std::size_t i = 0; i < m.placement.size(); ++i) {
            const PlaceId p = m.placement[i];
            if (p == kBottom) continue;
            const Rational cap = Rational(net_.max_constant(p)) + Rational(1, g_);
            if (m.ages[i] > cap) m.ages[i] = cap;
        }
        return m;
    }

    StateKey key(const ConcreteMarking& m) const {
        StateKey k{m.placement, {}};
        k.ticks.reserve(m.ages.size());
        for (const auto& a : m.ages) {
            const Rational scaled = a * g_;
            k.ticks.push_back(scaled.numerator() / scaled.denominator());
        }
        return k;
    }

    Rational tick() const { return Rational(1, g_); }

private:
    const TimedArcPetriNet& net_;
    int g_;
};

} // namespace

OracleVerdict oracle_reach(const TimedArcPetriNet& net, const ConcreteMarking& initial,
                           const Predicate& goal, const OracleOptions& options) {
    const Predicate bound_goal = bind(goal, net);
    const int granularity = options.granularity > 0 ? options.granularity : 2 * (net.bound() + 1);
    const Discretizer disc(net, granularity);

    std::unordered_set<StateKey, StateKeyHash> seen;
    std::deque<ConcreteMarking> frontier;

    const ConcreteMarking start = disc.normalize(initial);
    if (eval_predicate(net, start, bound_goal)) return OracleVerdict::Reachable;
    seen.insert(disc.key(start));
    frontier.push_back(start);

    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (depth++ >= options.depth_limit) return OracleVerdict::DepthExceeded;
        std::deque<ConcreteMarking> next;
        for (const auto& m : frontier) {
            std::vector<ConcreteMarking> succ;
            for (TransitionId t = 0; t < static_cast<TransitionId>(net.transition_count()); ++t) {
                for (const auto& binding : enabled_token_sets(net, m, t)) {
                    succ.push_back(fire(net, m, t, binding));
                }
            }
            try {
                succ.push_back(delay(net, m, disc.tick()));
            } catch (const InvariantViolation&) {
            }
            for (auto& s : succ) {
                ConcreteMarking n = disc.normalize(std::move(s));
                if (!seen.insert(disc.key(n)).second) continue;
                if (eval_predicate(net, n, bound_goal)) return OracleVerdict::Reachable;
                if (seen.size() > options.state_limit) return OracleVerdict::DepthExceeded;
                next.push_back(std::move(n));
            }
        }
        frontier = std::move(next);
    }
    return OracleVerdict::Unreachable;
}

} // namespace tapn
