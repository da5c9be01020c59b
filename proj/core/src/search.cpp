#include "tapn/search.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>

#include "tapn/rational_zone.h"

namespace tapn {

const char* to_string(SearchStrategy s) { return s == SearchStrategy::BFS ? "bfs" : "dfs"; }

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::NotSatisfied: return "not-satisfied";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(LimitReason r) {
    switch (r) {
    case LimitReason::None: return "none";
    case LimitReason::TokenBound: return "token-bound";
    case LimitReason::StateLimit: return "state-limit";
    case LimitReason::TimeLimit: return "time-limit";
    }
    return "?";
}

std::size_t select_next(std::deque<std::size_t>& waiting, SearchStrategy strategy) {
    assert(!waiting.empty());
    std::size_t id;
    if (strategy == SearchStrategy::BFS) {
        id = waiting.front();
        waiting.pop_front();
    } else {
        id = waiting.back();
        waiting.pop_back();
    }
    return id;
}

PlaceSet inclusion_set(const TimedArcPetriNet& net, const Predicate& search_body,
                       const SearchOptions& options) {
    const auto breaking = monotonicity_breaking_places(search_body);
    switch (options.inclusion) {
    case InclusionMode::Off:
        return no_places(net);
    case InclusionMode::Full: {
        PlaceSet set = all_places(net);
        for (const auto& name : breaking) {
            if (auto p = net.find_place(name)) set[static_cast<std::size_t>(*p)] = 0;
        }
        return set;
    }
    case InclusionMode::Custom: {
        PlaceSet set = no_places(net);
        for (const auto& name : options.inclusion_places) {
            const auto p = net.find_place(name);
            if (!p) throw InclusionSetError("unknown place in inclusion set: " + name);
            if (breaking.count(name)) {
                throw InclusionSetError("place " + name +
                                        " is bounded from above or exactly by the query and cannot "
                                        "be used for inclusion");
            }
            set[static_cast<std::size_t>(*p)] = 1;
        }
        return set;
    }
    }
    return no_places(net);
}

namespace {

enum class Status : char { Waiting, Passed, Evicted };

struct Entry {
    SearchNode node;
    InclusionView view;
    std::vector<int> counts;
    Status status = Status::Waiting;
};

std::vector<int> place_counts(const TimedArcPetriNet& net, const Placement& placement) {
    std::vector<int> c(net.place_count(), 0);
    for (PlaceId p : placement) {
        if (p != kBottom) ++c[static_cast<std::size_t>(p)];
    }
    return c;
}

bool dominated(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

class Engine {
public:
    Engine(const TimedArcPetriNet& net, const Predicate& body, const PlaceSet& p_inc,
           const SearchOptions& options)
        : net_(net), body_(body), p_inc_(p_inc), options_(options) {}

    SearchResult run() {
        const auto start = std::chrono::steady_clock::now();
        SearchResult result;
        auto finish = [&]() {
            result.stats = stats_;
            result.stats.stored = live_;
            result.stats.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return result;
        };

        SymbolicMarking m0 = initial_symbolic(net_);
        const bool initial_hit = eval_predicate(net_, m0, body_);
        const std::size_t root = add(std::move(m0), std::nullopt, std::nullopt);
        if (initial_hit) {
            found(result, root);
            return finish();
        }

        bool exhausted = false;
        while (!waiting_.empty()) {
            if (options_.timeout.count() > 0 &&
                std::chrono::steady_clock::now() - start >= options_.timeout) {
                result.verdict = Verdict::Inconclusive;
                result.reason = LimitReason::TimeLimit;
                return finish();
            }
            const std::size_t id = select_next(waiting_, options_.strategy);
            Entry& e = *entries_[id];
            if (e.status == Status::Evicted) continue;
            e.status = Status::Passed;
            --live_waiting_;
            ++stats_.explored;

            SuccessorSet succ = successors(net_, e.node.marking);
            exhausted = exhausted || succ.bound_exhausted;
            for (Successor& s : succ.items) {
                ++stats_.successors;
                auto entry = std::make_unique<Entry>();
                entry->node.marking = std::move(s.marking);
                entry->counts = place_counts(net_, entry->node.marking.placement);
                entry->view = make_view(net_, entry->node.marking, p_inc_);
                entry->view.marking = &entry->node.marking;
                if (covered(*entry)) {
                    ++stats_.inclusion_hits;
                    continue;
                }
                evict_below(*entry);
                const bool hit = eval_predicate(net_, entry->node.marking, body_);
                entry->node.parent = id;
                entry->node.via = PathStep{s.transition, std::move(s.binding)};
                const std::size_t nid = insert(std::move(entry));
                if (hit) {
                    found(result, nid);
                    return finish();
                }
                if (options_.max_states > 0 && live_ > options_.max_states) {
                    result.verdict = Verdict::Inconclusive;
                    result.reason = LimitReason::StateLimit;
                    return finish();
                }
            }
        }
        result.witness_found = false;
        if (exhausted) {
            result.verdict = Verdict::Inconclusive;
            result.reason = LimitReason::TokenBound;
        } else {
            result.verdict = Verdict::NotSatisfied;
        }
        return finish();
    }

    std::vector<PathStep> path_to(std::size_t id) const {
        std::vector<PathStep> path;
        for (std::optional<std::size_t> cur = id; cur; cur = entries_[*cur]->node.parent) {
            const SearchNode& n = entries_[*cur]->node;
            if (n.via) path.push_back(*n.via);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    std::size_t add(SymbolicMarking m, std::optional<std::size_t> parent, std::optional<PathStep> via) {
        auto entry = std::make_unique<Entry>();
        entry->node.marking = std::move(m);
        entry->node.parent = parent;
        entry->node.via = std::move(via);
        entry->counts = place_counts(net_, entry->node.marking.placement);
        entry->view = make_view(net_, entry->node.marking, p_inc_);
        entry->view.marking = &entry->node.marking;
        return insert(std::move(entry));
    }

    std::size_t insert(std::unique_ptr<Entry> entry) {
        const std::size_t id = entries_.size();
        entry->node.id = id;
        entry->status = Status::Waiting;
        buckets_[entry->counts].push_back(id);
        entries_.push_back(std::move(entry));
        waiting_.push_back(id);
        ++live_;
        ++live_waiting_;
        ++stats_.inserted;
        stats_.max_waiting = std::max(stats_.max_waiting, live_waiting_);
        return id;
    }

    bool covered(const Entry& fresh) const {
        for (const auto& [counts, ids] : buckets_) {
            if (!dominated(fresh.counts, counts)) continue;
            for (std::size_t id : ids) {
                if (included(net_, fresh.view, entries_[id]->view)) return true;
            }
        }
        return false;
    }

    void evict_below(const Entry& fresh) {
        for (auto it = buckets_.begin(); it != buckets_.end();) {
            if (!dominated(it->first, fresh.counts)) {
                ++it;
                continue;
            }
            auto& ids = it->second;
            std::erase_if(ids, [&](std::size_t id) {
                Entry& old = *entries_[id];
                if (!included(net_, old.view, fresh.view)) return false;
                if (old.status == Status::Waiting) --live_waiting_;
                old.status = Status::Evicted;
                --live_;
                ++stats_.evictions;
                return true;
            });
            it = ids.empty() ? buckets_.erase(it) : std::next(it);
        }
    }

    void found(SearchResult& result, std::size_t id) {
        result.witness_found = true;
        result.verdict = Verdict::Satisfied;
        result.path = path_to(id);
        if (options_.trace) result.trace = concretize_trace(net_, result.path, &body_);
    }

    const TimedArcPetriNet& net_;
    const Predicate& body_;
    const PlaceSet& p_inc_;
    const SearchOptions& options_;

    std::vector<std::unique_ptr<Entry>> entries_;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets_;
    std::deque<std::size_t> waiting_;
    std::size_t live_ = 0;
    std::size_t live_waiting_ = 0;
    SearchStats stats_;
};

} // namespace

SearchResult reach(const TimedArcPetriNet& net, const Query& query, const SearchOptions& options) {
    const Query bound{query.quantifier, bind(query.body, net)};
    const SearchGoal goal = dualize(bound);
    const PlaceSet p_inc = inclusion_set(net, goal.body, options);

    Engine engine(net, goal.body, p_inc, options);
    SearchResult result = engine.run();
    if (goal.flip && result.reason == LimitReason::None) {
        result.verdict = result.verdict == Verdict::Satisfied ? Verdict::NotSatisfied
                                                              : Verdict::Satisfied;
    }
    return result;
}

namespace {

RationalZone::Entry weak_entry(const Rational& v) { return {v, false, false}; }

} // namespace

TimedTrace concretize_trace(const TimedArcPetriNet& net, std::span<const PathStep> path,
                            const Predicate* goal) {
    const std::size_t n = path.size();
    const std::size_t dim = static_cast<std::size_t>(net.bound()) + 1;

    // Forward pass with the identity abstraction: F[k] is the zone right
    // after the k-th firing, pre[k] the delayed zone restricted to its guards.
    std::vector<Placement> places(n + 1);
    std::vector<Dbm> fired(n + 1);
    std::vector<Dbm> pre(n + 1);
    places[0] = net.initial_placement();
    fired[0] = Dbm::zero(dim);
    Dbm delayed = delay_zone(net, places[0], fired[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        const PathStep& step = path[k - 1];
        auto g = intersect(delayed, guard_zone(net, places[k - 1], step.binding, step.transition));
        auto f = fire_zone(net, places[k - 1], delayed, step.transition, step.binding);
        if (!g || !f) {
            throw InternalTraceError("symbolic path is not executable without extrapolation at step " +
                                     std::to_string(k));
        }
        pre[k] = std::move(*g);
        fired[k] = std::move(*f);
        places[k] = move_tokens(net, places[k - 1], step.transition, step.binding);
        delayed = delay_zone(net, places[k], fired[k]);
    }

    // Backward pass: pick the final valuation, then undo each firing and the
    // delay before it.
    std::vector<Rational> u = RationalZone(fired[n]).sample();
    std::vector<TraceStep> reversed;
    for (std::size_t k = n; k >= 1; --k) {
        const PathStep& step = path[k - 1];
        RationalZone before(pre[k]);
        const auto resets = reset_clocks(net, step.transition, step.binding);
        for (Clock c = 1; c < dim; ++c) {
            if (std::find(resets.begin(), resets.end(), c) != resets.end()) continue;
            if (!before.fix(c, u[c])) throw InternalTraceError("cannot undo firing");
        }
        const std::vector<Rational> w = before.sample();

        const RationalZone origin(fired[k - 1]);
        RationalZone::Entry lower = weak_entry(Rational(0));
        RationalZone::Entry upper{};
        for (Clock i = 1; i < dim; ++i) {
            const auto& hi_i = origin.at(i, 0);
            if (!hi_i.infinite) {
                const RationalZone::Entry lo{w[i] - hi_i.value, hi_i.strict, false};
                if (lo.value > lower.value || (lo.value == lower.value && lo.strict)) lower = lo;
            }
            const auto& lo_i = origin.at(0, i);
            if (!lo_i.infinite) {
                const RationalZone::Entry hi{w[i] + lo_i.value, lo_i.strict, false};
                if (hi.tighter_than(upper)) upper = hi;
            }
        }
        const Rational d = RationalZone::pick(lower, upper);
        u.assign(dim, Rational(0));
        for (Clock i = 1; i < dim; ++i) u[i] = w[i] - d;

        reversed.push_back(TraceStep::fire(step.transition, step.binding));
        reversed.push_back(TraceStep::wait(d));
    }
    TimedTrace trace;
    if (n == 0) {
        trace.steps.push_back(TraceStep::wait(Rational(0)));
    } else {
        trace.steps.assign(reversed.rbegin(), reversed.rend());
    }

    try {
        const ConcreteMarking last = replay(net, trace);
        if (goal && !eval_predicate(net, last, *goal)) {
            throw InternalTraceError("trace does not end in a goal marking");
        }
    } catch (const SemanticsError& e) {
        throw InternalTraceError(std::string("trace replay failed: ") + e.what());
    }
    return trace;
}

ConcreteMarking replay(const TimedArcPetriNet& net, const TimedTrace& trace) {
    ConcreteMarking m = ConcreteMarking::initial(net);
    for (const TraceStep& s : trace.steps) {
        if (s.kind == TraceStep::Kind::Delay) {
            m = delay(net, m, s.delay);
        } else {
            m = fire(net, m, s.transition, s.binding);
        }
    }
    return m;
}

} // namespace tapn
