// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "random_nets.h"
#include "tapn/concrete.h"
#include "tapn/dbm.h"
#include "tapn/inclusion.h"
#include "tapn/net_format.h"
#include "tapn/oracle.h"
#include "tapn/rational_zone.h"
#include "tapn/search.h"
#include "tapn/symbolic.h"

#ifndef TAPN_MODELS_DIR
#define TAPN_MODELS_DIR "models"
#endif

using namespace tapn;
using tapn::testing::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Dbm matrix(std::initializer_list<std::initializer_list<Bound>> rows) {
    Dbm d = Dbm::universal(rows.size());
    Clock i = 0;
    for (const auto& row : rows) {
        Clock j = 0;
        for (Bound b : row) d.at(i, j++) = b;
        ++i;
    }
    return d;
}

// Shared randomized suite: nets, EF queries and their oracle answers.
struct SuiteCase {
    TimedArcPetriNet net;
    Predicate goal;
    OracleVerdict oracle;
};

double suite_seconds = 0.0;

const std::vector<SuiteCase>& suite() {
    static const std::vector<SuiteCase> cases = [] {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<SuiteCase> out;
        Rng rng(20120917);
        for (int n = 0; n < 200; ++n) {
            TimedArcPetriNet net = tapn::testing::random_net(rng);
            Predicate goal = tapn::testing::random_predicate(rng, net);
            const OracleVerdict v = oracle_reach(net, ConcreteMarking::initial(net), goal);
            out.push_back({std::move(net), std::move(goal), v});
        }
        suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }();
    return cases;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Every point of ext(D) has a partner in D: equal ages below the constant,
// both above it otherwise.
bool has_witness(const Dbm& d, const std::vector<Rational>& v, const std::vector<std::int64_t>& mc) {
    RationalZone rz(d);
    for (Clock i = 1; i < d.dimension(); ++i) {
        const Rational c(mc[i]);
        const bool ok = v[i] <= c ? rz.fix(i, v[i]) : rz.constrain(0, i, -c, true);
        if (!ok) return false;
    }
    return true;
}

Outcome extrapolation_golden() {
    const Dbm d = matrix({{Bound::weak(0), Bound::weak(-1), Bound::weak(-3)},
                          {Bound::weak(5), Bound::weak(0), Bound::weak(1)},
                          {Bound::weak(6), Bound::weak(3), Bound::weak(0)}});
    const Dbm expected = matrix({{Bound::weak(0), Bound::weak(-1), Bound::strict(-2)},
                                 {Bound::infinity(), Bound::weak(0), Bound::infinity()},
                                 {Bound::infinity(), Bound::infinity(), Bound::weak(0)}});
    const std::vector<std::int64_t> mc{0, 1, 2};
    const auto t0 = std::chrono::steady_clock::now();
    const Dbm got = extrapolate(d, mc);
    const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = got == expected && us < 1000.0;
    o.detail = o.pass ? fmt("exact match in %.1f us", us) : "got\n" + render_table(got);
    return o;
}

Outcome transport_firing_example() {
    const LoadedNet fig = load_net(std::string(TAPN_MODELS_DIR) + "/transport.tapn");
    const TimedArcPetriNet& net = fig.net;
    const auto t0 = std::chrono::steady_clock::now();
    const PlaceId p1 = *net.find_place("p1");
    const PlaceId p2 = *net.find_place("p2");
    const ConcreteMarking m = ConcreteMarking::make(
        net, {p1, p2, kBottom, kBottom}, {Rational(21, 10), Rational(34, 10), Rational(0), Rational(0)});
    const TransitionId t = *net.find_transition("t");
    const auto sets = enabled_token_sets(net, m, t);
    bool ok = sets.size() == 1;
    if (ok) {
        const ConcreteMarking after = fire(net, m, t, sets.front());
        const Placement want{*net.find_place("p4"), *net.find_place("p3"), *net.find_place("p5"),
                             *net.find_place("p6")};
        ok = after.placement == want && after.ages[0] == Rational(21, 10) &&
             after.ages[1] == Rational(0);
    }
    const ConcreteMarking later = delay(net, m, Rational(9, 10));
    ok = ok && later.ages[0] == Rational(3) && later.ages[1] == Rational(43, 10) &&
         enabled_token_sets(net, later, t).empty();
    const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
    return {ok && us < 1000.0, fmt("enabled, fired and disabled as expected in %.1f us", us)};
}

struct RangeTally {
    std::size_t zones = 0;
    std::size_t closed_violations = 0;
    std::size_t raw_violations = 0;
    std::string example;
};

std::size_t out_of_range(const Dbm& d, std::int64_t gc) {
    std::size_t bad = 0;
    for (Clock i = 0; i < d.dimension(); ++i) {
        for (Clock j = 0; j < d.dimension(); ++j) {
            const Bound b = d(i, j);
            if (!b.is_infinity() && (b.value() < -gc || b.value() > gc)) ++bad;
        }
    }
    return bad;
}

Outcome extrapolation_sandwich(RangeTally& range) {
    Rng rng(4242);
    std::size_t cases = 0;
    std::size_t subset_fail = 0;
    std::size_t witness_fail = 0;
    std::size_t points = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (; cases < 2000; ++cases) {
        const std::size_t clocks = 1 + rng() % 4;
        const Dbm d = tapn::testing::random_dbm(rng, clocks, 7);
        std::vector<std::int64_t> mc(clocks + 1, 0);
        std::int64_t gc = 0;
        for (Clock i = 1; i <= clocks; ++i) {
            mc[i] = static_cast<std::int64_t>(rng() % 5);
            gc = std::max(gc, mc[i]);
        }
        const Dbm raw = extrapolate(d, mc);
        Dbm e = raw;
        if (!e.close()) {
            ++subset_fail;
            continue;
        }
        if (!zone_subset(d, raw) || !zone_subset(d, e)) ++subset_fail;
        ++range.zones;
        range.raw_violations += out_of_range(raw, gc);
        if (const std::size_t bad = out_of_range(e, gc)) {
            range.closed_violations += bad;
            if (range.example.empty()) range.example = "ext(D) =\n" + render_table(raw) + "closed =\n" + render_table(e);
        }
        for (int s = 0; s < 4; ++s) {
            const auto v = s == 0 ? sample_valuation(e) : tapn::testing::random_point(rng, e);
            ++points;
            if (!has_witness(d, v, mc)) ++witness_fail;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = subset_fail == 0 && witness_fail == 0 && secs < 10.0;
    o.detail = fmt("%zu DBMs, %zu sampled points, %zu subset violations, %zu witness violations, %.2f s",
                   cases, points, subset_fail, witness_fail, secs);
    return o;
}

struct EquivalenceTally {
    std::size_t runs = 0;
    std::size_t mismatches = 0;
    std::size_t oracle_unknown = 0;
    std::size_t reachable = 0;
    std::size_t traces = 0;
    std::size_t trace_failures = 0;
    std::string first_mismatch;
};

Outcome oracle_equivalence(EquivalenceTally& tally) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& cases = suite();
    for (std::size_t n = 0; n < cases.size(); ++n) {
        const SuiteCase& c = cases[n];
        if (c.oracle == OracleVerdict::DepthExceeded) {
            ++tally.oracle_unknown;
            continue;
        }
        const bool expected = c.oracle == OracleVerdict::Reachable;
        if (expected) ++tally.reachable;
        for (SearchStrategy strategy : {SearchStrategy::BFS, SearchStrategy::DFS}) {
            for (InclusionMode mode : {InclusionMode::Off, InclusionMode::Full}) {
                SearchOptions options;
                options.strategy = strategy;
                options.inclusion = mode;
                options.trace = true;
                ++tally.runs;
                SearchResult r;
                try {
                    r = reach(c.net, Query{Quantifier::EF, c.goal}, options);
                } catch (const InternalTraceError& e) {
                    ++tally.trace_failures;
                    continue;
                }
                // Inconclusive means the goal was not found within the bound.
                const bool found = r.verdict == Verdict::Satisfied;
                if (found != expected) {
                    ++tally.mismatches;
                    if (tally.first_mismatch.empty()) {
                        tally.first_mismatch = fmt(" first mismatch: case %zu (%s, inclusion %s)", n,
                                                   to_string(strategy),
                                                   mode == InclusionMode::Off ? "off" : "full");
                    }
                }
                if (found) {
                    ++tally.traces;
                    bool valid = r.trace.has_value();
                    if (valid) {
                        try {
                            const ConcreteMarking last = replay(c.net, *r.trace);
                            valid = eval_predicate(c.net, last, bind(c.goal, c.net));
                        } catch (const SemanticsError&) {
                            valid = false;
                        }
                    }
                    if (!valid) ++tally.trace_failures;
                }
            }
        }
    }
    const double secs =
        suite_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = tally.mismatches == 0 && tally.oracle_unknown == 0 && tally.trace_failures == 0 && secs < 60.0;
    o.detail = fmt("%zu nets (%zu reachable), %zu engine runs, %zu disagreements, %zu oracle "
                   "give-ups, %.2f s",
                   cases.size(), tally.reachable, tally.runs, tally.mismatches, tally.oracle_unknown, secs) +
               tally.first_mismatch;
    return o;
}

// The net with the smallest bound in [k, k+3] under which no reachable
// marking runs out of unused tokens, i.e. the net is bounded by it.
std::optional<TimedArcPetriNet> respecting_bound(const TimedArcPetriNet& net) {
    constexpr std::size_t kLimit = 2000;
    for (int k = net.bound(); k <= net.bound() + 3; ++k) {
        TimedArcPetriNet candidate = net.with_bound(k);
        const auto markings = tapn::testing::reachable_markings(candidate, kLimit);
        if (markings.size() >= kLimit) continue;
        bool exhausted = false;
        for (const auto& m : markings) exhausted = exhausted || successors(candidate, m).bound_exhausted;
        if (!exhausted) return candidate;
    }
    return std::nullopt;
}

Outcome monotonicity() {
    std::size_t pairs = 0;
    std::size_t violations = 0;
    std::size_t nets = 0;
    std::size_t unbounded = 0;
    std::size_t count_mismatches = 0;
    std::string first;
    const auto& cases = suite();
    for (std::size_t n = 0; n < cases.size(); ++n) {
        const auto bounded = respecting_bound(cases[n].net);
        if (!bounded) {
            ++unbounded;
            continue;
        }
        ++nets;
        const TimedArcPetriNet& net = *bounded;
        const auto markings = tapn::testing::reachable_markings(net, 60);
        std::vector<SuccessorSet> succ;
        for (const auto& m : markings) succ.push_back(successors(net, m));
        for (const PlaceSet& p_inc : {all_places(net), no_places(net)}) {
            std::vector<InclusionView> views;
            for (const auto& m : markings) views.push_back(make_view(net, m, p_inc));
            for (std::size_t a = 0; a < markings.size(); ++a) {
                for (std::size_t b = 0; b < markings.size(); ++b) {
                    if (a == b || !included(net, views[a], views[b])) continue;
                    ++pairs;
                    for (const auto& s1 : succ[a].items) {
                        bool matched = false;
                        for (const auto& s2 : succ[b].items) {
                            if (included(net, s1.marking, s2.marking, p_inc)) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ++violations;
                            bool counts_differ = true;
                            for (const auto& s2 : succ[b].items) {
                                const TokenPartition x = partition(net, s1.marking, p_inc);
                                const TokenPartition y = partition(net, s2.marking, p_inc);
                                bool differ = x.eq_counts != y.eq_counts;
                                for (std::size_t p = 0; p < x.inc_counts.size(); ++p) {
                                    differ = differ || x.inc_counts[p] > y.inc_counts[p];
                                }
                                counts_differ = counts_differ && differ;
                            }
                            if (counts_differ) ++count_mismatches;
                            if (first.empty()) first = fmt(" first violation: case %zu", n);
                        }
                    }
                }
            }
        }
    }
    return {violations == 0 && pairs > 0,
            fmt("%zu nets within their token bound (%zu exceed it up to k+3), %zu included pairs, "
                "%zu unmatched successors (%zu where every successor of m2 has different eq/inc "
                "token counts)",
                nets, unbounded, pairs, violations, count_mismatches) +
                first};
}

Outcome predicate_preservation() {
    Rng rng(777);
    std::size_t pairs = 0;
    std::size_t violations = 0;
    for (const SuiteCase& c : suite()) {
        const TimedArcPetriNet& net = c.net;
        const auto markings = tapn::testing::reachable_markings(net, 40);
        for (int q = 0; q < 3; ++q) {
            const Predicate psi = bind(tapn::testing::random_predicate(rng, net), net);
            SearchOptions options;
            const PlaceSet p_inc = inclusion_set(net, psi, options);
            std::vector<InclusionView> views;
            for (const auto& m : markings) views.push_back(make_view(net, m, p_inc));
            for (std::size_t a = 0; a < markings.size(); ++a) {
                if (!eval_predicate(net, markings[a], psi)) continue;
                for (std::size_t b = 0; b < markings.size(); ++b) {
                    if (a == b || !included(net, views[a], views[b])) continue;
                    ++pairs;
                    if (!eval_predicate(net, markings[b], psi)) ++violations;
                }
            }
        }
    }
    return {violations == 0 && pairs > 0,
            fmt("%zu included pairs with a satisfied predicate, %zu violations", pairs, violations)};
}

// Reachable zones are only available after closure.
Outcome finite_range(RangeTally& range) {
    for (const SuiteCase& c : suite()) {
        const std::int64_t gc = c.net.global_constant();
        for (const auto& m : tapn::testing::reachable_markings(c.net, 200)) {
            ++range.zones;
            if (const std::size_t bad = out_of_range(m.zone, gc)) {
                range.closed_violations += bad;
                if (range.example.empty()) range.example = "closed =\n" + render_table(m.zone);
            }
        }
    }
    std::string detail = fmt("%zu re-canonicalized extrapolated zones, %zu entries outside [-gc, gc]; "
                             "%zu outside before re-canonicalization",
                             range.zones, range.closed_violations, range.raw_violations);
    if (!range.example.empty()) detail += "\n" + range.example;
    return {range.closed_violations == 0, detail};
}

Outcome trace_validity(const EquivalenceTally& tally) {
    return {tally.trace_failures == 0 && tally.traces > 0,
            fmt("%zu satisfied runs, %zu traces failed replay", tally.traces, tally.trace_failures)};
}

Outcome inclusion_effectiveness() {
    const LoadedNet pc = load_net(std::string(TAPN_MODELS_DIR) + "/producer_consumer.tapn");
    const Query q = parse_query("EF buffer >= 7");
    SearchOptions off;
    off.inclusion = InclusionMode::Off;
    SearchOptions full;
    full.inclusion = InclusionMode::Full;
    const SearchResult a = reach(pc.net, q, off);
    const SearchResult b = reach(pc.net, q, full);
    const std::size_t interchangeable = static_cast<std::size_t>(pc.net.initial_tokens(*pc.net.find_place("tickets")));
    const bool ok = a.verdict == b.verdict && interchangeable >= 6 && b.stats.stored < a.stats.stored &&
                    2 * b.stats.stored <= a.stats.stored;
    return {ok, fmt("stored %zu with inclusion off, %zu with inclusion full (inserted %zu vs %zu), "
                    "verdicts %s / %s",
                    a.stats.stored, b.stats.stored, a.stats.inserted, b.stats.inserted, to_string(a.verdict),
                    to_string(b.verdict))};
}

Outcome termination_fuzz() {
    Rng rng(99991);
    constexpr std::size_t kBudget = 200000;
    std::size_t exhausted = 0;
    std::size_t max_stored = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n < 1000; ++n) {
        const TimedArcPetriNet net = tapn::testing::random_net(rng, {5, 4, 4, 4});
        // Never satisfiable, so the whole state space is explored.
        const Query q{Quantifier::EF, Predicate::atom(net.place(0).name, Relation::Greater, 1000)};
        SearchOptions options;
        options.strategy = n % 2 ? SearchStrategy::DFS : SearchStrategy::BFS;
        options.max_states = kBudget;
        const SearchResult r = reach(net, q, options);
        if (r.reason == LimitReason::StateLimit || r.reason == LimitReason::TimeLimit) ++exhausted;
        max_stored = std::max(max_stored, r.stats.inserted);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {exhausted == 0, fmt("1000 nets, %zu hit the budget of %zu stored markings, largest search "
                                "inserted %zu, %.2f s",
                                exhausted, kBudget, max_stored, secs)};
}

} // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    };

    RangeTally range;
    EquivalenceTally tally;
    report(1, "extrapolation-golden", extrapolation_golden);
    report(2, "transport-firing-example", transport_firing_example);
    report(3, "extrapolation-sandwich", [&] { return extrapolation_sandwich(range); });
    report(4, "finite-range", [&] { return finite_range(range); });
    report(5, "oracle-equivalence", [&] { return oracle_equivalence(tally); });
    report(6, "monotonicity", monotonicity);
    report(7, "predicate-preservation", predicate_preservation);
    report(8, "trace-validity", [&] { return trace_validity(tally); });
    report(9, "inclusion-effectiveness", inclusion_effectiveness);
    report(10, "termination-fuzz", termination_fuzz);
    return failed;
}
