#include <gtest/gtest.h>

#include "random_nets.h"
#include "tapn/net_format.h"
#include "tapn/oracle.h"
#include "tapn/search.h"

using namespace tapn;

namespace {

LoadedNet model(const char* name) { return load_net(std::string(TAPN_MODELS_DIR) + "/" + name + ".tapn"); }

SearchOptions with_trace(SearchStrategy s = SearchStrategy::BFS) {
    SearchOptions o;
    o.strategy = s;
    o.trace = true;
    return o;
}

std::vector<Rational> delays(const TimedTrace& t) {
    std::vector<Rational> out;
    for (const auto& s : t.steps) {
        if (s.kind == TraceStep::Kind::Delay) out.push_back(s.delay);
    }
    return out;
}

const char* kChain = R"(net chain
bound 3
places
  a inv <=1
  b inv <=1
  c
transitions
  t1
  t2
arcs
  a -> t1 [1,1]
  t1 -> b
  b -> t2 [1,1]
  t2 -> c
marking
  a
)";

} // namespace

TEST(Search, SelectNext) {
    std::deque<std::size_t> w{1, 3, 5};
    EXPECT_EQ(select_next(w, SearchStrategy::BFS), 1u);
    EXPECT_EQ(select_next(w, SearchStrategy::DFS), 5u);
    EXPECT_EQ(w, (std::deque<std::size_t>{3}));
}

TEST(Search, TransportExampleTrace) {
    const auto net = model("transport").net;
    const auto r = reach(net, parse_query("EF p4 = 1"), with_trace());
    EXPECT_EQ(r.verdict, Verdict::Satisfied);
    ASSERT_TRUE(r.trace.has_value());
    ASSERT_EQ(r.trace->steps.size(), 2u);
    EXPECT_EQ(r.trace->steps[0].kind, TraceStep::Kind::Delay);
    EXPECT_EQ(r.trace->steps[0].delay, Rational(5, 2));
    EXPECT_EQ(r.trace->steps[1].kind, TraceStep::Kind::Fire);
    EXPECT_EQ(r.trace->steps[1].transition, 0);
    const auto end = replay(net, *r.trace);
    EXPECT_TRUE(eval_predicate(net, end, bind(parse_predicate("p4 = 1"), net)));
}

TEST(Search, AgViolatedAtStart) {
    const auto net = model("transport").net;
    const auto r = reach(net, parse_query("AG p1 = 0"), with_trace());
    EXPECT_EQ(r.verdict, Verdict::NotSatisfied);
    EXPECT_TRUE(r.witness_found);
    ASSERT_TRUE(r.trace.has_value());
    ASSERT_EQ(r.trace->steps.size(), 1u);
    EXPECT_EQ(r.trace->steps[0].delay, Rational(0));
}

TEST(Search, AgHolds) {
    const auto net = model("transport").net;
    const auto r = reach(net, parse_query("AG p4 <= 1 and p3 <= 1"));
    EXPECT_EQ(r.verdict, Verdict::Satisfied);
    EXPECT_FALSE(r.witness_found);
    EXPECT_FALSE(r.trace.has_value());
}

TEST(Search, TokenBoundMakesInconclusive) {
    const auto net = model("transport").net.with_bound(2);
    const auto r = reach(net, parse_query("EF p4 = 1"));
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.reason, LimitReason::TokenBound);
    const auto ag = reach(net, parse_query("AG p4 = 0"));
    EXPECT_EQ(ag.verdict, Verdict::Inconclusive);
}

TEST(Search, StateLimit) {
    const auto net = model("producer_consumer").net;
    SearchOptions o;
    o.max_states = 2;
    const auto r = reach(net, parse_query("EF buffer >= 7"), o);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.reason, LimitReason::StateLimit);
}

TEST(Search, PunctualChainDelays) {
    const auto net = load_net_text(kChain).net;
    for (auto s : {SearchStrategy::BFS, SearchStrategy::DFS}) {
        const auto r = reach(net, parse_query("EF c = 1"), with_trace(s));
        ASSERT_EQ(r.verdict, Verdict::Satisfied);
        ASSERT_TRUE(r.trace.has_value());
        EXPECT_EQ(delays(*r.trace), (std::vector<Rational>{Rational(1), Rational(1)}));
        EXPECT_EQ(r.path.size(), 2u);
    }
}

TEST(Search, InclusionSet) {
    const auto net = model("producer_consumer").net;
    SearchOptions o;
    const auto full = inclusion_set(net, parse_predicate("buffer >= 7"), o);
    EXPECT_EQ(full, all_places(net));
    const auto cut = inclusion_set(net, bind(parse_predicate("buffer <= 7"), net), o);
    EXPECT_FALSE(cut[static_cast<std::size_t>(*net.find_place("buffer"))]);
    o.inclusion = InclusionMode::Off;
    EXPECT_EQ(inclusion_set(net, parse_predicate("buffer >= 7"), o), no_places(net));
    o.inclusion = InclusionMode::Custom;
    o.inclusion_places = {"tickets"};
    const auto custom = inclusion_set(net, parse_predicate("buffer <= 7"), o);
    EXPECT_TRUE(custom[static_cast<std::size_t>(*net.find_place("tickets"))]);
    EXPECT_FALSE(custom[static_cast<std::size_t>(*net.find_place("buffer"))]);
    o.inclusion_places = {"buffer"};
    EXPECT_THROW(inclusion_set(net, parse_predicate("buffer <= 7"), o), InclusionSetError);
    o.inclusion_places = {"nowhere"};
    EXPECT_THROW(inclusion_set(net, parse_predicate("buffer <= 7"), o), InclusionSetError);
}

TEST(Search, InclusionReducesStoredMarkings) {
    const auto net = model("producer_consumer").net;
    SearchOptions off;
    off.inclusion = InclusionMode::Off;
    const auto a = reach(net, parse_query("EF buffer >= 7"), off);
    const auto b = reach(net, parse_query("EF buffer >= 7"));
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_LT(b.stats.stored, a.stats.stored);
}

TEST(Search, DeadlineMonitor) {
    const auto net = model("deadline_monitor").net;
    EXPECT_EQ(reach(net, parse_query("EF alarm >= 1")).verdict, Verdict::Satisfied);
    EXPECT_EQ(reach(net, parse_query("EF finished >= 1 and late >= 1")).verdict, Verdict::NotSatisfied);
}

TEST(Search, ReplayRejectsBadTrace) {
    const auto net = model("transport").net;
    TimedTrace t;
    t.steps = {TraceStep::wait(Rational(1)), TraceStep::fire(0, {0, 1, 2, 3})};
    EXPECT_THROW(replay(net, t), SemanticsError);
}

TEST(SearchProperty, AgreesWithOracleAndTracesReplay) {
    tapn::testing::Rng rng(61);
    int found = 0;
    for (int n = 0; n < 60; ++n) {
        const auto net = tapn::testing::random_net(rng);
        const auto pred = tapn::testing::random_predicate(rng, net);
        const auto expected = oracle_reach(net, ConcreteMarking::initial(net), bind(pred, net));
        ASSERT_NE(expected, OracleVerdict::DepthExceeded);
        for (auto s : {SearchStrategy::BFS, SearchStrategy::DFS}) {
            const auto r = reach(net, Query{Quantifier::EF, pred}, with_trace(s));
            EXPECT_EQ(r.verdict == Verdict::Satisfied, expected == OracleVerdict::Reachable) << to_string(pred);
            if (r.verdict != Verdict::Satisfied) continue;
            ++found;
            ASSERT_TRUE(r.trace.has_value());
            EXPECT_TRUE(eval_predicate(net, replay(net, *r.trace), bind(pred, net)));
        }
    }
    EXPECT_GT(found, 20);
}
