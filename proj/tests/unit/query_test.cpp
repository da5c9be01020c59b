#include <gtest/gtest.h>

#include "random_nets.h"
#include "tapn/net_format.h"
#include "tapn/query.h"

using namespace tapn;

namespace {

TimedArcPetriNet transport() { return load_net(std::string(TAPN_MODELS_DIR) + "/transport.tapn").net; }

using R = Relation;

Predicate atom(const char* p, R r, std::int64_t n) { return Predicate::atom(p, r, n); }

QueryError::Kind error_kind(const char* text) {
    try {
        parse_query(text);
    } catch (const QueryError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed: " << text;
    return QueryError::Kind::Syntax;
}

} // namespace

TEST(Query, ParseAtoms) {
    const auto q = parse_query("EF p4 >= 1");
    EXPECT_EQ(q.quantifier, Quantifier::EF);
    EXPECT_EQ(q.body, atom("p4", R::GreaterEq, 1));
    EXPECT_EQ(parse_predicate("x < 2"), atom("x", R::Less, 2));
    EXPECT_EQ(parse_predicate("x <= 2"), atom("x", R::LessEq, 2));
    EXPECT_EQ(parse_predicate("x = 2"), atom("x", R::Equal, 2));
    EXPECT_EQ(parse_predicate("x == 2"), atom("x", R::Equal, 2));
    EXPECT_EQ(parse_predicate("x != 2"), atom("x", R::NotEqual, 2));
    EXPECT_EQ(parse_predicate("x > 2"), atom("x", R::Greater, 2));
}

TEST(Query, ParseConnectives) {
    const auto q = parse_query("AG (buf <= 5 and err = 0)");
    EXPECT_EQ(q.quantifier, Quantifier::AG);
    EXPECT_EQ(q.body, Predicate::conjunction(atom("buf", R::LessEq, 5), atom("err", R::Equal, 0)));
    // "and" binds tighter than "or".
    EXPECT_EQ(parse_predicate("a > 0 || b > 0 && c > 0"),
              Predicate::disjunction(atom("a", R::Greater, 0),
                                     Predicate::conjunction(atom("b", R::Greater, 0), atom("c", R::Greater, 0))));
    EXPECT_EQ(parse_predicate("(a > 0 or b > 0) and c > 0"),
              Predicate::conjunction(Predicate::disjunction(atom("a", R::Greater, 0), atom("b", R::Greater, 0)),
                                     atom("c", R::Greater, 0)));
}

TEST(Query, Errors) {
    EXPECT_EQ(error_kind("EF p1 ~ 3"), QueryError::Kind::Syntax);
    EXPECT_EQ(error_kind("EF p1 =< 3"), QueryError::Kind::UnknownRelation);
    EXPECT_EQ(error_kind("EF p4 >"), QueryError::Kind::Syntax);
    EXPECT_EQ(error_kind("EG p4 > 1"), QueryError::Kind::Syntax);
    EXPECT_EQ(error_kind("EF (p4 > 1"), QueryError::Kind::Syntax);
    EXPECT_EQ(error_kind("EF p4 > 1 p5"), QueryError::Kind::Syntax);
    try {
        parse_query("EF p1 ~ 3");
    } catch (const QueryError& e) {
        EXPECT_EQ(e.column(), 7);
    }
}

TEST(Query, ToStringRoundTrip) {
    for (const char* text : {"EF p4 >= 1", "AG (a = 0 or b != 2) and c < 3", "EF a > 0 or b > 0 and c <= 1"}) {
        const auto q = parse_query(text);
        EXPECT_EQ(parse_query(to_string(q)).body, q.body) << text;
    }
    EXPECT_EQ(to_string(parse_query("AG (a = 0 or b != 2) and c < 3")), "AG (a = 0 or b != 2) and c < 3");
}

TEST(Query, EvalOnPlacement) {
    const auto net = transport();
    auto id = [&](const char* n) { return *net.find_place(n); };
    const Placement fired{id("p4"), id("p3"), id("p5"), id("p6")};
    EXPECT_TRUE(eval_predicate(net, fired, bind(parse_predicate("p4 = 1"), net)));
    EXPECT_FALSE(eval_predicate(net, net.initial_placement(), parse_predicate("p3 >= 1")));
    EXPECT_FALSE(eval_predicate(net, net.initial_placement(), parse_predicate("p3 != 0")));
    EXPECT_TRUE(eval_predicate(net, net.initial_placement(), parse_predicate("p1 = 1 and p2 = 1")));
    EXPECT_THROW(bind(parse_predicate("nope > 0"), net), UnknownPlaceError);
    EXPECT_THROW(eval_predicate(net, fired, parse_predicate("nope > 0")), UnknownPlaceError);
}

TEST(Query, Dualize) {
    auto ef = dualize(parse_query("EF p >= 1"));
    EXPECT_EQ(ef.body, atom("p", R::GreaterEq, 1));
    EXPECT_FALSE(ef.flip);
    auto ag = dualize(parse_query("AG p <= 5"));
    EXPECT_EQ(ag.body, atom("p", R::Greater, 5));
    EXPECT_TRUE(ag.flip);
    auto both = dualize(parse_query("AG (a = 0 and b = 0)"));
    EXPECT_EQ(both.body, Predicate::disjunction(atom("a", R::NotEqual, 0), atom("b", R::NotEqual, 0)));
}

TEST(Query, ComplementIsInvolution) {
    for (R r : {R::Less, R::LessEq, R::Equal, R::NotEqual, R::GreaterEq, R::Greater}) {
        EXPECT_EQ(complement(complement(r)), r);
        EXPECT_NE(complement(r), r);
    }
}

TEST(Query, MonotonicityBreakingPlaces) {
    using S = std::set<std::string>;
    EXPECT_EQ(monotonicity_breaking_places(parse_predicate("p >= 1 or q > 2")), S{});
    EXPECT_EQ(monotonicity_breaking_places(parse_predicate("p <= 5")), S{"p"});
    EXPECT_EQ(monotonicity_breaking_places(parse_predicate("p = 0 and q >= 1")), S{"p"});
    EXPECT_EQ(monotonicity_breaking_places(parse_predicate("p < 1 or q != 1")), (S{"p", "q"}));
}

TEST(QueryProperty, NegationComplementsEvaluation) {
    tapn::testing::Rng rng(51);
    for (int n = 0; n < 100; ++n) {
        const auto net = tapn::testing::random_net(rng);
        const auto pred = bind(tapn::testing::random_predicate(rng, net, 3), net);
        const auto neg = bind(negate(pred), net);
        EXPECT_EQ(negate(negate(pred)), pred);
        for (int k = 0; k < 20; ++k) {
            Placement p(static_cast<std::size_t>(net.bound()));
            for (auto& x : p) x = static_cast<PlaceId>(rng() % (net.place_count() + 1)) - 1;
            EXPECT_NE(eval_predicate(net, p, pred), eval_predicate(net, p, neg)) << to_string(pred);
        }
    }
}
