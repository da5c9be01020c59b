#include <gtest/gtest.h>

#include <stdexcept>

#include "tapn/interval.h"
#include "tapn/net_format.h"
#include "tapn/rational.h"

using namespace tapn;

TEST(TimeInterval, DefaultIsZeroToInfinity) {
    const TimeInterval iv;
    EXPECT_TRUE(iv.is_trivial());
    EXPECT_TRUE(iv.contains_zero());
    EXPECT_TRUE(iv.is_unbounded_above());
    EXPECT_EQ(iv.to_string(), "[0,inf)");
    EXPECT_EQ(iv.max_constant(), 0);
}

TEST(TimeInterval, ContainsRespectsStrictness) {
    const TimeInterval iv = TimeInterval::make(1, true, 6, false);
    EXPECT_FALSE(iv.contains(Rational(1)));
    EXPECT_TRUE(iv.contains(Rational(11, 10)));
    EXPECT_TRUE(iv.contains(Rational(6)));
    EXPECT_FALSE(iv.contains(Rational(61, 10)));
    EXPECT_EQ(iv.to_string(), "(1,6]");
    EXPECT_EQ(iv.max_constant(), 6);
}

TEST(TimeInterval, PointIntervalMustBeClosed) {
    EXPECT_NO_THROW(TimeInterval::closed(2, 2));
    EXPECT_THROW(TimeInterval::make(2, true, 2, false), std::invalid_argument);
    EXPECT_THROW(TimeInterval::make(2, false, 2, true), std::invalid_argument);
}

TEST(TimeInterval, RejectsEmptyAndNegative) {
    EXPECT_THROW(TimeInterval::make(3, false, 2, false), std::invalid_argument);
    EXPECT_THROW(TimeInterval::make(-1, false, 2, false), std::invalid_argument);
}

TEST(TimeInterval, UnboundedUpperIsAlwaysOpen) {
    EXPECT_THROW(TimeInterval::make(2, false, std::nullopt, false), std::invalid_argument);
    const TimeInterval iv = TimeInterval::make(2, false, std::nullopt, true);
    EXPECT_TRUE(iv.upper_strict());
    EXPECT_EQ(iv.to_string(), "[2,inf)");
    EXPECT_EQ(iv.max_constant(), 2);
}

TEST(ParseInterval, AllShapes) {
    EXPECT_EQ(parse_interval("[2,3]"), TimeInterval::closed(2, 3));
    EXPECT_EQ(parse_interval("(1,6]"), TimeInterval::make(1, true, 6, false));
    EXPECT_EQ(parse_interval("[0,3)"), TimeInterval::make(0, false, 3, true));
    EXPECT_EQ(parse_interval("(0,1)"), TimeInterval::make(0, true, 1, true));
    EXPECT_EQ(parse_interval("[4,inf)"), TimeInterval::make(4, false, std::nullopt, true));
    EXPECT_EQ(parse_interval("(4,inf)"), TimeInterval::make(4, true, std::nullopt, true));
    EXPECT_EQ(parse_interval("[5,5]"), TimeInterval::closed(5, 5));
}

TEST(ParseInterval, RejectsMalformed) {
    EXPECT_THROW(parse_interval("(3,2]"), ParseError);
    EXPECT_THROW(parse_interval("[1,inf]"), ParseError);
    EXPECT_THROW(parse_interval("[1,2"), ParseError);
    EXPECT_THROW(parse_interval("1,2]"), ParseError);
    EXPECT_THROW(parse_interval("[a,2]"), ParseError);
    EXPECT_THROW(parse_interval("(2,2]"), ParseError);
}

TEST(ParseInterval, ReportsColumn) {
    try {
        parse_interval("[1,x]", 7, 10);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7);
        EXPECT_EQ(e.column(), 13);
    }
}

TEST(ParseInvariant, Shorthands) {
    EXPECT_EQ(parse_invariant("<3"), TimeInterval::make(0, false, 3, true));
    EXPECT_EQ(parse_invariant("<=3"), TimeInterval::closed(0, 3));
    EXPECT_EQ(parse_invariant("[0,5]"), TimeInterval::closed(0, 5));
    EXPECT_THROW(parse_invariant("<0"), ParseError);
}

TEST(RationalText, TerminatingDecimalsAndFractions) {
    EXPECT_EQ(to_string(Rational(5, 2)), "2.5");
    EXPECT_EQ(to_string(Rational(3)), "3");
    EXPECT_EQ(to_string(Rational(-1, 4)), "-0.25");
    EXPECT_EQ(to_string(Rational(7, 3)), "7/3");
    EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
    EXPECT_EQ(parse_rational("-1/4"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("7/3"), Rational(7, 3));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
