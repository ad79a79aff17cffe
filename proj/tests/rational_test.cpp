#include <gtest/gtest.h>

#include "plumb/errors.hpp"
#include "plumb/rational.hpp"

using namespace plumb;

TEST(Rational, FormatsInLowestTermsWithSignOnNumerator) {
  EXPECT_EQ(format_rational(make_rational(2, 4)), "1/2");
  EXPECT_EQ(format_rational(make_rational(3, -6)), "-1/2");
  EXPECT_EQ(format_rational(make_rational(-4, 2)), "-2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
}

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("7/3"), make_rational(7, 3));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_EQ(parse_rational("+2/4"), make_rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/"), Error);
}

TEST(Rational, FixedFormattingRoundsHalfAwayFromZero) {
  EXPECT_EQ(format_fixed(make_rational(1, 3), 6), "0.333333");
  EXPECT_EQ(format_fixed(make_rational(2, 3), 6), "0.666667");
  EXPECT_EQ(format_fixed(make_rational(-2, 3), 6), "-0.666667");
  EXPECT_EQ(format_fixed(make_rational(1, 2000000), 6), "0.000001");
  EXPECT_EQ(format_fixed(make_rational(-1, 4000000), 6), "0.000000");
  EXPECT_EQ(format_fixed(Rational(512), 6), "512.000000");
  EXPECT_EQ(format_fixed(make_rational(5, 2), 0), "3");
}
