#include "tropnp/rational.hpp"

#include <gtest/gtest.h>

using tnp::Rational;

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse(" -7 "), Rational(-7));
  EXPECT_EQ(Rational::parse("+2/3"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("-4/6").str(), "-2/3");
  EXPECT_EQ(Rational(5).str(), "5");
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_EQ(-a, Rational(-1, 3));
}

TEST(Rational, LargeValuesStayExact) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  EXPECT_EQ(big * Rational(7), Rational::parse("123456789012345678901234567890"));
}
