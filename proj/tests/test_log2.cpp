#include <gtest/gtest.h>

#include <cmath>

#include "horocalc/log2.hpp"

using namespace horocalc;

TEST(Log2Bounds, PowersOfTwoAreTight)
{
    for (unsigned e : {0u, 1u, 5u, 100u})
    {
        Interval i = log2_bounds(Integer(1) << e, 32);
        EXPECT_LE(i.lo, Rational(e));
        EXPECT_GE(i.hi, Rational(e));
        EXPECT_LE(i.hi - i.lo, Rational(1, Integer(1) << 30));
    }
}

TEST(Log2Bounds, EnclosesDoubleValue)
{
    for (long x : {3L, 7L, 10L, 1000L, 123456789L})
    {
        Interval i = log2_bounds(Integer(x), 40);
        double v = std::log2(static_cast<double>(x));
        EXPECT_LE(static_cast<double>(i.lo), v + 1e-12);
        EXPECT_GE(static_cast<double>(i.hi), v - 1e-12);
        EXPECT_LT(static_cast<double>(i.hi - i.lo), 1e-10);
    }
}

TEST(Log2Bounds, Monotone)
{
    Integer big = boost::multiprecision::pow(Integer(3), 200);
    Interval a = log2_bounds(big, 64), b = log2_bounds(big + 1, 64);
    EXPECT_LE(a.lo, b.hi);
    EXPECT_NEAR(a.midpoint(), 200 * std::log2(3.0), 1e-9);
    EXPECT_NEAR(log2_approx(big), 200 * std::log2(3.0), 1e-9);
}

TEST(LogRatio, ExactThresholds)
{
    LogRatio r{Integer(8), Integer(4)};
    EXPECT_TRUE(r.at_most(Rational(3, 2)));
    EXPECT_TRUE(r.at_least(Rational(3, 2)));
    EXPECT_FALSE(r.at_most(Rational(7, 5)));
    LogRatio s{Integer(9), Integer(4)};
    EXPECT_EQ(compare(r, s), -1);
    EXPECT_EQ(compare(s, r), 1);
    EXPECT_EQ(compare(r, r), 0);
}
