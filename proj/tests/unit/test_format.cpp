#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>
#include <random>

#include "cascade/format.hpp"

using namespace cascade;

TEST(FormatFull, ShortestRoundTrip) {
    EXPECT_EQ(format_full(0.3), "0.3");
    EXPECT_EQ(format_full(0.625), "0.625");
    EXPECT_EQ(format_full(2.0), "2");
    EXPECT_EQ(format_full(-0.0), "0");
    EXPECT_EQ(format_full(1e-20), "1e-20");
}

TEST(FormatFull, ParsesBackExactly) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng);
        EXPECT_EQ(std::strtod(format_full(v).c_str(), nullptr), v);
    }
}

TEST(FormatRounded, SixSignificantDigits) {
    EXPECT_EQ(format_rounded(0.52082206598161), "0.520822");
    EXPECT_EQ(format_rounded(2.8936046511628), "2.8936");
    EXPECT_EQ(format_rounded(0.0), "0");
}
