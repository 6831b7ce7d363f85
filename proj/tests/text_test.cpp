#include "hx/text.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace {

using hx::cplx;
using hx::Hypercomplex;

TEST(TextTest, ParseComplexAcceptsTheUsualShapes) {
    EXPECT_EQ(hx::parse_complex("3"), cplx(3, 0));
    EXPECT_EQ(hx::parse_complex("-2.5e3"), cplx(-2500, 0));
    EXPECT_EQ(hx::parse_complex("i"), cplx(0, 1));
    EXPECT_EQ(hx::parse_complex("-i"), cplx(0, -1));
    EXPECT_EQ(hx::parse_complex("1i"), cplx(0, 1));
    EXPECT_EQ(hx::parse_complex("1+2i"), cplx(1, 2));
    EXPECT_EQ(hx::parse_complex("1-2i"), cplx(1, -2));
    EXPECT_EQ(hx::parse_complex("2i"), cplx(0, 2));
    EXPECT_EQ(hx::parse_complex("1e3+1e-3i"), cplx(1000, 0.001));
    EXPECT_EQ(hx::parse_complex(" 1 + 2i "), cplx(1, 2));
    EXPECT_THROW((void)hx::parse_complex(""), hx::ParseError);
    EXPECT_THROW((void)hx::parse_complex("1+2"), hx::ParseError);
    EXPECT_THROW((void)hx::parse_complex("i+i+i"), hx::ParseError);
    EXPECT_THROW((void)hx::parse_complex("banana"), hx::ParseError);
}

TEST(TextTest, FormatComplexRendersCompactly) {
    EXPECT_EQ(hx::format_complex(cplx{}), "0");
    EXPECT_EQ(hx::format_complex(cplx{3, 0}), "3");
    EXPECT_EQ(hx::format_complex(cplx{0, -2}), "-2i");
    EXPECT_EQ(hx::format_complex(cplx{1, 2}), "1+2i");
    EXPECT_EQ(hx::format_complex(cplx{1, -2}), "1-2i");
    EXPECT_EQ(hx::format_real(-0.0), "0");
    EXPECT_EQ(hx::format_real(3.5), "3.5");
}

TEST(TextTest, FormatParseRoundTripIsExactAtFullPrecision) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    for (int i = 0; i < 2000; ++i) {
        cplx z{u(rng), u(rng)};
        EXPECT_EQ(hx::parse_complex(hx::format_complex(z, 17)), z);
        Hypercomplex x{z, cplx{u(rng), u(rng)}};
        Hypercomplex back = hx::parse_hypercomplex(hx::format_hypercomplex(x, 17));
        EXPECT_EQ(back.a, x.a);
        EXPECT_EQ(back.b, x.b);
    }
}

TEST(TextTest, HypercomplexLiteralShapes) {
    Hypercomplex x = hx::parse_hypercomplex("(1+3i, -1+1i)");
    EXPECT_EQ(x.a, cplx(1, 3));
    EXPECT_EQ(x.b, cplx(-1, 1));
    EXPECT_THROW((void)hx::parse_hypercomplex("(1,2,3)"), hx::ParseError);
    EXPECT_THROW((void)hx::parse_hypercomplex("1,2"), hx::ParseError);
    EXPECT_THROW((void)hx::parse_hypercomplex("(1;2)"), hx::ParseError);
}

TEST(TextTest, StarWordsRoundTrip) {
    hx::StarWord w = hx::parse_star_word("1*1*");
    EXPECT_EQ(w.size(), 4u);
    EXPECT_EQ(hx::to_string(w), "1*1*");
    EXPECT_THROW((void)hx::parse_star_word(""), hx::ParseError);
    EXPECT_THROW((void)hx::parse_star_word("1x"), hx::ParseError);
}

TEST(TextTest, JsonRoundTripIsBitExact) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 2000; ++i) {
        Hypercomplex x{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        Hypercomplex back = hx::hypercomplex_from_json(hx::to_json(x));
        EXPECT_EQ(back.a, x.a);
        EXPECT_EQ(back.b, x.b);
    }
    EXPECT_THROW((void)hx::hypercomplex_from_json("{\"a\":[1,2]}"), hx::ParseError);
    EXPECT_THROW((void)hx::hypercomplex_from_json("[1,2]"), hx::ParseError);
    EXPECT_THROW((void)hx::hypercomplex_from_json("not json"), hx::ParseError);
}

TEST(TextTest, ExpressionsFollowPrecedenceAndGrouping) {
    // j * j + 1 = 0 in the quaternion-like ring
    Hypercomplex r = hx::eval_expression(-1.0, "(1,0)+(0,1)*(0,1)");
    EXPECT_EQ(r.a, cplx(0, 0));
    EXPECT_EQ(r.b, cplx(0, 0));

    Hypercomplex v = hx::eval_expression(0.0, "inv((2i,5))");
    EXPECT_LE(std::abs(v.a - cplx(0, -0.5)), 1e-15);
    EXPECT_LE(std::abs(v.b - cplx(-1.25, 0)), 1e-15);

    Hypercomplex grouped = hx::eval_expression(2.0, "((1,1))");
    EXPECT_EQ(grouped.a, cplx(1, 0));
    EXPECT_EQ(grouped.b, cplx(1, 0));

    // grouping changes the sum-product order
    Hypercomplex left = hx::eval_expression(2.0, "((1,0)+(0,1))*(2,0)");
    Hypercomplex expect = hx::mul(2.0, {cplx{1, 0}, cplx{1, 0}}, {cplx{2, 0}, cplx{}});
    EXPECT_EQ(left.a, expect.a);
    EXPECT_EQ(left.b, expect.b);

    Hypercomplex minus = hx::eval_expression(2.0, "(5,1)-(2,3)");
    EXPECT_EQ(minus.a, cplx(3, 0));
    EXPECT_EQ(minus.b, cplx(-2, 0));

    EXPECT_THROW((void)hx::eval_expression(1.0, "(1,1"), hx::ParseError);
    EXPECT_THROW((void)hx::eval_expression(1.0, "(1,1)(2,0)"), hx::ParseError);
    EXPECT_THROW((void)hx::eval_expression(1.0, ""), hx::ParseError);
    // a singular inverse surfaces as a domain error, not a parse error
    EXPECT_THROW((void)hx::eval_expression(1.0, "inv((1,1))"), hx::DomainError);
}

}  // namespace
