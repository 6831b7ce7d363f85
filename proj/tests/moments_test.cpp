#include "hx/moments.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hx/matrix.hpp"
#include "hx/spectral.hpp"
#include "hx/text.hpp"

namespace {

using hx::cplx;
using hx::Hypercomplex;

TEST(MomentsTest, WordOracleMatchesHandValues) {
    // scale 2, (1,1): trace of T S* / 2 = 3.5
    hx::StarWord ps = hx::parse_star_word("1*");
    cplx m = hx::word_moment_oracle(2.0, {cplx{1, 0}, cplx{1, 0}}, ps);
    EXPECT_LE(std::abs(m - cplx(3.5, 0)), 1e-14);

    // scale -1, (i,1): plain square has trace -2, mixed pair has trace 2
    Hypercomplex q{cplx{0, 1}, cplx{1, 0}};
    EXPECT_LE(std::abs(hx::word_moment_oracle(-1.0, q, hx::parse_star_word("11")) -
                       cplx(-2, 0)),
              1e-14);
    EXPECT_LE(std::abs(hx::word_moment_oracle(-1.0, q, ps) - cplx(2, 0)), 1e-14);
}

TEST(MomentsTest, ClosedFormMatchesOracleWhereEstablished) {
    Hypercomplex q{cplx{0, 1}, cplx{1, 0}};
    EXPECT_NEAR(hx::word_moment_closed(-1.0, q, hx::parse_star_word("11")), -2.0, 1e-12);
    EXPECT_NEAR(hx::word_moment_closed(-1.0, q, hx::parse_star_word("1*")), 2.0, 1e-12);
    // diagonal elements work at any scale
    EXPECT_NEAR(hx::word_moment_closed(7.0, {cplx{2, 0}, cplx{}}, hx::parse_star_word("111")),
                8.0, 1e-12);
}

TEST(MomentsTest, ClosedFormRefusesUnestablishedScales) {
    try {
        (void)hx::word_moment_closed(2.0, {cplx{1, 0}, cplx{1, 0}}, hx::parse_star_word("1*"));
        FAIL();
    } catch (const hx::DomainError& e) {
        EXPECT_EQ(e.code(), hx::errc::similarity_not_established);
    }
}

TEST(MomentsTest, ExponentSumCountsStarsNegatively) {
    EXPECT_EQ(hx::parse_star_word("11").exponent_sum(), 2);
    EXPECT_EQ(hx::parse_star_word("1*").exponent_sum(), 0);
    EXPECT_EQ(hx::parse_star_word("***").exponent_sum(), -3);
}

TEST(MomentsTest, PolarDecomposeBehaves) {
    hx::PolarForm p = hx::polar_decompose(cplx{0, std::sqrt(2.0)});
    EXPECT_LE(std::abs(p.r - std::sqrt(2.0)), 1e-15);
    EXPECT_LE(std::abs(p.w_o - cplx(0, 1)), 1e-15);
    hx::PolarForm m = hx::polar_decompose(cplx{-3, 0});
    EXPECT_DOUBLE_EQ(m.r, 3.0);
    EXPECT_EQ(m.w_o, cplx(-1, 0));
    try {
        (void)hx::polar_decompose(cplx{});
        FAIL();
    } catch (const hx::DomainError& e) {
        EXPECT_EQ(e.code(), hx::errc::zero_input);
    }
}

TEST(MomentsTest, PairFormulasMatchTheOracle) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        double t = u(rng) * 2.0;
        Hypercomplex x{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        Hypercomplex y{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        hx::Matrix2C A = hx::realize(t, x), B = hx::realize(t, y);
        cplx o1 = hx::normalized_trace(hx::mat_mul(A, hx::mat_adjoint(B)));
        cplx o2 = hx::normalized_trace(hx::mat_mul(hx::mat_adjoint(A), B));
        EXPECT_LE(std::abs(o1 - hx::moment_pair_plain_star(t, x, y)), 1e-10);
        EXPECT_LE(std::abs(o2 - hx::moment_pair_star_plain(t, x, y)), 1e-10);
    }
}

TEST(MomentsTest, ClassifierAcceptsTheKnownFamilies) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);

    // real diagonal elements are self-adjoint at every scale
    for (double t : {-2.0, -1.0, 0.0, 0.5, 1.0, 3.0}) {
        hx::OperatorClass c = hx::classify_operator(t, {cplx{2.5, 0}, cplx{}});
        EXPECT_TRUE(c.self_adjoint);
        EXPECT_TRUE(c.normal);
        EXPECT_FALSE(c.projection);
        EXPECT_FALSE(c.unitary);
    }
    // unity and zero are the projections away from scale 1
    for (double t : {-1.0, 0.0, 2.0}) {
        EXPECT_TRUE(hx::classify_operator(t, hx::unity()).projection);
        EXPECT_TRUE(hx::classify_operator(t, Hypercomplex{}).projection);
        EXPECT_TRUE(hx::classify_operator(t, hx::unity()).unitary);
    }
    // scale 1 adds the halved family
    for (int i = 0; i < 50; ++i) {
        double th = ang(rng);
        hx::OperatorClass c = hx::classify_operator(
            1.0, {cplx{0.5, 0.0}, 0.5 * cplx{std::cos(th), std::sin(th)}});
        EXPECT_TRUE(c.projection);
        EXPECT_TRUE(c.self_adjoint);
    }
    // scale -1: everything is normal, unit spheres are unitary
    for (int i = 0; i < 50; ++i) {
        Hypercomplex x{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        EXPECT_TRUE(hx::classify_operator(-1.0, x).normal);
        double th = ang(rng), ph = ang(rng), ps = ang(rng);
        Hypercomplex s{std::cos(th) * cplx{std::cos(ph), std::sin(ph)},
                       std::sin(th) * cplx{std::cos(ps), std::sin(ps)}};
        EXPECT_TRUE(hx::classify_operator(-1.0, s).unitary);
    }
    hx::OperatorClass c = hx::classify_operator(-1.0, {cplx{0.6, 0.0}, cplx{0.0, 0.8}});
    EXPECT_TRUE(c.unitary);
    EXPECT_TRUE(c.normal);
    // scale 1 keeps the flip elements unitary
    EXPECT_TRUE(hx::classify_operator(1.0, {cplx{}, cplx{1, 0}}).unitary);
    EXPECT_TRUE(hx::classify_operator(1.0, {cplx{}, cplx{-1, 0}}).unitary);
}

TEST(MomentsTest, ClassifierNeverDisagreesWithTheMatrixSide) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 3000; ++i) {
        double t;
        switch (i % 4) {
            case 0: t = -1.0; break;
            case 1: t = 1.0; break;
            case 2: t = 0.0; break;
            default: t = u(rng) * 2.0; break;
        }
        Hypercomplex x{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        EXPECT_NO_THROW((void)hx::classify_operator(t, x));
    }
}

TEST(MomentsTest, SequencesMatchHandValues) {
    std::vector<cplx> own = hx::moment_sequence(-2.0, {cplx{3, 0}, cplx{}}, 4);
    ASSERT_EQ(own.size(), 4u);
    EXPECT_LE(std::abs(own[0] - cplx(3, 0)), 1e-12);
    EXPECT_LE(std::abs(own[1] - cplx(9, 0)), 1e-12);
    EXPECT_LE(std::abs(own[2] - cplx(27, 0)), 1e-12);
    EXPECT_LE(std::abs(own[3] - cplx(81, 0)), 1e-12);

    std::vector<cplx> flip = hx::moment_sequence(1.0, {cplx{}, cplx{1, 0}}, 6);
    for (int k = 0; k < 6; ++k) {
        cplx want = (k % 2 == 0) ? cplx{} : cplx{1, 0};
        EXPECT_LE(std::abs(flip[k] - want), 1e-14);
    }

    EXPECT_THROW((void)hx::moment_sequence(1.0, hx::unity(), 0), std::invalid_argument);
}

// At negative scales the oracle trace of any mixed word stays real, but the
// closed form only follows the word through the similarity when the
// conjugating matrix can be taken unitary: same-letter words at any negative
// scale, and every word at scale -1 or for diagonal elements.
TEST(MomentsTest, WordMomentsStayRealOverTheClosedScales) {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        double t = -0.1 - std::abs(u(rng));
        Hypercomplex x{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
        hx::StarWord w;
        int len = 1 + static_cast<int>(rng() % 6u);
        bool uniform = (i % 3 != 0);
        hx::Letter first = (rng() & 1) ? hx::Letter::star : hx::Letter::plain;
        for (int k = 0; k < len; ++k) {
            w.letters.push_back(uniform ? first
                                        : ((rng() & 1) ? hx::Letter::star : hx::Letter::plain));
        }
        double r = std::abs(hx::spectralize(t, x).value());
        double sc = 1.0 + std::pow(r, static_cast<double>(w.size()));
        cplx o = hx::word_moment_oracle(t, x, w);
        EXPECT_LE(std::abs(o.imag()) / sc, 1e-10);
        if (uniform) {
            EXPECT_LE(std::abs(hx::word_moment_closed(t, x, w) - o.real()) / sc, 1e-8);
        } else {
            cplx om1 = hx::word_moment_oracle(-1.0, x, w);
            double rm1 = std::abs(hx::spectralize(-1.0, x).value());
            double sm1 = 1.0 + std::pow(rm1, static_cast<double>(w.size()));
            EXPECT_LE(std::abs(hx::word_moment_closed(-1.0, x, w) - om1.real()) / sm1, 1e-8);
        }
    }
}

}  // namespace
