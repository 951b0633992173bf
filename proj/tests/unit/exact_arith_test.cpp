#include "gen.hpp"

#include "peaklab/multipoly.hpp"
#include "peaklab/rational_gf.hpp"
#include "peaklab/unipoly.hpp"

#include <gtest/gtest.h>

using namespace peaklab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Rational, LowestTermsAndText) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(parse_rational("10/-4"), make_rational(-5, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, BinomialNegativeTop) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(2, 3), 0);
    EXPECT_EQ(binomial(-1, 3), -1);  // (-1)(-2)(-3)/6
    EXPECT_EQ(binomial(7, 0), 1);
}

TEST(UniPoly, TrimsTrailingZeros) {
    UniPoly p(ints({1, 2, 0, 0}));
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(UniPoly(ints({0, 0})).is_zero());
    EXPECT_EQ((p - p).coeffs().size(), 0u);
}

TEST(UniPoly, BinomPolyExamples) {
    EXPECT_EQ(binom_poly(1, 2), UniPoly({0, Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(binom_poly(0, 0), UniPoly({1}));
    EXPECT_EQ(binom_poly(3, 4).eval(2), 5);
}

TEST(UniPoly, BinomPolyMatchesIntegerBinomial) {
    for (long shift = -3; shift <= 4; ++shift)
        for (unsigned d = 0; d <= 6; ++d) {
            UniPoly p = binom_poly(shift, d);
            for (long m = std::max(0L, -shift); m <= 10; ++m)
                if (m >= static_cast<long>(d) - shift) EXPECT_EQ(p.eval(m), binomial(m + shift, d));
        }
}

TEST(UniPoly, InterpolateExamples) {
    EXPECT_EQ(interpolate({{0, 0}, {1, 2}, {2, 4}}), UniPoly({0, 2}));
    EXPECT_EQ(interpolate({{1, 1}, {2, 4}, {3, 9}}), UniPoly({0, 0, 1}));
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = 0; x <= 4; ++x) pts.emplace_back(x, binomial(x + 1, 4));
    EXPECT_EQ(interpolate(pts), binom_poly(1, 4));
    EXPECT_THROW(interpolate({{1, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(interpolate({}), std::invalid_argument);
}

TEST(UniPoly, InterpolateInvertsEvaluation) {
    auto g = gen::rng(1);
    for (int it = 0; it < 200; ++it) {
        const int d = gen::uniform(g, 0, 7);
        UniPoly p = gen::unipoly(g, d);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i <= d; ++i) {
            Rational x = make_rational(3 * i - 5, 2);
            pts.emplace_back(x, p.eval(x));
        }
        ASSERT_EQ(interpolate(pts), p) << to_string(p);
    }
}

TEST(UniPoly, RingLaws) {
    auto g = gen::rng(2);
    for (int it = 0; it < 100; ++it) {
        UniPoly a = gen::unipoly(g, gen::uniform(g, 0, 4));
        UniPoly b = gen::unipoly(g, gen::uniform(g, 0, 4));
        UniPoly c = gen::unipoly(g, gen::uniform(g, 0, 4));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        Rational x = gen::rational(g);
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
        EXPECT_EQ(a.compose(b).eval(x), a.eval(b.eval(x)));
        EXPECT_EQ(a.compose_linear(2, Rational(-1, 3)).eval(x), a.eval(2 * x - Rational(1, 3)));
    }
}

TEST(RationalGF, CoefficientExamples) {
    RationalGF twoT(UniPoly({0, 2}), UniPoly({1, -2, 1}));
    EXPECT_EQ(gf_coeffs(twoT, 4), ints({0, 2, 4, 6}));
    EXPECT_EQ(gf_coeffs(RationalGF(UniPoly({1}), UniPoly({1, -1})), 3), ints({1, 1, 1}));
    EXPECT_EQ(gf_coeffs(RationalGF(UniPoly({1, 1}), UniPoly({1, -2, 1})), 4), ints({1, 3, 5, 7}));
    EXPECT_THROW(RationalGF(UniPoly({1}), UniPoly({0, 1})), std::invalid_argument);
}

TEST(RationalGF, NormalForm) {
    // 3/(6 - 6t) and 1/(2 - 2t) share one stored form.
    RationalGF a(UniPoly({3}), UniPoly({6, -6}));
    RationalGF b(UniPoly({Rational(1, 2)}), UniPoly({1, -1}));
    EXPECT_TRUE(a.same_normal_form(b));
    EXPECT_GT(a.den()[0], 0);
    RationalGF neg(UniPoly({-1}), UniPoly({-1, 1}));
    EXPECT_GT(neg.den()[0], 0);
    for (const auto& c : a.num().coeffs()) EXPECT_TRUE(is_integer(c));
    for (const auto& c : a.den().coeffs()) EXPECT_TRUE(is_integer(c));
}

TEST(RationalGF, PrefixesAgreeAndProductsMatchSeries) {
    auto g = gen::rng(3);
    for (int it = 0; it < 60; ++it) {
        UniPoly den = gen::unipoly(g, gen::uniform(g, 0, 3));
        if (den[0] == 0) den += UniPoly({1});
        RationalGF f(gen::unipoly(g, gen::uniform(g, 0, 3)), den);
        RationalGF h(gen::unipoly(g, 2), UniPoly({1, gen::rational(g)}));
        const std::size_t N = 8;
        auto a = gf_coeffs(f, N), a1 = gf_coeffs(f, N + 1);
        EXPECT_TRUE(std::equal(a.begin(), a.end(), a1.begin()));
        auto b = gf_coeffs(h, N), ab = gf_coeffs(f * h, N), sum = gf_coeffs(f + h, N);
        for (std::size_t k = 0; k < N; ++k) {
            Rational conv = 0;
            for (std::size_t i = 0; i <= k; ++i) conv += a[i] * b[k - i];
            EXPECT_EQ(ab[k], conv);
            EXPECT_EQ(sum[k], a[k] + b[k]);
        }
    }
}

TEST(MultiPoly, CommutativeAssociative) {
    auto g = gen::rng(4);
    auto random_poly = [&] {
        MultiPoly p(3);
        for (int t = gen::uniform(g, 0, 4); t > 0; --t)
            p.add_term({static_cast<std::uint8_t>(gen::uniform(g, 0, 2)), static_cast<std::uint8_t>(gen::uniform(g, 0, 2)),
                        static_cast<std::uint8_t>(gen::uniform(g, 0, 2))},
                       gen::rational(g));
        return p;
    };
    for (int it = 0; it < 100; ++it) {
        MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        const MultiPoly sum = a * b + c;
        for (const auto& [e, coeff] : sum.terms()) {
            EXPECT_NE(coeff, 0);
            EXPECT_EQ(e.size(), 3u);
        }
    }
}

TEST(MultiPoly, ZeroVariableAndEmbed) {
    MultiPoly p = MultiPoly::monomial({1, 0}, 2) + MultiPoly::monomial({0, 2}, 3);
    EXPECT_EQ(p.zero_variable(0), MultiPoly::monomial({0, 2}, 3));
    EXPECT_EQ(p.eval_ones(), 5);
    EXPECT_EQ(p.embed(3, 1), MultiPoly::monomial({0, 1, 0}, 2) + MultiPoly::monomial({0, 0, 2}, 3));
    EXPECT_THROW(p.add_term({1}, 1), std::invalid_argument);
}
