#include "gen.hpp"

#include "peaklab/order_poly.hpp"

#include <gtest/gtest.h>

using namespace peaklab;

namespace {

const OrderPolyKind kEnrichedA[] = {OrderPolyKind::enriched_interior, OrderPolyKind::enriched_left,
                                    OrderPolyKind::enriched_right, OrderPolyKind::enriched_exterior};

UniPoly t_pow(int e) { return UniPoly::monomial(1, e); }
UniPoly one_minus_t(int e) { return UniPoly({1, -1}).pow(e); }
UniPoly one_plus_t(int e) { return UniPoly({1, 1}).pow(e); }

}  // namespace

TEST(OrderPoly, ClosedFormExamples) {
    EXPECT_EQ(order_polynomial(Permutation({1, 4, 3, 2}), OrderPolyKind::A_ordinary), binom_poly(1, 4));
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(order_polynomial(Permutation::identity(n), OrderPolyKind::A_ordinary), binom_poly(n - 1, n));
    EXPECT_EQ(order_polynomial(SignedPermutation({-1}), OrderPolyKind::enriched_B), UniPoly({0, 2}));
    EXPECT_THROW(order_polynomial(Permutation({1}), OrderPolyKind::enriched_B), std::invalid_argument);
    EXPECT_THROW(order_polynomial(SignedPermutation({1}), OrderPolyKind::A_ordinary), std::invalid_argument);
}

TEST(OrderPoly, GeneratingFunctionExamples) {
    EXPECT_EQ(enriched_gf(Permutation({1}), OrderPolyKind::enriched_interior),
              RationalGF(UniPoly({0, 2}), one_minus_t(2)));
    EXPECT_EQ(enriched_gf(Permutation({1}), OrderPolyKind::enriched_left), RationalGF(UniPoly({1, 1}), one_minus_t(2)));
    // pe = 1: (1/2)(1+t)^6/(1-t)^6 (4t/(1+t)^2)^2 = 8 t^2 (1+t)^2 / (1-t)^6
    const Permutation pi({2, 1, 4, 3, 5});
    const RationalGF want(t_pow(2) * one_plus_t(2) * Rational(8), one_minus_t(6));
    const RationalGF got = enriched_gf(pi, OrderPolyKind::enriched_interior);
    EXPECT_EQ(got, want);
    EXPECT_TRUE(got.same_normal_form(want));
    auto c = gf_coeffs(got, 5);
    for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(c[k], Rational(count_chain_partitions(pi, {AlphabetKind::enriched, k})));
    // sign 1, no peaks: (1+t)/(1-t)^2 * 2t/(1+t)
    EXPECT_EQ(enriched_gf(SignedPermutation({-1})), RationalGF(UniPoly({0, 2}), one_minus_t(2)));
}

TEST(OrderPoly, MasterOracleTypeA) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n)) {
            UniPoly ord = order_polynomial(pi, OrderPolyKind::A_ordinary);
            EXPECT_EQ(ord.degree(), n);
            EXPECT_EQ(ord[0], 0);
            for (int k = 0; k <= 4; ++k)
                ASSERT_EQ(ord.eval(k), Rational(count_chain_partitions(pi, {AlphabetKind::ordinary, k})));
            for (auto kind : kEnrichedA) {
                UniPoly p = order_polynomial(pi, kind);
                EXPECT_LE(p.degree(), n);
                auto gf = gf_coeffs(enriched_gf(pi, kind), 6);
                for (int k = 0; k <= 5; ++k) {
                    const Rational oracle(count_chain_partitions(pi, image_set_for(kind, k)));
                    ASSERT_EQ(p.eval(k), oracle) << to_string(pi) << " " << to_string(kind) << " k=" << k;
                    ASSERT_EQ(gf[k], oracle);
                }
            }
        }
}

TEST(OrderPoly, MasterOracleTypeB) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& pi : all_signed_permutations(n)) {
            UniPoly ord = order_polynomial(pi, OrderPolyKind::B_ordinary);
            UniPoly enr = order_polynomial(pi, OrderPolyKind::enriched_B);
            auto gf = gf_coeffs(enriched_gf(pi), 5);
            for (int k = 0; k <= 4; ++k) {
                ASSERT_EQ(ord.eval(k), Rational(count_chain_partitions(pi, {AlphabetKind::ordinaryB, k})));
                const Rational oracle(count_chain_partitions(pi, {AlphabetKind::B_enriched, k}));
                ASSERT_EQ(enr.eval(k), oracle) << to_string(pi) << " k=" << k;
                ASSERT_EQ(gf[k], oracle);
            }
        }
}

TEST(OrderPoly, SampledOracleAtLargerSizes) {
    auto g = gen::rng(31);
    for (int it = 0; it < 25; ++it) {
        const auto pi = gen::permutation(g, 6);
        for (auto kind : kEnrichedA) {
            UniPoly p = order_polynomial(pi, kind);
            for (int k = 0; k <= 4; ++k)
                ASSERT_EQ(p.eval(k), Rational(count_partitions(Poset::chain(pi), image_set_for(kind, k))));
        }
        const auto sp = gen::signed_permutation(g, 4);
        UniPoly q = order_polynomial(sp, OrderPolyKind::enriched_B);
        for (int k = 0; k <= 3; ++k)
            ASSERT_EQ(q.eval(k), Rational(count_partitions(BPoset::chain(sp), {AlphabetKind::B_enriched, k})));
    }
}

TEST(OrderPoly, CyclicClosedForms) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n)) {
            UniPoly c = order_polynomial(pi, OrderPolyKind::A_cyclic);
            EXPECT_EQ(c.degree(), n - 1);
            EXPECT_EQ(c, binom_poly(n - 1 - descent_stat(pi, DescentKind::cyclic).count, n - 1) * Rational(1, n));
        }
    for (int n = 1; n <= 3; ++n)
        for (const auto& pi : all_signed_permutations(n))
            EXPECT_EQ(order_polynomial(pi, OrderPolyKind::B_cyclic),
                      binom_poly(n - signed_stat(pi, SignedStatKind::cyclic_descent).count, n));
}

TEST(OrderPoly, Reciprocity) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n))
            for (auto kind : kEnrichedA) ASSERT_TRUE(reciprocity_check(pi, kind)) << to_string(pi);
    EXPECT_TRUE(reciprocity_check(SignedPermutation({-2, 1})));
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : all_signed_permutations(n)) ASSERT_TRUE(reciprocity_check(pi)) << to_string(pi);
    EXPECT_THROW(reciprocity_check(Permutation({1, 2}), OrderPolyKind::A_ordinary), std::invalid_argument);
}

TEST(OrderPoly, InteriorParityAndSparsity) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n)) {
            UniPoly p = order_polynomial(pi, OrderPolyKind::enriched_interior);
            int nonzero = 0;
            for (int i = 0; i <= p.degree(); ++i)
                if (p[i] != 0) {
                    ++nonzero;
                    EXPECT_EQ((n - i) % 2, 0) << to_string(pi);
                }
            EXPECT_LE(nonzero, (n + 1) / 2);
        }
}

TEST(OrderPoly, LeftRightAndInteriorExteriorTransfer) {
    for (int n = 1; n <= 5; ++n) {
        const Permutation e = eta(n);
        for (const auto& pi : all_permutations(n)) {
            EXPECT_EQ(order_polynomial(pi, OrderPolyKind::enriched_left),
                      order_polynomial(compose(pi, e), OrderPolyKind::enriched_right));
            EXPECT_EQ(order_polynomial(pi, OrderPolyKind::enriched_interior),
                      order_polynomial(compose(e, pi), OrderPolyKind::enriched_exterior));
        }
    }
}

TEST(OrderPoly, Vanishing) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n)) {
            UniPoly p = order_polynomial(pi, OrderPolyKind::enriched_interior);
            const int pe = peak_stat(pi, PeakKind::interior).count;
            for (int k = 0; k <= pe; ++k) EXPECT_EQ(p.eval(k), 0);
            EXPECT_NE(p.eval(pe + 1), 0);
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : all_signed_permutations(n)) {
            UniPoly p = order_polynomial(pi, OrderPolyKind::enriched_B);
            const int i = signed_stat(pi, SignedStatKind::peak).count;
            if (signed_stat(pi, SignedStatKind::sign).count == 0) {
                if (i == 0) EXPECT_EQ(p.eval(0), 1);
                for (int k = 1; k < i; ++k) EXPECT_EQ(p.eval(k), 0);
                for (int k = 0; k <= 3; ++k) EXPECT_EQ(p.eval(-(k + 1)), (n % 2 ? -1 : 1) * p.eval(k));
            } else {
                for (int k = 0; k <= i; ++k) EXPECT_EQ(p.eval(k), 0);
                for (int k = 0; k <= 3; ++k) EXPECT_EQ(p.eval(-k), (n % 2 ? -1 : 1) * p.eval(k));
            }
        }
}

TEST(PeakPolynomials, TableEntries) {
    EXPECT_EQ(peak_polynomial(3, PeakPolyKind::W_interior), UniPoly({0, 4, 2}));
    EXPECT_EQ(peak_polynomial(3, PeakPolyKind::A_eulerian), UniPoly({0, 1, 4, 1}));
    EXPECT_EQ(peak_polynomial(1, PeakPolyKind::B_eulerian), UniPoly({1, 1}));
    EXPECT_EQ(peak_polynomial(1, PeakPolyKind::W_left), UniPoly({1}));
    EXPECT_EQ(peak_polynomial(2, PeakPolyKind::B_cyclic_eulerian), peak_polynomial(2, PeakPolyKind::A_eulerian) * Rational(4));
    // B_2 = 1 + 6t + t^2
    EXPECT_EQ(peak_polynomial(2, PeakPolyKind::B_eulerian), UniPoly({1, 6, 1}));
}

TEST(PeakPolynomials, CoefficientsSumToClassSizes) {
    long fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        for (auto kind : {PeakPolyKind::A_eulerian, PeakPolyKind::W_interior, PeakPolyKind::W_left})
            EXPECT_EQ(peak_polynomial(n, kind).eval(1), fact);
        if (n > 4) continue;
        EXPECT_EQ(peak_polynomial(n, PeakPolyKind::B_eulerian).eval(1), fact << n);
        EXPECT_EQ(peak_polynomial(n, PeakPolyKind::W_plus).eval(1) + peak_polynomial(n, PeakPolyKind::W_minus).eval(1),
                  fact << n);
        Rational total = 0;
        for (int i = 0; i <= n; ++i) total += peak_polynomial(n, PeakPolyKind::W_weighted, i).eval(1);
        EXPECT_EQ(total, fact << n);
        for (auto kind : {PeakPolyKind::B_eulerian, PeakPolyKind::W_plus, PeakPolyKind::W_minus})
            for (const auto& c : peak_polynomial(n, kind).coeffs()) EXPECT_GE(c, 0);
    }
}

TEST(PeakPolynomials, SubstitutionExample) {
    // W_3(4t/(1+t)^2) = 16 (t + 4t^2 + t^3) / (1+t)^4
    RationalGF w = substitute_peak_variable(peak_polynomial(3, PeakPolyKind::W_interior));
    EXPECT_EQ(w, RationalGF(UniPoly({0, 16, 64, 16}), one_plus_t(4)));
}

TEST(Identities, EulerianPeakIdentities) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(identity_check_43(n, Identity43::augeul).ok) << n;
        EXPECT_TRUE(identity_check_43(n, Identity43::bpeeul1).ok) << identity_check_43(n, Identity43::bpeeul1).detail;
        EXPECT_TRUE(identity_check_43(n, Identity43::bpeeul2).ok) << identity_check_43(n, Identity43::bpeeul2).detail;
        EXPECT_TRUE(identity_check_43(n, Identity43::bpeeul2, Rational(3, 7)).ok);
    }
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(identity_check_43(n, Identity43::peeul1).ok) << n;
        EXPECT_TRUE(identity_check_43(n, Identity43::peeul2).ok) << n;
    }
}

// The sign-weighted peak identity holds with (1 +- sqrt t)^(n+1); with exponent n it already
// fails for B_1, where the left side is (1+3t)/(1+t).
TEST(Identities, SignedPeakIdentityNeedsExponentNPlusOne) {
    const int n = 1;
    RationalGF lhs = substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_plus)) +
                     substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_minus)) *
                         RationalGF(UniPoly({Rational(1, 2), Rational(1, 2)}), UniPoly({1}));
    EXPECT_EQ(lhs, RationalGF(UniPoly({1, 3}), one_plus_t(1)));
    auto even_part = [](const UniPoly& G) {
        std::vector<Rational> e;
        for (int j = 0; 2 * j <= G.degree(); ++j) e.push_back(G[2 * j]);
        return UniPoly(e);
    };
    const UniPoly B1 = peak_polynomial(n, PeakPolyKind::B_eulerian);
    EXPECT_FALSE(lhs == RationalGF(even_part(B1 * one_plus_t(n)), one_plus_t(n)));
    EXPECT_TRUE(lhs == RationalGF(even_part(B1 * one_plus_t(n + 1)), one_plus_t(n)));
    // and the series it comes from: sum (4k+1)^n t^k
    auto series = gf_coeffs(lhs * RationalGF(one_plus_t(n), one_minus_t(n + 1)), 6);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(series[k], 4 * k + 1);
}

TEST(Identities, EnrichedSeriesAtAntichains) {
    // sum_k (2k)^n t^k and sum_k (2k+1)^n t^k against the peak polynomials.
    for (int n = 1; n <= 4; ++n) {
        auto a = gf_coeffs(substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_interior)) *
                               RationalGF(one_plus_t(n + 1) * Rational(1, 2), one_minus_t(n + 1)),
                           6);
        auto b = gf_coeffs(substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_left)) *
                               RationalGF(one_plus_t(n), one_minus_t(n + 1)),
                           6);
        for (int k = 0; k < 6; ++k) {
            Integer p, q;
            mpz_ui_pow_ui(p.get_mpz_t(), 2 * k, n);
            mpz_ui_pow_ui(q.get_mpz_t(), 2 * k + 1, n);
            EXPECT_EQ(a[k], Rational(p));
            EXPECT_EQ(b[k], Rational(q));
        }
    }
}
