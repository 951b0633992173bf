#include "gen.hpp"

#include "peaklab/order_poly.hpp"
#include "peaklab/qsym.hpp"

#include <gtest/gtest.h>

using namespace peaklab;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
SignedPermutation S(std::vector<int> v) { return SignedPermutation(std::move(v)); }
std::uint64_t K(std::vector<int> v) { return mask_of(v); }

MultiPoly mono(std::vector<int> e, long c = 1) {
    return MultiPoly::monomial(Exponent(e.begin(), e.end()), c);
}

}  // namespace

TEST(Qsym, IndexValidity) {
    EXPECT_EQ(basis_indices(QsymBasis::M, 3), (std::vector<std::uint64_t>{0, K({1}), K({2}), K({1, 2})}));
    EXPECT_EQ(basis_indices(QsymBasis::N, 2).size(), 4u);
    EXPECT_EQ(basis_indices(QsymBasis::K_A, 4), (std::vector<std::uint64_t>{0, K({2}), K({3})}));
    EXPECT_FALSE(valid_index(QsymBasis::K_left, 4, K({1, 2})));
    EXPECT_TRUE(valid_index(QsymBasis::K_left, 4, K({1, 3})));
    EXPECT_FALSE(valid_index(QsymBasis::K_B, 3, sign_peak_key(1, K({1}))));
    EXPECT_TRUE(valid_index(QsymBasis::K_B, 3, sign_peak_key(1, K({2}))));
    QsymExpansion e(QsymBasis::F, 3);
    EXPECT_THROW(e.add(K({0}), 1), std::invalid_argument);
    EXPECT_THROW(e.add(K({3}), 1), std::invalid_argument);
}

TEST(Qsym, MonomialExpansionExamples) {
    const auto e = delta_expansion(P({1, 2}), DeltaFlavor::left, ExpansionBasis::monomial);
    EXPECT_EQ(e.basis(), QsymBasis::N);
    EXPECT_EQ(e.coeffs().size(), 4u);
    EXPECT_EQ(e.coeff(0), 1);
    EXPECT_EQ(e.coeff(K({0})), 2);
    EXPECT_EQ(e.coeff(K({1})), 2);
    EXPECT_EQ(e.coeff(K({0, 1})), 4);
    // 2^{|E|+1} M_E over the E whose union with E+1 covers the peak set.
    const auto d = delta_expansion(P({1, 3, 2}), DeltaFlavor::interior, ExpansionBasis::monomial);
    EXPECT_EQ(d.coeff(0), 0);
    EXPECT_EQ(d.coeff(K({1})), 4);
    EXPECT_EQ(d.coeff(K({2})), 4);
    EXPECT_EQ(d.coeff(K({1, 2})), 8);
}

TEST(Qsym, FundamentalExpansionExamples) {
    const auto b = delta_expansion(S({-1}), ExpansionBasis::fundamental);
    EXPECT_EQ(b.basis(), QsymBasis::L);
    EXPECT_EQ(b.coeffs(), (std::map<std::uint64_t, Rational>{{K({0}), 2}}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : all_permutations(n)) {
            const Mask pe = peak_stat(pi, PeakKind::interior).set;
            const auto f = delta_expansion(pi, DeltaFlavor::interior, ExpansionBasis::fundamental);
            const Rational weight(Integer(1) << (std::popcount(pe) + 1));
            for (std::uint64_t D : basis_indices(QsymBasis::F, n)) {
                const bool covered = (pe & ~(D ^ (D << 1))) == 0;
                EXPECT_EQ(f.coeff(D), covered ? weight : Rational(0));
            }
        }
}

TEST(Qsym, TruncatedRealizationExamples) {
    QsymExpansion m1(QsymBasis::M, 2);
    m1.add(K({1}), 1);
    EXPECT_EQ(truncate_realize(m1, 2), mono({1, 1}));
    QsymExpansion f0(QsymBasis::F, 2);
    f0.add(0, 1);
    EXPECT_EQ(truncate_realize(f0, 2), mono({2, 0}) + mono({1, 1}) + mono({0, 2}));
    for (int m = 1; m <= 4; ++m)
        EXPECT_EQ(truncate_realize(delta_expansion(P({1}), DeltaFlavor::left, ExpansionBasis::monomial), m).eval_ones(),
                  2 * m + 1);
    EXPECT_THROW(truncate_realize(f0, 0), ResourceLimitError);
}

TEST(Qsym, BasisChangesRoundTrip) {
    auto g = gen::rng(31);
    for (QsymBasis b : {QsymBasis::F, QsymBasis::L})
        for (int n = 1; n <= 5; ++n)
            for (int it = 0; it < 10; ++it) {
                QsymExpansion e(b, n);
                for (std::uint64_t key : basis_indices(b, n))
                    if (gen::uniform(g, 0, 2) == 0) e.add(key, gen::rational(g));
                const auto m = to_monomial(e);
                EXPECT_EQ(m.basis(), b == QsymBasis::F ? QsymBasis::M : QsymBasis::N);
                EXPECT_EQ(to_fundamental(m), e);
            }
    // F_S = sum over T containing S of M_T.
    QsymExpansion f(QsymBasis::F, 4);
    f.add(K({2}), 1);
    const auto m = to_monomial(f);
    EXPECT_EQ(m.coeffs().size(), 4u);
    for (std::uint64_t T : {K({2}), K({1, 2}), K({2, 3}), K({1, 2, 3})}) EXPECT_EQ(m.coeff(T), 1);
}

TEST(Qsym, ExpansionsMatchBruteForce) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& pi : all_permutations(n))
            for (DeltaFlavor f : {DeltaFlavor::interior, DeltaFlavor::left})
                for (ExpansionBasis b : {ExpansionBasis::monomial, ExpansionBasis::fundamental, ExpansionBasis::peak})
                    for (int m = 1; m <= 3; ++m)
                        ASSERT_EQ(truncate_realize(delta_expansion(pi, f, b), m), chain_realization(pi, f, m))
                            << to_string(pi) << " " << to_string(f) << " " << to_string(b) << " m=" << m;
    for (int n = 1; n <= 2; ++n)
        for (const auto& pi : all_signed_permutations(n))
            for (ExpansionBasis b : {ExpansionBasis::monomial, ExpansionBasis::fundamental})
                for (int m = 1; m <= 3; ++m)
                    ASSERT_EQ(truncate_realize(delta_expansion(pi, b), m), chain_realization(pi, m)) << to_string(pi);
}

TEST(Qsym, SettingZeroVariableGivesInterior) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : all_permutations(n))
            for (int m = 1; m <= 3; ++m) {
                const MultiPoly left = truncate_realize(delta_expansion(pi, DeltaFlavor::left, ExpansionBasis::fundamental), m);
                const MultiPoly interior =
                    truncate_realize(delta_expansion(pi, DeltaFlavor::interior, ExpansionBasis::fundamental), m);
                EXPECT_EQ(left.zero_variable(0), interior.embed(m + 1, 1)) << to_string(pi);
            }
}

TEST(Qsym, ExpansionsDependOnlyOnPeakClass) {
    for (int n = 1; n <= 4; ++n) {
        std::map<Mask, QsymExpansion> seen;
        for (const auto& pi : all_permutations(n)) {
            const auto e = delta_expansion(pi, DeltaFlavor::interior, ExpansionBasis::fundamental);
            auto [it, fresh] = seen.emplace(peak_stat(pi, PeakKind::interior).set, e);
            if (!fresh) EXPECT_EQ(it->second, e);
        }
        std::map<std::uint64_t, QsymExpansion> seenB;
        for (const auto& pi : all_signed_permutations(n)) {
            const auto e = delta_expansion(pi, ExpansionBasis::monomial);
            const auto key = sign_peak_key(signed_stat(pi, SignedStatKind::sign).count, signed_stat(pi, SignedStatKind::peak).set);
            auto [it, fresh] = seenB.emplace(key, e);
            if (!fresh) EXPECT_EQ(it->second, e);
        }
    }
}

TEST(Qsym, SpecializationIsTheOrderPolynomial) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& pi : all_permutations(n))
            for (int m = 1; m <= 3; ++m) {
                EXPECT_EQ(truncate_realize(delta_expansion(pi, DeltaFlavor::interior, ExpansionBasis::monomial), m).eval_ones(),
                          order_polynomial(pi, OrderPolyKind::enriched_interior).eval(m));
                EXPECT_EQ(truncate_realize(delta_expansion(pi, DeltaFlavor::left, ExpansionBasis::monomial), m).eval_ones(),
                          order_polynomial(pi, OrderPolyKind::enriched_left).eval(m));
            }
        if (n > 3) continue;
        for (const auto& pi : all_signed_permutations(n))
            for (int m = 1; m <= 3; ++m)
                EXPECT_EQ(truncate_realize(delta_expansion(pi, ExpansionBasis::monomial), m).eval_ones(),
                          order_polynomial(pi, OrderPolyKind::enriched_B).eval(m));
    }
}

TEST(Qsym, PeakFunctionsSupportedOnValidSets) {
    EXPECT_THROW(peak_function(QsymBasis::K_A, 4, K({2, 3}), ExpansionBasis::fundamental), std::invalid_argument);
    EXPECT_THROW(peak_function(QsymBasis::K_B, 3, sign_peak_key(1, K({1})), ExpansionBasis::monomial),
                 std::invalid_argument);
    const auto k = peak_function(QsymBasis::K_A, 3, K({2}), ExpansionBasis::peak);
    EXPECT_EQ(to_fundamental(k), peak_function(QsymBasis::K_A, 3, K({2}), ExpansionBasis::fundamental));
}

TEST(Qsym, FibonacciRanks) {
    EXPECT_EQ(fibonacci(0), 1u);
    EXPECT_EQ(fibonacci(1), 1u);
    EXPECT_EQ(fibonacci(6), 13u);
    EXPECT_EQ(peak_basis_rank(4, PeakFamily::interior), 3u);
    EXPECT_EQ(peak_basis_rank(3, PeakFamily::B), 5u);
    EXPECT_EQ(peak_basis_rank(1, PeakFamily::interior), 1u);
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(peak_basis_rank(n, PeakFamily::interior), fibonacci(n - 1)) << n;
        EXPECT_EQ(peak_basis_rank(n, PeakFamily::left), fibonacci(n)) << n;
        EXPECT_EQ(peak_basis_rank(n, PeakFamily::B), fibonacci(n + 1)) << n;
        for (PeakFamily f : {PeakFamily::interior, PeakFamily::left, PeakFamily::B})
            EXPECT_EQ(peak_basis_rank(n, f), peak_set_count(n, f));
    }
}

TEST(Qsym, BipartiteExamples) {
    EXPECT_TRUE(bipartite_check({1}, BipartiteFlavor::interior, 1, 1).ok);
    for (const auto& pi : all_permutations(2)) EXPECT_TRUE(bipartite_check(pi.images(), BipartiteFlavor::gesA, 2, 2).ok);
    EXPECT_THROW(bipartite_check({1, 2, 3, 4, 5}, BipartiteFlavor::gesA, 1, 1), ResourceLimitError);
}

TEST(Qsym, BipartiteIdentitiesAtThree) {
    for (BipartiteFlavor f : {BipartiteFlavor::gesA, BipartiteFlavor::interior, BipartiteFlavor::left,
                              BipartiteFlavor::peakideal_mixed, BipartiteFlavor::interiordescent_mixed})
        for (int n = 1; n <= 3; ++n)
            for (const auto& pi : all_permutations(n)) {
                const auto r = bipartite_check(pi.images(), f, 2, 2);
                EXPECT_TRUE(r.ok) << to_string(f) << " " << to_string(pi) << " " << r.detail;
            }
    for (int n = 1; n <= 2; ++n)
        for (const auto& pi : all_signed_permutations(n))
            EXPECT_TRUE(bipartite_check(pi.images(), BipartiteFlavor::B, 2, 2).ok) << to_string(pi);
}

TEST(Qsym, CoalgebraMatchesGroupAlgebra) {
    for (ClassFamily f : {ClassFamily::descent_set, ClassFamily::peak_interior_set, ClassFamily::peak_left_set,
                          ClassFamily::B_peak_sign_set}) {
        const auto a = coalgebra_constants(3, f), b = structure_constants(3, f);
        EXPECT_EQ(a.entries, b.entries);
        EXPECT_EQ(a.labels, b.labels);
        EXPECT_EQ(a.well_defined, b.well_defined);
    }
    EXPECT_THROW(coalgebra_constants(3, ClassFamily::descent_num), std::invalid_argument);
}

TEST(Qsym, SignPeakTensorHasNoInvalidMass) {
    const auto sc = coalgebra_constants(3, ClassFamily::B_peak_sign_set);
    for (ClassLabel l : sc.labels)
        EXPECT_TRUE(valid_index(QsymBasis::K_B, 3, sign_peak_key(label_flag(l), static_cast<Mask>(label_primary(l)))));
}
