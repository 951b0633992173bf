#include "gen.hpp"

#include "peaklab/group.hpp"
#include "peaklab/permutation.hpp"

#include <gtest/gtest.h>

using namespace peaklab;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
SignedPermutation S(std::vector<int> v) { return SignedPermutation(std::move(v)); }
Mask M(std::vector<int> v) { return mask_of(v); }

// Independent peak rule: pi(i-1) < pi(i) > pi(i+1) with zero sentinels.
Mask peaks_by_rule(const Permutation& pi, int lo, int hi) {
    const int n = pi.size();
    std::vector<int> w(n + 2, 0);
    for (int i = 1; i <= n; ++i) w[i] = pi.images()[i - 1];
    Mask m = 0;
    for (int i = lo; i <= hi; ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) m |= Mask{1} << i;
    return m;
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(P({1, 1}), std::invalid_argument);
    EXPECT_THROW(P({0, 1}), std::invalid_argument);
    EXPECT_THROW(S({1, -1}), std::invalid_argument);
    EXPECT_THROW(S({0}), std::invalid_argument);
    EXPECT_THROW(compose(P({1, 2}), P({1})), std::invalid_argument);
}

TEST(Permutation, ComposeAndInverseExamples) {
    EXPECT_EQ(compose(P({2, 1, 3}), P({1, 3, 2})), P({2, 3, 1}));
    EXPECT_EQ(compose(eta(3), eta(3)), Permutation::identity(3));
    EXPECT_EQ(compose(S({-2, 1}), S({-2, 1})), S({-1, -2}));
    EXPECT_EQ(inverse(P({2, 3, 1})), P({3, 1, 2}));
    EXPECT_EQ(inverse(Permutation::identity(4)), Permutation::identity(4));
    EXPECT_EQ(inverse(S({-2, 1})), S({2, -1}));
}

TEST(Permutation, TextRoundTrip) {
    EXPECT_EQ(parse_permutation("[2,1,4,3,5]"), P({2, 1, 4, 3, 5}));
    EXPECT_EQ(parse_signed_permutation("[-2, 4,-5,3,1]"), S({-2, 4, -5, 3, 1}));
    EXPECT_EQ(to_string(S({-2, 1})), "[-2,1]");
    EXPECT_THROW(parse_permutation("2,1"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("[1,-2]"), std::invalid_argument);
}

TEST(Permutation, GroupLawsExhaustive) {
    for (int n = 0; n <= 4; ++n) {
        const auto all = all_permutations(n);
        for (const auto& a : all) {
            EXPECT_EQ(compose(a, inverse(a)), Permutation::identity(n));
            EXPECT_EQ(compose(inverse(a), a), Permutation::identity(n));
            EXPECT_EQ(compose(a, Permutation::identity(n)), a);
            for (const auto& b : all)
                for (const auto& c : all) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        }
    }
    for (int n = 0; n <= 3; ++n) {
        const auto all = all_signed_permutations(n);
        for (const auto& a : all) {
            EXPECT_EQ(compose(a, inverse(a)), SignedPermutation::identity(n));
            for (int i = -n; i <= n; ++i) EXPECT_EQ(a(-i), -a(i));
            for (const auto& b : all)
                for (const auto& c : all) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        }
    }
}

TEST(Permutation, IterationCountsAndOrder) {
    EXPECT_EQ(all_permutations(3).size(), 6u);
    EXPECT_EQ(all_signed_permutations(2).size(), 8u);
    ASSERT_EQ(all_permutations(0).size(), 1u);
    EXPECT_EQ(all_permutations(0)[0].size(), 0);
    for (int n = 1; n <= 4; ++n) {
        auto a = all_permutations(n);
        auto b = all_signed_permutations(n);
        EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
        EXPECT_EQ(std::adjacent_find(b.begin(), b.end()), b.end());
        EXPECT_EQ(b.size(), a.size() << n);
    }
    std::size_t count = 0;
    iterate_group(3, GroupKind::hyperoctahedral, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, 48u);
}

TEST(Permutation, GuardRaisesResourceError) {
    EXPECT_THROW(all_permutations(group_size_guard(GroupKind::symmetric) + 1), ResourceLimitError);
    EXPECT_THROW(all_signed_permutations(group_size_guard(GroupKind::hyperoctahedral) + 1), ResourceLimitError);
}

TEST(Statistics, DescentExamples) {
    auto d = descent_stat(P({1, 4, 3, 2}));
    EXPECT_EQ(d.set, M({2, 3}));
    EXPECT_EQ(d.count, 2);
    EXPECT_EQ(descent_stat(Permutation::identity(5)).count, 0);
    // pi(4) = 2 > 1 = pi(1), so the wrap position joins.
    auto c = descent_stat(P({1, 4, 3, 2}), DescentKind::cyclic);
    EXPECT_EQ(c.set, M({2, 3, 4}));
    EXPECT_EQ(c.count, 3);
}

TEST(Statistics, PeakExamples) {
    const auto pi = P({2, 1, 4, 3, 5});
    EXPECT_EQ(peak_stat(pi, PeakKind::interior).set, M({3}));
    EXPECT_EQ(peak_stat(pi, PeakKind::left).set, M({1, 3}));
    EXPECT_EQ(peak_stat(pi, PeakKind::right).set, M({3, 5}));
    EXPECT_EQ(peak_stat(pi, PeakKind::exterior).set, M({1, 3, 5}));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(peak_stat(Permutation::identity(n), PeakKind::interior).count, 0);
        if (n >= 2) EXPECT_EQ(peak_stat(Permutation::identity(n), PeakKind::right).set, M({n}));
        EXPECT_EQ(peak_stat(eta(n), PeakKind::right).count, 0);
    }
}

TEST(Statistics, OnlyEtaLacksRightPeaks) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : all_permutations(n))
            EXPECT_EQ(peak_stat(pi, PeakKind::right).count == 0, pi == eta(n)) << to_string(pi);
}

TEST(Statistics, SignedExamples) {
    EXPECT_EQ(signed_stat(S({-2, 1}), SignedStatKind::descent).set, M({0}));
    EXPECT_EQ(signed_stat(S({-2, 1}), SignedStatKind::cyclic_descent).set, M({0, 2}));
    auto pk = signed_stat(S({-2, 4, -5, 3, 1}), SignedStatKind::peak);
    EXPECT_EQ(pk.set, M({2, 4}));
    EXPECT_EQ(pk.count, 2);
    EXPECT_EQ(signed_stat(SignedPermutation::identity(4), SignedStatKind::descent).count, 0);
    EXPECT_EQ(signed_stat(SignedPermutation::identity(4), SignedStatKind::sign).count, 0);
    EXPECT_EQ(signed_stat(S({-3, 1, 2}), SignedStatKind::sign).count, 1);
}

TEST(Statistics, SpecialElements) {
    EXPECT_EQ(eta(4), P({4, 3, 2, 1}));
    EXPECT_EQ(omega(4), P({2, 3, 4, 1}));
    EXPECT_EQ(hat(P({2, 1, 3}), 4), P({2, 1, 3, 4}));
    EXPECT_THROW(hat(P({2, 1}), 4), std::invalid_argument);
}

TEST(Statistics, PeakRelationsExhaustive) {
    for (int n = 1; n <= 6; ++n) {
        const Permutation e = eta(n);
        for (const auto& pi : all_permutations(n)) {
            const Mask pe = peak_stat(pi, PeakKind::interior).set, l = peak_stat(pi, PeakKind::left).set,
                       r = peak_stat(pi, PeakKind::right).set, x = peak_stat(pi, PeakKind::exterior).set;
            EXPECT_EQ(pe, peaks_by_rule(pi, 2, n - 1));
            EXPECT_EQ(l, peaks_by_rule(pi, 1, n - 1));
            EXPECT_EQ(r, peaks_by_rule(pi, 2, n));
            EXPECT_EQ(x, peaks_by_rule(pi, 1, n));
            EXPECT_EQ(pe, l & r);
            // For n = 1 the single position is exterior but neither left (i < n) nor right (i > 1).
            if (n >= 2) EXPECT_EQ(x, l | r);
            Mask mirrored = 0;
            for (int i : mask_positions(l)) mirrored |= Mask{1} << (n + 1 - i);
            EXPECT_EQ(peak_stat(compose(pi, e), PeakKind::right).set, mirrored);
            EXPECT_EQ(peak_stat(pi, PeakKind::left).count, peak_stat(compose(pi, e), PeakKind::right).count);
            EXPECT_EQ(peak_stat(compose(e, pi), PeakKind::interior).count + 1, peak_stat(pi, PeakKind::exterior).count);
            EXPECT_LE(2 * peak_stat(pi, PeakKind::interior).count, n - 1);
            EXPECT_LE(2 * peak_stat(pi, PeakKind::left).count, n);
        }
    }
}

TEST(Statistics, CountMatchesPopcount) {
    auto g = gen::rng(11);
    for (int it = 0; it < 300; ++it) {
        const int n = gen::uniform(g, 1, 9);
        const auto pi = gen::permutation(g, n);
        const auto sp = gen::signed_permutation(g, n);
        for (auto s : {descent_stat(pi), descent_stat(pi, DescentKind::cyclic), peak_stat(pi, PeakKind::left),
                       signed_stat(sp, SignedStatKind::descent), signed_stat(sp, SignedStatKind::cyclic_descent),
                       signed_stat(sp, SignedStatKind::peak)})
            EXPECT_EQ(s.count, __builtin_popcountll(s.set));
        EXPECT_LE(2 * signed_stat(sp, SignedStatKind::peak).count, n);
        // linear descents of a signed permutation live in [0, n-1]
        EXPECT_EQ(signed_stat(sp, SignedStatKind::descent).set >> n, 0u);
        EXPECT_EQ(signed_stat(sp, SignedStatKind::peak).set & 1, 0u);
    }
}

TEST(Group, TableAgreesWithCompose) {
    for (auto kind : {GroupKind::symmetric, GroupKind::hyperoctahedral}) {
        const Group& G = Group::get(kind, 3);
        for (std::size_t a = 0; a < G.order(); ++a) {
            EXPECT_EQ(G.multiply(a, G.inverse(a)), G.identity());
            for (std::size_t b = 0; b < G.order(); ++b) {
                const std::size_t ab = G.multiply(a, b);
                if (kind == GroupKind::symmetric)
                    EXPECT_EQ(G.perm(ab), compose(G.perm(a), G.perm(b)));
                else
                    EXPECT_EQ(G.signed_perm(ab), compose(G.signed_perm(a), G.signed_perm(b)));
            }
        }
    }
}
