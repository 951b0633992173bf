#include "peaklab/poset.hpp"

#include <cstdlib>
#include <functional>

namespace peaklab {

namespace {

// Warshall closure on an m x m matrix; returns false if a cycle appears.
bool close_relation(std::vector<char>& rel, int m) {
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (rel[i * m + k])
                for (int j = 0; j < m; ++j)
                    if (rel[k * m + j]) rel[i * m + j] = 1;
    for (int i = 0; i < m; ++i)
        if (rel[i * m + i]) return false;
    return true;
}

constexpr int kMaxPosetSize = 12;

}  // namespace

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less) {
    if (n < 0 || n > kMaxPosetSize) throw std::invalid_argument("poset size out of range");
    Poset P;
    P.n_ = n;
    P.rel_.assign(n * n, 0);
    for (auto [a, b] : less) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("poset relation label out of range");
        P.rel_[(a - 1) * n + (b - 1)] = 1;
    }
    if (!close_relation(P.rel_, n)) throw std::invalid_argument("poset relations contain a cycle");
    return P;
}

Poset Poset::antichain(int n) { return from_relations(n, {}); }

Poset Poset::chain(const Permutation& pi) { return zigzag_poset(pi, 0); }

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

BPoset BPoset::from_relations(int n, const std::vector<std::pair<int, int>>& less, bool symmetrize) {
    if (n < 0 || n > kMaxPosetSize) throw std::invalid_argument("poset size out of range");
    const int m = 2 * n + 1;
    BPoset P;
    P.n_ = n;
    P.rel_.assign(m * m, 0);
    auto set = [&](int a, int b) { P.rel_[(a + n) * m + (b + n)] = 1; };
    for (auto [a, b] : less) {
        if (std::abs(a) > n || std::abs(b) > n)
            throw std::invalid_argument("poset relation label out of range");
        set(a, b);
        if (symmetrize) set(-b, -a);
    }
    if (!symmetrize)
        for (auto [a, b] : less)
            if (!P.rel_[(-b + n) * m + (-a + n)])
                throw std::invalid_argument("type B poset relations are not closed under negation: " +
                                            std::to_string(a) + "<" + std::to_string(b));
    if (!close_relation(P.rel_, m)) throw std::invalid_argument("poset relations contain a cycle");
    return P;
}

BPoset BPoset::antichain(int n) { return from_relations(n, {}); }

BPoset BPoset::chain(const SignedPermutation& pi) { return zigzag_poset(pi, 0); }

std::vector<std::pair<int, int>> BPoset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = -n_; a <= n_; ++a)
        for (int b = -n_; b <= n_; ++b)
            if (less(a, b)) out.emplace_back(a, b);
    return out;
}

Poset zigzag_poset(const Permutation& pi, Mask I) {
    const int n = pi.size();
    if (n >= 1 && (I >> n) != 0) throw std::invalid_argument("zigzag: I must lie in [1,n-1]");
    if (I & 1) throw std::invalid_argument("zigzag: I must lie in [1,n-1]");
    std::vector<std::pair<int, int>> rel;
    for (int s = 1; s < n; ++s) {
        if (I >> s & 1)
            rel.emplace_back(pi(s + 1), pi(s));
        else
            rel.emplace_back(pi(s), pi(s + 1));
    }
    return Poset::from_relations(n, rel);
}

BPoset zigzag_poset(const SignedPermutation& pi, Mask I) {
    const int n = pi.size();
    if ((I >> n) != 0 && n < 63) throw std::invalid_argument("zigzag: I must lie in [0,n-1]");
    std::vector<std::pair<int, int>> rel;
    for (int s = 0; s < n; ++s) {
        if (I >> s & 1)
            rel.emplace_back(pi(s + 1), pi(s));
        else
            rel.emplace_back(pi(s), pi(s + 1));
    }
    return BPoset::from_relations(n, rel);
}

std::vector<Permutation> linear_extensions(const Poset& P) {
    const int n = P.size();
    if (n > group_size_guard(GroupKind::symmetric))
        throw ResourceLimitError("linear_extensions: poset too large (n=" + std::to_string(n) + ")");
    std::vector<Permutation> out;
    std::vector<int> word;
    std::vector<char> used(n + 1, 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(word.size()) == n) {
            out.emplace_back(word);
            return;
        }
        for (int z = 1; z <= n; ++z) {
            if (used[z]) continue;
            bool ready = true;
            for (int d = 1; d <= n && ready; ++d)
                if (!used[d] && d != z && P.less(d, z)) ready = false;
            if (!ready) continue;
            used[z] = 1;
            word.push_back(z);
            rec();
            word.pop_back();
            used[z] = 0;
        }
    };
    rec();
    return out;
}

std::vector<SignedPermutation> linear_extensions(const BPoset& P) {
    const int n = P.size();
    // pi induces -pi(n) < ... < -pi(1) < 0 < pi(1) < ... < pi(n).
    std::vector<SignedPermutation> out;
    std::vector<int> pos(2 * n + 1);
    for (const auto& pi : all_signed_permutations(n)) {
        pos[n] = 0;
        for (int i = 1; i <= n; ++i) {
            pos[pi(i) + n] = i;
            pos[-pi(i) + n] = -i;
        }
        bool ok = true;
        for (int a = -n; a <= n && ok; ++a)
            for (int b = -n; b <= n && ok; ++b)
                if (P.less(a, b) && pos[a + n] >= pos[b + n]) ok = false;
        if (ok) out.push_back(pi);
    }
    return out;
}

}  // namespace peaklab
