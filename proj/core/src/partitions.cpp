#include "peaklab/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace peaklab {

AlphabetKind parse_alphabet_kind(const std::string& s) {
    static const std::pair<const char*, AlphabetKind> names[] = {
        {"ordinary", AlphabetKind::ordinary},
        {"ordinaryB", AlphabetKind::ordinaryB},
        {"enriched", AlphabetKind::enriched},
        {"left_enriched", AlphabetKind::left_enriched},
        {"right_enriched", AlphabetKind::right_enriched},
        {"exterior_enriched", AlphabetKind::exterior_enriched},
        {"B_enriched", AlphabetKind::B_enriched},
    };
    for (auto [name, kind] : names)
        if (s == name) return kind;
    throw std::invalid_argument("unknown alphabet kind: " + s);
}

std::string to_string(AlphabetKind kind) {
    switch (kind) {
        case AlphabetKind::ordinary: return "ordinary";
        case AlphabetKind::ordinaryB: return "ordinaryB";
        case AlphabetKind::enriched: return "enriched";
        case AlphabetKind::left_enriched: return "left_enriched";
        case AlphabetKind::right_enriched: return "right_enriched";
        case AlphabetKind::exterior_enriched: return "exterior_enriched";
        case AlphabetKind::B_enriched: return "B_enriched";
    }
    return "?";
}

bool is_type_b(AlphabetKind kind) {
    return kind == AlphabetKind::ordinaryB || kind == AlphabetKind::B_enriched;
}

std::string Alphabet::letter_name(int x) const {
    const Letter& l = letters.at(x);
    std::string s = std::to_string(l.value);
    // Letters of type B enriched alphabets with eps = -1 carry an explicit exponent.
    if (l.neg >= 0 && l.eps < 0) s += "^-1";
    return s;
}

namespace {

void push_enriched(std::vector<Letter>& out, int from, int to) {
    for (int v = from; v <= to; ++v) {
        out.push_back({-v, -1, v, -1});
        out.push_back({v, +1, v, -1});
    }
}

}  // namespace

Alphabet make_alphabet(const ImageSetSpec& spec) {
    const int k = spec.k;
    if (k < 0) throw std::invalid_argument("alphabet parameter k must be nonnegative");
    Alphabet A;
    auto& L = A.letters;
    switch (spec.kind) {
        case AlphabetKind::ordinary:
            for (int v = 1; v <= k; ++v) L.push_back({v, +1, v, -1});
            break;
        case AlphabetKind::ordinaryB:
            for (int v = -k; v <= k; ++v) L.push_back({v, +1, std::abs(v), k - v});
            A.zero = k;
            break;
        case AlphabetKind::enriched:
            push_enriched(L, 1, k);
            break;
        case AlphabetKind::left_enriched:
            L.push_back({0, +1, 0, -1});
            push_enriched(L, 1, k);
            break;
        case AlphabetKind::right_enriched:
            push_enriched(L, 1, k);
            L.push_back({-(k + 1), -1, k + 1, -1});
            break;
        case AlphabetKind::exterior_enriched:
            if (k > 0) {
                L.push_back({0, +1, 0, -1});
                push_enriched(L, 1, k - 1);
                L.push_back({-k, -1, k, -1});
            }
            break;
        case AlphabetKind::B_enriched: {
            for (int v = k; v >= 1; --v) {
                L.push_back({-v, +1, v, -1});
                L.push_back({-v, -1, v, -1});
            }
            L.push_back({0, +1, 0, -1});
            for (int v = 1; v <= k; ++v) {
                L.push_back({v, -1, v, -1});
                L.push_back({v, +1, v, -1});
            }
            const int m = static_cast<int>(L.size());
            for (int i = 0; i < m; ++i) L[i].neg = m - 1 - i;
            A.zero = 2 * k;
            break;
        }
    }
    int lo = 1, hi = 0;
    bool any = false;
    for (const auto& l : L) {
        if (!any || l.weight < lo) lo = l.weight;
        if (!any || l.weight > hi) hi = l.weight;
        any = true;
    }
    // Variable slots: z_0.. when a zero letter can occur, z_1.. otherwise.
    bool has_zero_slot = spec.kind == AlphabetKind::ordinaryB || spec.kind == AlphabetKind::B_enriched ||
                         spec.kind == AlphabetKind::left_enriched ||
                         spec.kind == AlphabetKind::exterior_enriched;
    A.min_weight = has_zero_slot ? 0 : 1;
    A.num_vars = any ? hi - A.min_weight + 1 : (has_zero_slot ? 1 : 0);
    (void)lo;
    return A;
}

namespace {

void check_guard(int n, int k, PartitionGuard g) {
    if (n > g.max_n || k > g.max_k)
        throw ResourceLimitError("P-partition enumeration guard exceeded (n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + "; limits n<=" + std::to_string(g.max_n) +
                                 ", k<=" + std::to_string(g.max_k) + ")");
}

// Checks the constraint attached to a <_P b for the letters fa, fb.
inline bool related_ok(const Alphabet& A, int a, int b, int fa, int fb) {
    return a < b ? A.leq_plus(fa, fb) : A.leq_minus(fa, fb);
}

}  // namespace

void for_each_partition(const Poset& P, const ImageSetSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit, PartitionGuard guard) {
    if (is_type_b(spec.kind)) throw std::invalid_argument("type B alphabet used with a type A poset");
    check_guard(P.size(), spec.k, guard);
    for_each_partition(P, make_alphabet(spec), visit);
}

void for_each_partition(const Poset& P, const Alphabet& A,
                        const std::function<void(const std::vector<int>&)>& visit) {
    const int n = P.size();
    const int L = static_cast<int>(A.size());
    // Assign labels along a linear extension so every predecessor is fixed first.
    std::vector<int> order;
    {
        std::vector<char> used(n + 1, 0);
        while (static_cast<int>(order.size()) < n)
            for (int z = 1; z <= n; ++z) {
                if (used[z]) continue;
                bool ready = true;
                for (int d = 1; d <= n; ++d)
                    if (!used[d] && d != z && P.less(d, z)) ready = false;
                if (ready) {
                    used[z] = 1;
                    order.push_back(z);
                    break;
                }
            }
    }
    std::vector<int> f(n, -1);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == n) {
            visit(f);
            return;
        }
        const int z = order[depth];
        for (int x = 0; x < L; ++x) {
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int w = order[d];
                const int fw = f[w - 1];
                if (P.less(w, z))
                    ok = related_ok(A, w, z, fw, x);
                else if (P.less(z, w))
                    ok = related_ok(A, z, w, x, fw);
            }
            if (!ok) continue;
            f[z - 1] = x;
            rec(depth + 1);
        }
        f[z - 1] = -1;
    };
    rec(0);
}

void for_each_partition(const BPoset& P, const ImageSetSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit, PartitionGuard guard) {
    if (!is_type_b(spec.kind)) throw std::invalid_argument("type A alphabet used with a type B poset");
    check_guard(P.size(), spec.k, guard);
    for_each_partition(P, make_alphabet(spec), visit);
}

void for_each_partition(const BPoset& P, const Alphabet& A,
                        const std::function<void(const std::vector<int>&)>& visit) {
    if (A.zero < 0) throw std::invalid_argument("type B poset needs an alphabet with a zero letter");
    const int n = P.size();
    const int L = static_cast<int>(A.size());
    // val[e + n] is the letter at element e in -n..n.
    std::vector<int> val(2 * n + 1, -1);
    val[n] = A.zero;
    auto consistent = [&](int e) {
        for (int o = -n; o <= n; ++o) {
            const int fo = val[o + n];
            if (fo < 0) continue;
            const int fe = val[e + n];
            if (P.less(e, o) && !related_ok(A, e, o, fe, fo)) return false;
            if (P.less(o, e) && !related_ok(A, o, e, fo, fe)) return false;
        }
        return true;
    };
    if (!consistent(0)) return;
    std::vector<int> f(n, -1);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            visit(f);
            return;
        }
        for (int x = 0; x < L; ++x) {
            val[i + n] = x;
            val[-i + n] = A.letters[x].neg;
            if (consistent(i) && consistent(-i)) {
                f[i - 1] = x;
                rec(i + 1);
            }
        }
        val[i + n] = val[-i + n] = -1;
        f[i - 1] = -1;
    };
    rec(1);
}

std::uint64_t count_partitions(const Poset& P, const ImageSetSpec& spec, PartitionGuard guard) {
    std::uint64_t c = 0;
    for_each_partition(P, spec, [&](const std::vector<int>&) { ++c; }, guard);
    return c;
}

std::uint64_t count_partitions(const BPoset& P, const ImageSetSpec& spec, PartitionGuard guard) {
    std::uint64_t c = 0;
    for_each_partition(P, spec, [&](const std::vector<int>&) { ++c; }, guard);
    return c;
}

namespace {

template <class PosetT>
MultiPoly gf_impl(const PosetT& P, const ImageSetSpec& spec, PartitionGuard guard) {
    const Alphabet A = make_alphabet(spec);
    std::map<Exponent, std::uint64_t> acc;
    Exponent e(A.num_vars);
    for_each_partition(
        P, spec,
        [&](const std::vector<int>& f) {
            std::fill(e.begin(), e.end(), 0);
            for (int x : f) ++e[A.letters[x].weight - A.min_weight];
            ++acc[e];
        },
        guard);
    MultiPoly out(A.num_vars);
    for (const auto& [ex, c] : acc) out.add_term(ex, Rational(Integer(static_cast<unsigned long>(c))));
    return out;
}

// Number of letter sequences x_1..x_m with x_s related to x_{s+1} by <=+ (strict[s] false)
// or <=- (strict[s] true); x_1 is free, or tied to `start` through strict[0] when start >= 0.
Integer chain_dp(const Alphabet& A, int start, const std::vector<bool>& strict) {
    const int L = static_cast<int>(A.size());
    std::vector<Integer> ways(L, 0), next(L);
    if (start >= 0) {
        for (int x = 0; x < L; ++x)
            if (strict[0] ? A.leq_minus(start, x) : A.leq_plus(start, x)) ways[x] = 1;
    } else {
        std::fill(ways.begin(), ways.end(), Integer(1));
    }
    std::size_t s = 1;
    for (; s < strict.size(); ++s) {
        // prefix sums over letters below y, then add the diagonal term
        Integer run = 0;
        for (int y = 0; y < L; ++y) {
            next[y] = run;
            bool diag = strict[s] ? A.letters[y].eps < 0 : A.letters[y].eps > 0;
            if (diag) next[y] += ways[y];
            run += ways[y];
        }
        ways.swap(next);
    }
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

}  // namespace

MultiPoly partition_gf(const Poset& P, const ImageSetSpec& spec, PartitionGuard guard) {
    return gf_impl(P, spec, guard);
}

MultiPoly partition_gf(const BPoset& P, const ImageSetSpec& spec, PartitionGuard guard) {
    return gf_impl(P, spec, guard);
}

Integer count_chain_partitions(const Permutation& pi, const ImageSetSpec& spec) {
    if (is_type_b(spec.kind)) throw std::invalid_argument("type B alphabet used with a permutation");
    const int n = pi.size();
    if (n == 0) return 1;
    const Alphabet A = make_alphabet(spec);
    // strict[s] for the step from position s to s+1 (first entry is a dummy for the free start).
    std::vector<bool> strict(n, false);
    for (int s = 1; s < n; ++s) strict[s] = pi(s) > pi(s + 1);
    return chain_dp(A, -1, strict);
}

Integer count_chain_partitions(const SignedPermutation& pi, const ImageSetSpec& spec) {
    if (!is_type_b(spec.kind)) throw std::invalid_argument("type A alphabet used with a signed permutation");
    const int n = pi.size();
    if (n == 0) return 1;
    const Alphabet A = make_alphabet(spec);
    std::vector<bool> strict(n);
    for (int s = 0; s < n; ++s) strict[s] = pi(s) > pi(s + 1);
    // Only the nonnegative half of the alphabet is reachable above the zero letter.
    return chain_dp(A, A.zero, strict);
}

namespace {

template <class PosetT>
Integer support_bucket(const PosetT& P, const ImageSetSpec& spec, int lo, int l) {
    const Alphabet A = make_alphabet(spec);
    std::uint64_t c = 0;
    for_each_partition(
        P, spec,
        [&](const std::vector<int>& f) {
            Mask used = 0;
            for (int x : f) used |= Mask{1} << A.letters[x].weight;
            Mask want = 0;
            for (int w = lo; w <= l; ++w) want |= Mask{1} << w;
            if (used == want) ++c;
        },
        PartitionGuard{P.size(), l});
    return Integer(static_cast<unsigned long>(c));
}

}  // namespace

SupportCounts support_counts(const Poset& P, AlphabetKind kind) {
    if (kind != AlphabetKind::enriched && kind != AlphabetKind::left_enriched)
        throw std::invalid_argument("support_counts: expected enriched or left_enriched");
    const int n = P.size();
    SupportCounts sc;
    sc.c.assign(n + 1, 0);
    for (int l = 1; l <= n; ++l) sc.c[l] = support_bucket(P, {AlphabetKind::enriched, l}, 1, l);
    if (kind == AlphabetKind::left_enriched) {
        sc.c0.assign(n, 0);
        for (int l = 0; l < n; ++l) sc.c0[l] = support_bucket(P, {AlphabetKind::left_enriched, l}, 0, l);
    }
    return sc;
}

SupportCounts support_counts(const BPoset& P) {
    const int n = P.size();
    SupportCounts sc;
    sc.c.assign(n + 1, 0);
    sc.c0.assign(n, 0);
    for (int l = 1; l <= n; ++l) sc.c[l] = support_bucket(P, {AlphabetKind::B_enriched, l}, 1, l);
    for (int l = 0; l < n; ++l) sc.c0[l] = support_bucket(P, {AlphabetKind::B_enriched, l}, 0, l);
    return sc;
}

Integer support_sum(const SupportCounts& sc, int k, bool with_zero) {
    Integer total = 0;
    for (std::size_t l = 1; l < sc.c.size(); ++l) total += binomial(k, l) * sc.c[l];
    if (with_zero)
        for (std::size_t l = 0; l < sc.c0.size(); ++l) total += binomial(k, l) * sc.c0[l];
    return total;
}

}  // namespace peaklab
