#include "peaklab/qsym.hpp"

#include "peaklab/group.hpp"
#include "peaklab/partitions.hpp"
#include "peaklab/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace peaklab {

namespace {

Mask range_mask(int lo, int hi) {
    Mask m = 0;
    for (int i = lo; i <= hi; ++i) m |= Mask{1} << i;
    return m;
}

bool non_adjacent(Mask s) { return (s & (s >> 1)) == 0; }

Rational pow2(int e) { return Rational(Integer(1) << static_cast<unsigned>(e)); }

int popcount(Mask m) { return std::popcount(m); }

// Universe of the set indices of a basis.
Mask universe(QsymBasis b, int n) {
    switch (b) {
        case QsymBasis::M:
        case QsymBasis::F: return range_mask(1, n - 1);
        case QsymBasis::N:
        case QsymBasis::L: return range_mask(0, n - 1);
        case QsymBasis::K_A: return range_mask(2, n - 1);
        case QsymBasis::K_left:
        case QsymBasis::K_B: return range_mask(1, n - 1);
    }
    return 0;
}

template <class F>
void for_each_subset(Mask u, F&& f) {
    Mask s = 0;
    while (true) {
        f(s);
        if (s == u) break;
        s = (s - u) & u;
    }
}

}  // namespace

QsymBasis parse_qsym_basis(const std::string& s) {
    static const std::map<std::string, QsymBasis> names = {
        {"M", QsymBasis::M},     {"F", QsymBasis::F},           {"N", QsymBasis::N},  {"L", QsymBasis::L},
        {"K_A", QsymBasis::K_A}, {"K_left", QsymBasis::K_left}, {"K_B", QsymBasis::K_B},
    };
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown basis: " + s);
    return it->second;
}

std::string to_string(QsymBasis b) {
    switch (b) {
        case QsymBasis::M: return "M";
        case QsymBasis::F: return "F";
        case QsymBasis::N: return "N";
        case QsymBasis::L: return "L";
        case QsymBasis::K_A: return "K_A";
        case QsymBasis::K_left: return "K_left";
        case QsymBasis::K_B: return "K_B";
    }
    return "?";
}

bool uses_zero_variable(QsymBasis b) {
    return b != QsymBasis::M && b != QsymBasis::F && b != QsymBasis::K_A;
}

bool valid_index(QsymBasis b, int n, std::uint64_t key) {
    if (n < 1 || n > 30) return false;
    if (b == QsymBasis::K_B) {
        const Mask s = sign_peak_set(key);
        if ((s & ~universe(b, n)) || !non_adjacent(s)) return false;
        return !(sign_peak_sign(key) && (s & 2));
    }
    if (key & ~universe(b, n)) return false;
    if (b == QsymBasis::K_A || b == QsymBasis::K_left) return non_adjacent(key);
    return true;
}

std::vector<std::uint64_t> basis_indices(QsymBasis b, int n) {
    std::vector<std::uint64_t> out;
    const std::uint64_t top = std::uint64_t{1} << (b == QsymBasis::K_B ? n + 1 : n);
    for (std::uint64_t k = 0; k < top; ++k)
        if (valid_index(b, n, k)) out.push_back(k);
    return out;
}

void QsymExpansion::add(std::uint64_t key, const Rational& c) {
    if (!valid_index(basis_, n_, key))
        throw std::invalid_argument("index not valid for basis " + to_string(basis_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational QsymExpansion::coeff(std::uint64_t key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

DeltaFlavor parse_delta_flavor(const std::string& s) {
    if (s == "interior") return DeltaFlavor::interior;
    if (s == "left") return DeltaFlavor::left;
    if (s == "B") return DeltaFlavor::B;
    throw std::invalid_argument("unknown flavor: " + s);
}

std::string to_string(DeltaFlavor f) {
    switch (f) {
        case DeltaFlavor::interior: return "interior";
        case DeltaFlavor::left: return "left";
        case DeltaFlavor::B: return "B";
    }
    return "?";
}

ExpansionBasis parse_expansion_basis(const std::string& s) {
    if (s == "monomial") return ExpansionBasis::monomial;
    if (s == "fundamental") return ExpansionBasis::fundamental;
    if (s == "peak") return ExpansionBasis::peak;
    throw std::invalid_argument("unknown basis: " + s);
}

std::string to_string(ExpansionBasis b) {
    switch (b) {
        case ExpansionBasis::monomial: return "monomial";
        case ExpansionBasis::fundamental: return "fundamental";
        case ExpansionBasis::peak: return "peak";
    }
    return "?";
}

QsymExpansion peak_function(QsymBasis basis, int n, std::uint64_t key, ExpansionBasis target) {
    if (!valid_index(basis, n, key)) throw std::invalid_argument("invalid peak index");
    if (target == ExpansionBasis::peak) {
        QsymExpansion e(basis, n);
        e.add(key, 1);
        return e;
    }
    const bool typeA = basis == QsymBasis::K_A;
    const bool mono = target == ExpansionBasis::monomial;
    const QsymBasis out_basis = typeA ? (mono ? QsymBasis::M : QsymBasis::F) : (mono ? QsymBasis::N : QsymBasis::L);
    const Mask peaks = basis == QsymBasis::K_B ? sign_peak_set(key) : key;
    const int sign = basis == QsymBasis::K_B ? sign_peak_sign(key) : 0;
    // Interior functions carry one extra factor of 2.
    const int extra = typeA ? 1 : 0;
    QsymExpansion e(out_basis, n);
    for_each_subset(universe(out_basis, n), [&](Mask s) {
        if (sign && !(s & 1)) return;
        if (mono) {
            if ((peaks & ~(s | (s << 1))) == 0) e.add(s, pow2(popcount(s) + extra));
        } else {
            if ((peaks & ~(s ^ (s << 1))) == 0) e.add(s, pow2(popcount(peaks) + sign + extra));
        }
    });
    return e;
}

QsymExpansion delta_expansion(const Permutation& pi, DeltaFlavor flavor, ExpansionBasis basis) {
    if (flavor == DeltaFlavor::B) throw std::invalid_argument("flavor B needs a signed permutation");
    const int n = pi.size();
    if (flavor == DeltaFlavor::interior)
        return peak_function(QsymBasis::K_A, n, peak_stat(pi, PeakKind::interior).set, basis);
    return peak_function(QsymBasis::K_left, n, peak_stat(pi, PeakKind::left).set, basis);
}

QsymExpansion delta_expansion(const SignedPermutation& pi, ExpansionBasis basis) {
    const int sign = signed_stat(pi, SignedStatKind::sign).count;
    return peak_function(QsymBasis::K_B, pi.size(), sign_peak_key(sign, signed_stat(pi, SignedStatKind::peak).set),
                         basis);
}

QsymExpansion to_fundamental(const QsymExpansion& e) {
    switch (e.basis()) {
        case QsymBasis::F:
        case QsymBasis::L: return e;
        case QsymBasis::M:
        case QsymBasis::N: {
            const QsymBasis target = e.basis() == QsymBasis::M ? QsymBasis::F : QsymBasis::L;
            const Mask u = universe(e.basis(), e.n());
            QsymExpansion out(target, e.n());
            for (const auto& [s, c] : e.coeffs())
                for_each_subset(u & ~s, [&](Mask extra) {
                    out.add(s | extra, popcount(extra) % 2 ? Rational(-c) : c);
                });
            return out;
        }
        default: {
            const QsymBasis target = e.basis() == QsymBasis::K_A ? QsymBasis::F : QsymBasis::L;
            QsymExpansion out(target, e.n());
            for (const auto& [k, c] : e.coeffs()) {
                const QsymExpansion part = peak_function(e.basis(), e.n(), k, ExpansionBasis::fundamental);
                for (const auto& [s, d] : part.coeffs()) out.add(s, c * d);
            }
            return out;
        }
    }
}

QsymExpansion to_monomial(const QsymExpansion& e) {
    if (e.basis() == QsymBasis::M || e.basis() == QsymBasis::N) return e;
    const QsymExpansion f = to_fundamental(e);
    const QsymBasis target = f.basis() == QsymBasis::F ? QsymBasis::M : QsymBasis::N;
    const Mask u = universe(f.basis(), f.n());
    QsymExpansion out(target, f.n());
    for (const auto& [s, c] : f.coeffs())
        for_each_subset(u & ~s, [&](Mask extra) { out.add(s | extra, c); });
    return out;
}

MultiPoly truncate_realize(const QsymExpansion& expansion, int m) {
    const int n = expansion.n();
    if (m < 1 || m > 6 || n > 8) throw ResourceLimitError("truncated realization guard exceeded");
    const QsymExpansion e =
        (expansion.basis() == QsymBasis::M || expansion.basis() == QsymBasis::N) ? expansion : to_fundamental(expansion);
    const bool monomial = e.basis() == QsymBasis::M || e.basis() == QsymBasis::N;
    const bool with_zero = e.basis() == QsymBasis::N || e.basis() == QsymBasis::L;
    const int lo = with_zero ? 0 : 1;
    const std::size_t arity = static_cast<std::size_t>(m + (with_zero ? 1 : 0));
    MultiPoly out(arity);
    std::vector<int> seq(n);
    Exponent ex(arity);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == n) {
            Mask strict = 0;
            if (with_zero && seq[0] > 0) strict |= 1;
            for (int s = 1; s < n; ++s)
                if (seq[s - 1] < seq[s]) strict |= Mask{1} << s;
            Rational c = 0;
            for (const auto& [S, d] : e.coeffs())
                if (monomial ? S == strict : (S & ~strict) == 0) c += d;
            if (c == 0) return;
            std::fill(ex.begin(), ex.end(), 0);
            for (int v : seq) ++ex[v - lo];
            out.add_term(ex, c);
            return;
        }
        for (int v = low; v <= m; ++v) {
            seq[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, lo);
    return out;
}

MultiPoly chain_realization(const Permutation& pi, DeltaFlavor flavor, int m) {
    if (flavor == DeltaFlavor::B) throw std::invalid_argument("flavor B needs a signed permutation");
    const AlphabetKind kind = flavor == DeltaFlavor::interior ? AlphabetKind::enriched : AlphabetKind::left_enriched;
    return partition_gf(Poset::chain(pi), ImageSetSpec{kind, m});
}

MultiPoly chain_realization(const SignedPermutation& pi, int m) {
    return partition_gf(BPoset::chain(pi), ImageSetSpec{AlphabetKind::B_enriched, m});
}

BipartiteFlavor parse_bipartite_flavor(const std::string& s) {
    static const std::map<std::string, BipartiteFlavor> names = {
        {"gesA", BipartiteFlavor::gesA},
        {"interior", BipartiteFlavor::interior},
        {"left", BipartiteFlavor::left},
        {"B", BipartiteFlavor::B},
        {"peakideal_mixed", BipartiteFlavor::peakideal_mixed},
        {"interiordescent_mixed", BipartiteFlavor::interiordescent_mixed},
    };
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown bipartite flavor: " + s);
    return it->second;
}

std::string to_string(BipartiteFlavor f) {
    switch (f) {
        case BipartiteFlavor::gesA: return "gesA";
        case BipartiteFlavor::interior: return "interior";
        case BipartiteFlavor::left: return "left";
        case BipartiteFlavor::B: return "B";
        case BipartiteFlavor::peakideal_mixed: return "peakideal_mixed";
        case BipartiteFlavor::interiordescent_mixed: return "interiordescent_mixed";
    }
    return "?";
}

namespace {

// Product of two alphabets. The outer coordinate is compared first. In the up-down order
// ties in the outer letter are broken upward or downward by its sign; in the
// lexicographic order they are broken upward and the sign comes from the inner letter.
struct ProductAlphabet {
    Alphabet alphabet;
    std::vector<std::pair<int, int>> parts;
};

ProductAlphabet product_alphabet(const Alphabet& outer, const Alphabet& inner, bool updown) {
    std::vector<std::pair<int, int>> parts;
    for (int a = 0; a < static_cast<int>(outer.size()); ++a)
        for (int b = 0; b < static_cast<int>(inner.size()); ++b) parts.emplace_back(a, b);
    std::sort(parts.begin(), parts.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        if (updown && outer.letters[x.first].eps < 0) return x.second > y.second;
        return x.second < y.second;
    });
    ProductAlphabet P;
    P.parts = parts;
    auto index_of = [&](int a, int b) {
        return static_cast<int>(std::find(parts.begin(), parts.end(), std::make_pair(a, b)) - parts.begin());
    };
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto [a, b] = parts[i];
        Letter l;
        l.value = static_cast<int>(i);
        l.eps = updown ? outer.letters[a].eps * inner.letters[b].eps : inner.letters[b].eps;
        l.weight = 0;
        const int na = outer.letters[a].neg, nb = inner.letters[b].neg;
        l.neg = (na >= 0 && nb >= 0) ? index_of(na, nb) : -1;
        P.alphabet.letters.push_back(l);
    }
    if (outer.zero >= 0 && inner.zero >= 0) P.alphabet.zero = index_of(outer.zero, inner.zero);
    return P;
}

int slot(const Alphabet& A, int letter) { return A.letters[letter].weight - A.min_weight; }

struct BipartiteSetup {
    ImageSetSpec outer, inner;
    bool updown;
};

template <class PosetT>
MultiPoly chain_gf(const PosetT& P, const Alphabet& A, std::size_t arity, std::size_t offset) {
    std::map<Exponent, std::uint64_t> acc;
    Exponent e(arity);
    for_each_partition(P, A, [&](const std::vector<int>& f) {
        std::fill(e.begin(), e.end(), 0);
        for (int x : f) ++e[offset + slot(A, x)];
        ++acc[e];
    });
    MultiPoly out(arity);
    for (const auto& [ex, c] : acc) out.add_term(ex, Rational(Integer(static_cast<unsigned long>(c))));
    return out;
}

template <class PosetT>
MultiPoly product_gf(const PosetT& P, const ProductAlphabet& PA, const Alphabet& outer, const Alphabet& inner) {
    const std::size_t arity = static_cast<std::size_t>(outer.num_vars + inner.num_vars);
    std::map<Exponent, std::uint64_t> acc;
    Exponent e(arity);
    for_each_partition(P, PA.alphabet, [&](const std::vector<int>& f) {
        std::fill(e.begin(), e.end(), 0);
        for (int x : f) {
            ++e[slot(outer, PA.parts[x].first)];
            ++e[outer.num_vars + slot(inner, PA.parts[x].second)];
        }
        ++acc[e];
    });
    MultiPoly out(arity);
    for (const auto& [ex, c] : acc) out.add_term(ex, Rational(Integer(static_cast<unsigned long>(c))));
    return out;
}

template <class PosetT, class PermT>
BipartiteReport run_bipartite(const std::vector<int>& images, GroupKind kind, const BipartiteSetup& s) {
    const Alphabet outer = make_alphabet(s.outer);
    const Alphabet inner = make_alphabet(s.inner);
    const ProductAlphabet PA = product_alphabet(outer, inner, s.updown);
    const int n = static_cast<int>(images.size());
    const Group& G = Group::get(kind, n);
    const std::size_t arity = static_cast<std::size_t>(outer.num_vars + inner.num_vars);
    const std::size_t pi = G.index_of(images);

    const MultiPoly lhs = product_gf(PosetT::chain(PermT(images)), PA, outer, inner);
    MultiPoly rhs(arity);
    for (std::size_t sigma = 0; sigma < G.order(); ++sigma) {
        const std::size_t tau = G.multiply(G.inverse(sigma), pi);
        const MultiPoly gs = chain_gf(PosetT::chain(PermT(G.element(sigma))), inner, arity, outer.num_vars);
        const MultiPoly gt = chain_gf(PosetT::chain(PermT(G.element(tau))), outer, arity, 0);
        rhs += gs * gt;
    }
    BipartiteReport r;
    r.ok = lhs == rhs;
    if (!r.ok)
        r.detail = "pi=" + G.element_string(pi) + " outer=" + to_string(s.outer.kind) + " inner=" +
                   to_string(s.inner.kind) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    return r;
}

}  // namespace

BipartiteReport bipartite_check(const std::vector<int>& images, BipartiteFlavor flavor, int p, int q) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > 4 || p < 1 || q < 1 || p > 3 || q > 3)
        throw ResourceLimitError("bipartite check guard exceeded (n<=4, p,q<=3)");
    using AK = AlphabetKind;
    auto A = [&](const BipartiteSetup& s) {
        return run_bipartite<Poset, Permutation>(images, GroupKind::symmetric, s);
    };
    switch (flavor) {
        case BipartiteFlavor::gesA:
            return A({{AK::ordinary, p}, {AK::ordinary, q}, false});
        case BipartiteFlavor::interior:
            return A({{AK::enriched, p}, {AK::enriched, q}, true});
        case BipartiteFlavor::left:
            return A({{AK::left_enriched, p}, {AK::left_enriched, q}, true});
        case BipartiteFlavor::B:
            return run_bipartite<BPoset, SignedPermutation>(images, GroupKind::hyperoctahedral,
                                                            {{AK::B_enriched, p}, {AK::B_enriched, q}, true});
        case BipartiteFlavor::peakideal_mixed: {
            // Enriched outer with a left inner factor, and the reverse.
            BipartiteReport r1 = A({{AK::enriched, p}, {AK::left_enriched, q}, true});
            BipartiteReport r2 = A({{AK::left_enriched, p}, {AK::enriched, q}, true});
            BipartiteReport r;
            r.ok = r1.ok && r2.ok;
            r.detail = r1.ok ? r2.detail : r1.detail;
            return r;
        }
        case BipartiteFlavor::interiordescent_mixed:
            return A({{AK::ordinary, p}, {AK::enriched, q}, false});
    }
    throw std::logic_error("unhandled bipartite flavor");
}

StructureConstants coalgebra_constants(int n, ClassFamily family) {
    switch (family) {
        case ClassFamily::descent_set:
        case ClassFamily::peak_interior_set:
        case ClassFamily::peak_left_set:
        case ClassFamily::B_peak_sign_set: return structure_constants(n, family);
        default: throw std::invalid_argument("no coalgebra for family " + to_string(family));
    }
}

PeakFamily parse_peak_family(const std::string& s) {
    if (s == "interior") return PeakFamily::interior;
    if (s == "left") return PeakFamily::left;
    if (s == "B") return PeakFamily::B;
    throw std::invalid_argument("unknown peak family: " + s);
}

namespace {

QsymBasis k_basis(PeakFamily f) {
    switch (f) {
        case PeakFamily::interior: return QsymBasis::K_A;
        case PeakFamily::left: return QsymBasis::K_left;
        case PeakFamily::B: return QsymBasis::K_B;
    }
    return QsymBasis::K_A;
}

}  // namespace

std::size_t peak_basis_rank(int n, PeakFamily family) {
    if (n < 1 || n > 12) throw ResourceLimitError("peak basis rank guard exceeded (n<=12)");
    const QsymBasis b = k_basis(family);
    std::vector<SparseVec> rows;
    for (std::uint64_t key : basis_indices(b, n)) {
        SparseVec v;
        const QsymExpansion k = peak_function(b, n, key, ExpansionBasis::fundamental);
        for (const auto& [s, c] : k.coeffs()) v.emplace(s, c);
        rows.push_back(std::move(v));
    }
    return rank_of(rows);
}

std::size_t peak_set_count(int n, PeakFamily family) { return basis_indices(k_basis(family), n).size(); }

std::uint64_t fibonacci(int k) {
    std::uint64_t a = 1, b = 1;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace peaklab
