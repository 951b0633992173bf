#include "peaklab/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace peaklab {

SparseVec to_sparse(const GAElem& x) {
    SparseVec v;
    for (const auto& [k, c] : x.terms()) v.emplace(k, c);
    return v;
}

std::size_t span_rank(const std::vector<GAElem>& elems) {
    Echelon e;
    for (const auto& x : elems) e.insert(to_sparse(x));
    return e.rank();
}

bool in_span(const std::vector<GAElem>& elems, const GAElem& x) {
    Echelon e;
    for (const auto& y : elems) e.insert(to_sparse(y));
    return e.contains(to_sparse(x));
}

std::vector<GAElem> class_sums(int n, ClassFamily f) {
    std::vector<GAElem> out;
    for (ClassLabel l : class_labels(f, n)) out.push_back(class_sum(n, f, l).elem);
    return out;
}

ClosureResult multiplicative_closure(const std::vector<GAElem>& elems, std::size_t cap) {
    ClosureResult r;
    Echelon e;
    for (const auto& x : elems) {
        if (e.insert(to_sparse(x))) r.basis.push_back(x);
    }
    r.initial_rank = r.basis.size();
    if (r.initial_rank > cap) throw ResourceLimitError("closure dimension exceeds cap");

    for (std::size_t i = 0; i < elems.size() && !r.witness; ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (!e.contains(to_sparse(elems[i] * elems[j]))) {
                r.initially_closed = false;
                r.witness = std::make_pair(i, j);
                break;
            }
        }
    }
    if (r.initially_closed) return r;

    std::size_t done = 0;
    while (done < r.basis.size()) {
        const std::size_t top = r.basis.size();
        for (std::size_t i = 0; i < top; ++i) {
            for (std::size_t j = 0; j < top; ++j) {
                if (i < done && j < done) continue;
                GAElem p = r.basis[i] * r.basis[j];
                if (e.insert(to_sparse(p))) {
                    r.basis.push_back(std::move(p));
                    if (r.basis.size() > cap) throw ResourceLimitError("closure dimension exceeds cap");
                }
            }
        }
        done = top;
    }
    return r;
}

PairTensor pair_tensor(const Group& G, const std::vector<std::uint32_t>& cls1, std::size_t k1,
                       const std::vector<std::uint32_t>& cls2, std::size_t k2) {
    PairTensor t;
    t.k1 = k1;
    t.k2 = k2;
    const std::size_t N = G.order();
    t.counts.assign(N * k1 * k2, 0);
    for (std::size_t s = 0; s < N; ++s) {
        const std::size_t a = cls1[s];
        for (std::size_t u = 0; u < N; ++u) {
            const std::size_t pi = G.multiply(s, u);
            ++t.counts[(pi * k1 + a) * k2 + cls2[u]];
        }
    }
    return t;
}

namespace {

struct Classes {
    std::vector<ClassLabel> labels;
    std::vector<std::uint32_t> cls;
};

Classes classes_of(const Group& G, ClassFamily f) {
    Classes c;
    c.labels = class_labels(f, G.n());
    c.cls.resize(G.order());
    for (std::size_t i = 0; i < G.order(); ++i) {
        const ClassLabel l = classify(f, G, i);
        c.cls[i] = static_cast<std::uint32_t>(
            std::lower_bound(c.labels.begin(), c.labels.end(), l) - c.labels.begin());
    }
    return c;
}

}  // namespace

StructureConstants structure_constants(int n, ClassFamily f) {
    const GroupKind kind = group_of(f);
    if (n < 1 || n > group_size_guard(kind)) throw ResourceLimitError("group size guard exceeded");
    const Group& G = Group::get(kind, n);
    const Classes c = classes_of(G, f);
    const std::size_t m = c.labels.size();
    const PairTensor t = pair_tensor(G, c.cls, m, c.cls, m);

    StructureConstants sc{f, n, c.labels, std::vector<std::size_t>(m, 0),
                          std::vector<std::size_t>(m, G.order()), {}, true, std::nullopt};
    for (std::size_t i = 0; i < G.order(); ++i) {
        ++sc.class_sizes[c.cls[i]];
        if (sc.representatives[c.cls[i]] == G.order()) sc.representatives[c.cls[i]] = i;
    }
    sc.entries.assign(m * m * m, 0);
    for (std::size_t I = 0; I < m; ++I)
        for (std::size_t J = 0; J < m; ++J)
            for (std::size_t K = 0; K < m; ++K) sc.entries[(I * m + J) * m + K] = t.at(sc.representatives[K], I, J);

    for (std::size_t pi = 0; pi < G.order() && sc.well_defined; ++pi) {
        const std::size_t K = c.cls[pi];
        const std::size_t rep = sc.representatives[K];
        if (rep == pi) continue;
        for (std::size_t I = 0; I < m && sc.well_defined; ++I) {
            for (std::size_t J = 0; J < m; ++J) {
                if (t.at(pi, I, J) != t.at(rep, I, J)) {
                    sc.well_defined = false;
                    sc.counterexample = StructureCounterexample{I, J, K, rep, pi, t.at(rep, I, J), t.at(pi, I, J)};
                    break;
                }
            }
        }
    }
    return sc;
}

std::optional<StructureConstants> first_ill_defined(ClassFamily f, int n_from, int n_to) {
    for (int n = n_from; n <= n_to; ++n) {
        StructureConstants sc = structure_constants(n, f);
        if (!sc.well_defined) return sc;
    }
    return std::nullopt;
}

RefinedKind parse_refined_kind(const std::string& s) {
    if (s == "typeB_F") return RefinedKind::typeB_F;
    if (s == "typeA_F") return RefinedKind::typeA_F;
    throw std::invalid_argument("unknown refined decomposition: " + s);
}

namespace {

GAElem sum_where(int n, ClassFamily f, ClassLabel l) { return class_sum(n, f, l).elem; }

}  // namespace

RefinedReport refined_decomposition(int n, RefinedKind kind) {
    RefinedReport rep;
    auto check = [&](std::string rel, const GAElem& a, const GAElem& b) {
        const bool ok = a == b;
        rep.ok = rep.ok && ok;
        rep.relations.push_back({std::move(rel), ok});
    };
    std::vector<GAElem> E, Ec;
    if (kind == RefinedKind::typeB_F) {
        const GroupKind g = GroupKind::hyperoctahedral;
        if (n < 1 || n > group_size_guard(g)) throw ResourceLimitError("group size guard exceeded");
        // F_i^+ / F_i^-: cdes_B = i and pi(n) positive / negative, for i = 1..n.
        std::vector<GAElem> Fp, Fm;
        for (int i = 0; i <= n + 1; ++i) {
            Fp.push_back(sum_where(n, ClassFamily::B_cyclic_descent_sign, pair_label(i, 0)));
            Fm.push_back(sum_where(n, ClassFamily::B_cyclic_descent_sign, pair_label(i, 1)));
        }
        for (int i = 1; i <= n; ++i) {
            rep.pieces.push_back({"F_" + std::to_string(i) + "^+", Fp[i]});
            rep.pieces.push_back({"F_" + std::to_string(i) + "^-", Fm[i]});
        }
        for (int i = 1; i <= n + 1; ++i) E.push_back(sum_where(n, ClassFamily::B_descent_num, i - 1));
        for (int i = 1; i <= n; ++i) Ec.push_back(sum_where(n, ClassFamily::B_cyclic_descent_num, i));
        check("E_{B,1} = F_1^+", E[0], Fp[1]);
        check("E_{B," + std::to_string(n + 1) + "} = F_" + std::to_string(n) + "^-", E[n], Fm[n]);
        for (int i = 2; i <= n; ++i)
            check("E_{B," + std::to_string(i) + "} = F_" + std::to_string(i - 1) + "^- + F_" + std::to_string(i) + "^+",
                  E[i - 1], Fm[i - 1] + Fp[i]);
        for (int i = 1; i <= n; ++i)
            check("E^(c)_{B," + std::to_string(i) + "} = F_" + std::to_string(i) + "^- + F_" + std::to_string(i) + "^+",
                  Ec[i - 1], Fm[i] + Fp[i]);
    } else {
        const GroupKind g = GroupKind::symmetric;
        if (n < 2) throw std::invalid_argument("refined_decomposition: type A needs n >= 2");
        if (n > group_size_guard(g)) throw ResourceLimitError("group size guard exceeded");
        const int top = (n + 1) / 2;
        // F_i^1 / F_i^0: i-1 interior peaks with / without 1 in Des.
        std::vector<GAElem> F1, F0;
        for (int i = 0; i <= top + 1; ++i) {
            F1.push_back(i >= 1 ? sum_where(n, ClassFamily::peak_interior_first_descent, pair_label(i - 1, 1))
                                : GAElem(g, n));
            F0.push_back(i >= 1 ? sum_where(n, ClassFamily::peak_interior_first_descent, pair_label(i - 1, 0))
                                : GAElem(g, n));
        }
        for (int i = 1; i <= top; ++i) {
            rep.pieces.push_back({"F_" + std::to_string(i) + "^1", F1[i]});
            rep.pieces.push_back({"F_" + std::to_string(i) + "^0", F0[i]});
        }
        const int ltop = n / 2 + 1;
        for (int i = 1; i <= ltop; ++i) E.push_back(sum_where(n, ClassFamily::peak_left_num, i - 1));
        for (int i = 1; i <= top; ++i) Ec.push_back(sum_where(n, ClassFamily::peak_interior_num, i - 1));
        check("E^(l)_1 = F_1^0", E[0], F0[1]);
        if (n % 2 == 0)
            check("E^(l)_" + std::to_string(ltop) + " = F^1_" + std::to_string(n / 2), E[ltop - 1], F1[n / 2]);
        else
            check("E^(l)_" + std::to_string(ltop) + " = F^1_" + std::to_string((n - 1) / 2) + " + F^0_" +
                      std::to_string((n + 1) / 2),
                  E[ltop - 1], F1[(n - 1) / 2] + F0[(n + 1) / 2]);
        for (int i = 2; i < ltop; ++i)
            check("E^(l)_" + std::to_string(i) + " = F_" + std::to_string(i - 1) + "^1 + F_" + std::to_string(i) + "^0",
                  E[i - 1], F1[i - 1] + F0[i]);
        for (int i = 1; i <= top; ++i)
            check("E'_" + std::to_string(i) + " = F_" + std::to_string(i) + "^1 + F_" + std::to_string(i) + "^0",
                  Ec[i - 1], F1[i] + F0[i]);
    }
    std::vector<GAElem> pieces, all;
    for (const auto& p : rep.pieces) pieces.push_back(p.elem);
    all = pieces;
    all.insert(all.end(), E.begin(), E.end());
    all.insert(all.end(), Ec.begin(), Ec.end());
    rep.pieces_rank = span_rank(pieces);
    rep.union_rank = span_rank(all);
    std::size_t nonzero = 0;
    for (const auto& p : pieces) nonzero += p.is_zero() ? 0 : 1;
    const bool spans = rep.pieces_rank == nonzero && rep.union_rank == rep.pieces_rank;
    rep.relations.push_back({"nonzero pieces are independent and span both families", spans});
    rep.ok = rep.ok && spans;
    return rep;
}

GAElem cyclic_map(const GAElem& x, int n, bool normalized) {
    if (x.kind() != GroupKind::symmetric || x.n() + 1 != n)
        throw std::invalid_argument("cyclic_map expects an element of Q[S_{n-1}]");
    const Group& H = x.group();
    const Group& G = Group::get(GroupKind::symmetric, n);
    const std::size_t w = G.index_of(omega(n).images());
    std::vector<std::size_t> wpow{G.identity()};
    for (int i = 1; i <= n; ++i) wpow.push_back(G.multiply(wpow.back(), w));
    GAElem out(GroupKind::symmetric, n);
    const Rational scale = normalized ? Rational(Integer(1), Integer(n)) : Rational(1);
    for (const auto& [k, c] : x.terms()) {
        const std::size_t h = G.index_of(hat(H.perm(k), n).images());
        for (int i = 1; i <= n; ++i) out.add(G.multiply(h, wpow[i]), c * scale);
    }
    return out;
}

CyclicIsoReport cyclic_isomorphism_check(int n) {
    if (n < 2) throw std::invalid_argument("cyclic_isomorphism_check: n must be at least 2");
    if (n > group_size_guard(GroupKind::symmetric)) throw ResourceLimitError("group size guard exceeded");
    CyclicIsoReport r;
    r.n = n;
    const std::vector<GAElem> E = class_sums(n - 1, ClassFamily::descent_num);
    std::vector<GAElem> psi, phi;
    for (const auto& x : E) {
        psi.push_back(cyclic_map(x, n, true));
        phi.push_back(cyclic_map(x, n, false));
    }
    for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = 0; j < E.size(); ++j) {
            const GAElem prod = E[i] * E[j];
            if (!(psi[i] * psi[j] == cyclic_map(prod, n, true))) r.multiplicative = false;
            const GAElem raw = cyclic_map(prod, n, false);
            const GAElem lhs = phi[i] * phi[j];
            if (!(lhs == raw)) r.raw_multiplicative = false;
            if (!(lhs == raw * Rational(n))) r.raw_scaled = false;
        }
    }
    r.image_rank = span_rank(psi);
    const std::vector<GAElem> C = class_sums(n, ClassFamily::cyclic_descent_num);
    std::vector<GAElem> both = psi;
    both.insert(both.end(), C.begin(), C.end());
    r.image_is_cyclic_span = span_rank(C) == r.image_rank && span_rank(both) == r.image_rank;
    const GAElem u = cyclic_map(GAElem::identity(GroupKind::symmetric, n - 1), n, true);
    r.unit_idempotent = u * u == u;
    return r;
}

}  // namespace peaklab
