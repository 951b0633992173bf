#include "peaklab/order_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace peaklab {

namespace {

const std::pair<const char*, OrderPolyKind> kKindNames[] = {
    {"A_ordinary", OrderPolyKind::A_ordinary},
    {"A_cyclic", OrderPolyKind::A_cyclic},
    {"B_ordinary", OrderPolyKind::B_ordinary},
    {"B_cyclic", OrderPolyKind::B_cyclic},
    {"enriched_interior", OrderPolyKind::enriched_interior},
    {"enriched_left", OrderPolyKind::enriched_left},
    {"enriched_right", OrderPolyKind::enriched_right},
    {"enriched_exterior", OrderPolyKind::enriched_exterior},
    {"enriched_B", OrderPolyKind::enriched_B},
};

UniPoly one_plus_t_pow(int e) { return UniPoly({1, 1}).pow(static_cast<unsigned>(e)); }

// c * (1+t)^a * (4t)^b / (1-t)^(n+1) with a possibly negative.
RationalGF gf_shape(const Rational& c, int n, int a, int b) {
    UniPoly num = UniPoly::monomial(c * Rational(Integer(1) << (2 * b)), static_cast<std::size_t>(b));
    UniPoly den = UniPoly({1, -1}).pow(static_cast<unsigned>(n + 1));
    if (a >= 0)
        num *= one_plus_t_pow(a);
    else
        den *= one_plus_t_pow(-a);
    return RationalGF(num, den);
}

// 1/2 (1+t)^(n+1)/(1-t)^(n+1) (4t/(1+t)^2)^e
RationalGF interior_shape(int n, int e) { return gf_shape(Rational(1, 2), n, n + 1 - 2 * e, e); }
// (1+t)^n/(1-t)^(n+1) (4t/(1+t)^2)^e
RationalGF left_shape(int n, int e) { return gf_shape(1, n, n - 2 * e, e); }

template <class Perm>
UniPoly interpolate_enriched(const Perm& pi, OrderPolyKind kind, const RationalGF& gf) {
    const int n = pi.size();
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= n; ++k)
        pts.emplace_back(k, Rational(count_chain_partitions(pi, image_set_for(kind, k))));
    UniPoly p = interpolate(pts);
    // Closed form and oracle must agree beyond the interpolation nodes as well.
    auto coeffs = gf_coeffs(gf, 2 * n + 3);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        if (p.eval(k) != coeffs[k])
            throw std::logic_error("enriched order polynomial for " + to_string(pi) + " (" + to_string(kind) +
                                   ") disagrees with its generating function at k=" + std::to_string(k));
    return p;
}

std::mutex cache_mutex;
std::map<std::tuple<int, int, Mask>, UniPoly> cache;

template <class Perm, class Build>
UniPoly cached(OrderPolyKind kind, const Perm& pi, Mask key, Build build) {
    auto id = std::make_tuple(static_cast<int>(kind), pi.size(), key);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(id);
        if (it != cache.end()) return it->second;
    }
    UniPoly p = build();
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(id, p);
    return p;
}

}  // namespace

OrderPolyKind parse_order_poly_kind(const std::string& s) {
    for (auto [name, kind] : kKindNames)
        if (s == name) return kind;
    throw std::invalid_argument("unknown order polynomial kind: " + s);
}

std::string to_string(OrderPolyKind kind) {
    for (auto [name, k] : kKindNames)
        if (k == kind) return name;
    return "?";
}

bool is_type_b(OrderPolyKind kind) {
    return kind == OrderPolyKind::B_ordinary || kind == OrderPolyKind::B_cyclic ||
           kind == OrderPolyKind::enriched_B;
}

bool is_enriched(OrderPolyKind kind) {
    return kind == OrderPolyKind::enriched_interior || kind == OrderPolyKind::enriched_left ||
           kind == OrderPolyKind::enriched_right || kind == OrderPolyKind::enriched_exterior ||
           kind == OrderPolyKind::enriched_B;
}

ImageSetSpec image_set_for(OrderPolyKind kind, int k) {
    switch (kind) {
        case OrderPolyKind::A_ordinary: return {AlphabetKind::ordinary, k};
        case OrderPolyKind::B_ordinary: return {AlphabetKind::ordinaryB, k};
        case OrderPolyKind::enriched_interior: return {AlphabetKind::enriched, k};
        case OrderPolyKind::enriched_left: return {AlphabetKind::left_enriched, k};
        case OrderPolyKind::enriched_right: return {AlphabetKind::right_enriched, k};
        case OrderPolyKind::enriched_exterior: return {AlphabetKind::exterior_enriched, k};
        case OrderPolyKind::enriched_B: return {AlphabetKind::B_enriched, k};
        default: break;
    }
    throw std::invalid_argument(to_string(kind) + " has no P-partition alphabet");
}

RationalGF enriched_gf(const Permutation& pi, OrderPolyKind kind) {
    const int n = pi.size();
    switch (kind) {
        case OrderPolyKind::enriched_interior:
            return interior_shape(n, peak_stat(pi, PeakKind::interior).count + 1);
        case OrderPolyKind::enriched_exterior:
            return interior_shape(n, peak_stat(pi, PeakKind::exterior).count);
        case OrderPolyKind::enriched_left:
            return left_shape(n, peak_stat(pi, PeakKind::left).count);
        case OrderPolyKind::enriched_right:
            return left_shape(n, peak_stat(pi, PeakKind::right).count);
        default: break;
    }
    throw std::invalid_argument("enriched_gf: " + to_string(kind) + " is not a type A enriched kind");
}

RationalGF enriched_gf(const SignedPermutation& pi) {
    const int n = pi.size();
    const int sign = signed_stat(pi, SignedStatKind::sign).count;
    const int pe = signed_stat(pi, SignedStatKind::peak).count;
    // (1+t)^n/(1-t)^(n+1) (2t/(1+t))^sign (4t/(1+t)^2)^pe
    RationalGF g = gf_shape(1, n, n - sign - 2 * pe, pe);
    if (sign) g = g * RationalGF(UniPoly({0, 2}), UniPoly({1}));
    return g;
}

UniPoly order_polynomial(const Permutation& pi, OrderPolyKind kind) {
    const int n = pi.size();
    if (n < 1) throw std::invalid_argument("order_polynomial: n must be at least 1");
    switch (kind) {
        case OrderPolyKind::A_ordinary:
            return binom_poly(n - 1 - descent_stat(pi).count, n);
        case OrderPolyKind::A_cyclic:
            return binom_poly(n - 1 - descent_stat(pi, DescentKind::cyclic).count, n - 1) * Rational(1, n);
        case OrderPolyKind::enriched_interior:
        case OrderPolyKind::enriched_left:
        case OrderPolyKind::enriched_right:
        case OrderPolyKind::enriched_exterior:
            // Chain counts depend only on the descent set.
            return cached(kind, pi, descent_stat(pi).set,
                          [&] { return interpolate_enriched(pi, kind, enriched_gf(pi, kind)); });
        default: break;
    }
    throw std::invalid_argument("order_polynomial: " + to_string(kind) + " needs a signed permutation");
}

UniPoly order_polynomial(const SignedPermutation& pi, OrderPolyKind kind) {
    const int n = pi.size();
    if (n < 1) throw std::invalid_argument("order_polynomial: n must be at least 1");
    switch (kind) {
        case OrderPolyKind::B_ordinary:
            return binom_poly(n - signed_stat(pi, SignedStatKind::descent).count, n);
        case OrderPolyKind::B_cyclic:
            return binom_poly(n - signed_stat(pi, SignedStatKind::cyclic_descent).count, n);
        case OrderPolyKind::enriched_B:
            return cached(kind, pi, signed_stat(pi, SignedStatKind::descent).set,
                          [&] { return interpolate_enriched(pi, kind, enriched_gf(pi)); });
        default: break;
    }
    throw std::invalid_argument("order_polynomial: " + to_string(kind) + " needs an unsigned permutation");
}

namespace {

bool reflect_holds(const UniPoly& p, int n, const Rational& shift) {
    // p(-x - shift - ... ) written as q(x) = p(x - shift): q(-x) = (-1)^n q(x)
    UniPoly q = p.compose_linear(1, -shift);
    UniPoly r = q.compose_linear(-1, 0);
    return r == (n % 2 ? -q : q);
}

}  // namespace

bool reciprocity_check(const Permutation& pi, OrderPolyKind kind) {
    UniPoly p = order_polynomial(pi, kind);
    switch (kind) {
        case OrderPolyKind::enriched_interior:
        case OrderPolyKind::enriched_exterior:
            return reflect_holds(p, pi.size(), 0);
        case OrderPolyKind::enriched_left:
        case OrderPolyKind::enriched_right:
            return reflect_holds(p, pi.size(), Rational(1, 2));
        default: break;
    }
    throw std::invalid_argument("reciprocity_check: " + to_string(kind) + " is not an enriched kind");
}

bool reciprocity_check(const SignedPermutation& pi) {
    UniPoly p = order_polynomial(pi, OrderPolyKind::enriched_B);
    bool negative_start = signed_stat(pi, SignedStatKind::sign).count == 1;
    return reflect_holds(p, pi.size(), negative_start ? Rational(0) : Rational(1, 2));
}

namespace {

const std::pair<const char*, PeakPolyKind> kPeakNames[] = {
    {"A_eulerian", PeakPolyKind::A_eulerian},
    {"B_eulerian", PeakPolyKind::B_eulerian},
    {"B_cyclic_eulerian", PeakPolyKind::B_cyclic_eulerian},
    {"W_interior", PeakPolyKind::W_interior},
    {"W_left", PeakPolyKind::W_left},
    {"W_plus", PeakPolyKind::W_plus},
    {"W_minus", PeakPolyKind::W_minus},
    {"W_weighted", PeakPolyKind::W_weighted},
};

UniPoly from_counts(const std::vector<long>& counts) {
    std::vector<Rational> c(counts.begin(), counts.end());
    return UniPoly(std::move(c));
}

}  // namespace

PeakPolyKind parse_peak_poly_kind(const std::string& s) {
    for (auto [name, kind] : kPeakNames)
        if (s == name) return kind;
    throw std::invalid_argument("unknown peak polynomial kind: " + s);
}

std::string to_string(PeakPolyKind kind) {
    for (auto [name, k] : kPeakNames)
        if (k == kind) return name;
    return "?";
}

UniPoly peak_polynomial(int n, PeakPolyKind kind, int i) {
    std::vector<long> counts(n + 3, 0);
    switch (kind) {
        case PeakPolyKind::A_eulerian:
        case PeakPolyKind::W_interior:
        case PeakPolyKind::W_left:
            for (const auto& pi : all_permutations(n)) {
                int e = kind == PeakPolyKind::A_eulerian   ? descent_stat(pi).count + 1
                        : kind == PeakPolyKind::W_interior ? peak_stat(pi, PeakKind::interior).count + 1
                                                           : peak_stat(pi, PeakKind::left).count;
                ++counts[e];
            }
            break;
        default:
            if (kind == PeakPolyKind::W_weighted && (i < 0 || i > n))
                throw std::invalid_argument("W_weighted: minus-sign count out of range");
            for (const auto& pi : all_signed_permutations(n)) {
                const bool neg1 = n >= 1 && pi(1) < 0;
                switch (kind) {
                    case PeakPolyKind::B_eulerian:
                        ++counts[signed_stat(pi, SignedStatKind::descent).count];
                        break;
                    case PeakPolyKind::B_cyclic_eulerian:
                        ++counts[signed_stat(pi, SignedStatKind::cyclic_descent).count];
                        break;
                    case PeakPolyKind::W_plus:
                        if (!neg1) ++counts[signed_stat(pi, SignedStatKind::peak).count];
                        break;
                    case PeakPolyKind::W_minus:
                        if (neg1) ++counts[signed_stat(pi, SignedStatKind::peak).count + 1];
                        break;
                    case PeakPolyKind::W_weighted: {
                        int minus = 0;
                        for (int v : pi.images()) minus += v < 0;
                        if (minus == i) ++counts[signed_stat(pi, SignedStatKind::descent).count];
                        break;
                    }
                    default: break;
                }
            }
    }
    return from_counts(counts);
}

RationalGF substitute_peak_variable(const UniPoly& W) {
    const int d = std::max(W.degree(), 0);
    UniPoly num;
    for (int i = 0; i <= W.degree(); ++i)
        if (W[i] != 0)
            num += UniPoly::monomial(W[i] * Rational(Integer(1) << (2 * i)), i) * one_plus_t_pow(2 * (d - i));
    return RationalGF(num, one_plus_t_pow(2 * d));
}

Identity43 parse_identity43(const std::string& s) {
    if (s == "augeul") return Identity43::augeul;
    if (s == "peeul1") return Identity43::peeul1;
    if (s == "peeul2") return Identity43::peeul2;
    if (s == "bpeeul1") return Identity43::bpeeul1;
    if (s == "bpeeul2") return Identity43::bpeeul2;
    throw std::invalid_argument("unknown identity: " + s);
}

std::string to_string(Identity43 id) {
    switch (id) {
        case Identity43::augeul: return "augeul";
        case Identity43::peeul1: return "peeul1";
        case Identity43::peeul2: return "peeul2";
        case Identity43::bpeeul1: return "bpeeul1";
        case Identity43::bpeeul2: return "bpeeul2";
    }
    return "?";
}

IdentityReport identity_check_43(int n, Identity43 which, std::optional<Rational> alpha) {
    if (n < 1) throw std::invalid_argument("identity_check_43: n must be at least 1");
    IdentityReport rep;
    const RationalGF one_plus_t_n(UniPoly({1}), one_plus_t_pow(n));
    const RationalGF one_plus_t_n1(UniPoly({1}), one_plus_t_pow(n + 1));
    switch (which) {
        case Identity43::augeul: {
            UniPoly lhs = peak_polynomial(n, PeakPolyKind::B_cyclic_eulerian);
            UniPoly rhs = peak_polynomial(n, PeakPolyKind::A_eulerian) * Rational(Integer(1) << n);
            rep.ok = lhs == rhs;
            rep.detail = "B^(c)_n = " + to_string(lhs) + ", 2^n A_n = " + to_string(rhs);
            break;
        }
        case Identity43::peeul1: {
            RationalGF lhs = substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_interior));
            UniPoly A = peak_polynomial(n, PeakPolyKind::A_eulerian);
            UniPoly Bc = peak_polynomial(n, PeakPolyKind::B_cyclic_eulerian);
            RationalGF mid = RationalGF(A * Rational(Integer(1) << (n + 1)), UniPoly({1})) * one_plus_t_n1;
            RationalGF right = RationalGF(Bc * Rational(2), UniPoly({1})) * one_plus_t_n1;
            rep.ok = lhs == mid && mid == right;
            rep.detail = "W_n(4t/(1+t)^2) = " + to_string(lhs.num()) + " / " + to_string(lhs.den());
            break;
        }
        case Identity43::peeul2: {
            RationalGF lhs = substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_left));
            RationalGF rhs = RationalGF(peak_polynomial(n, PeakPolyKind::B_eulerian), UniPoly({1})) * one_plus_t_n;
            rep.ok = lhs == rhs;
            rep.detail = "W^(l)_n(4t/(1+t)^2) = " + to_string(lhs.num()) + " / " + to_string(lhs.den());
            break;
        }
        case Identity43::bpeeul1: {
            RationalGF plus = substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_plus));
            RationalGF minus = substitute_peak_variable(peak_polynomial(n, PeakPolyKind::W_minus)) *
                               RationalGF(UniPoly({Rational(1, 2), Rational(1, 2)}), UniPoly({1}));
            RationalGF lhs = plus + minus;
            // Even part of G(s) = B_n(s)(1+s)^(n+1), read as a series in t = s^2. This is what
            // sum (4k+1)^n t^k = (1-t)^-(n+1) (G(s) + G(-s))/2 forces; exponent n fails already at n = 1.
            UniPoly G = peak_polynomial(n, PeakPolyKind::B_eulerian) * one_plus_t_pow(n + 1);
            std::vector<Rational> even;
            for (int j = 0; 2 * j <= G.degree(); ++j) even.push_back(G[2 * j]);
            RationalGF rhs = RationalGF(UniPoly(even), UniPoly({1})) * one_plus_t_n;
            rep.ok = lhs == rhs;
            rep.detail = "lhs = " + to_string(lhs.num()) + " / " + to_string(lhs.den()) +
                         ", rhs = " + to_string(rhs.num()) + " / " + to_string(rhs.den());
            break;
        }
        case Identity43::bpeeul2: {
            // [t^k] as a polynomial in alpha, for k = 0..n+1.
            const int count = n + 2;
            std::vector<std::vector<Rational>> lhs_by_i;
            for (int i = 0; i <= n; ++i)
                lhs_by_i.push_back(gf_coeffs(RationalGF(peak_polynomial(n, PeakPolyKind::W_weighted, i),
                                                        UniPoly({1, -1}).pow(n + 1)),
                                             count));
            rep.ok = true;
            for (int k = 0; k < count && rep.ok; ++k) {
                std::vector<Rational> lc(n + 1);
                for (int i = 0; i <= n; ++i) lc[i] = lhs_by_i[i][k];
                UniPoly lhs(lc);
                UniPoly rhs = UniPoly({Rational(k + 1), Rational(k)}).pow(n);
                bool eq = alpha ? lhs.eval(*alpha) == rhs.eval(*alpha) : lhs == rhs;
                if (!eq) {
                    rep.ok = false;
                    rep.detail = "mismatch at t^" + std::to_string(k) + ": " + to_string(lhs) + " vs " + to_string(rhs);
                }
            }
            if (rep.ok) rep.detail = alpha ? "checked at alpha = " + to_string(*alpha) : "checked with alpha symbolic";
            break;
        }
    }
    return rep;
}

}  // namespace peaklab
