#include "peaklab/group_algebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace peaklab {

namespace {

const std::pair<const char*, StructureFamily> kNames[] = {
    {"phi", StructureFamily::phi},         {"phi_c", StructureFamily::phi_c},
    {"phi_B", StructureFamily::phi_B},     {"phi_B_c", StructureFamily::phi_B_c},
    {"rho", StructureFamily::rho},         {"rho_bar", StructureFamily::rho_bar},
    {"rho_l", StructureFamily::rho_l},     {"rho_r", StructureFamily::rho_r},
    {"rho_B", StructureFamily::rho_B},
};

}  // namespace

StructureFamily parse_structure_family(const std::string& s) {
    for (auto [name, f] : kNames)
        if (s == name) return f;
    throw std::invalid_argument("unknown structure polynomial family: " + s);
}

std::string to_string(StructureFamily f) {
    for (auto [name, g] : kNames)
        if (g == f) return name;
    return "?";
}

StructureInfo structure_info(StructureFamily f) {
    const Rational half(1, 2), quarter(1, 4);
    switch (f) {
        case StructureFamily::phi:
            return {OrderPolyKind::A_ordinary, 1, 0, GroupKind::symmetric, ClassFamily::descent_num};
        case StructureFamily::phi_c:
            return {OrderPolyKind::A_cyclic, 1, 0, GroupKind::symmetric, ClassFamily::cyclic_descent_num};
        case StructureFamily::phi_B:
            return {OrderPolyKind::B_ordinary, half, -half, GroupKind::hyperoctahedral, ClassFamily::B_descent_num};
        case StructureFamily::phi_B_c:
            return {OrderPolyKind::B_cyclic, half, 0, GroupKind::hyperoctahedral, ClassFamily::B_cyclic_descent_num};
        case StructureFamily::rho:
            return {OrderPolyKind::enriched_interior, half, 0, GroupKind::symmetric, ClassFamily::peak_interior_num};
        case StructureFamily::rho_bar:
            return {OrderPolyKind::enriched_exterior, half, 0, GroupKind::symmetric, ClassFamily::peak_exterior_num};
        case StructureFamily::rho_l:
            return {OrderPolyKind::enriched_left, half, -half, GroupKind::symmetric, ClassFamily::peak_left_num};
        case StructureFamily::rho_r:
            return {OrderPolyKind::enriched_right, half, -half, GroupKind::symmetric, ClassFamily::peak_right_num};
        case StructureFamily::rho_B:
            return {OrderPolyKind::enriched_B, quarter, -quarter, GroupKind::hyperoctahedral, ClassFamily::B_peak_sign_num};
    }
    throw std::logic_error("unhandled structure family");
}

int ClassPolynomial::degree() const {
    int d = -1;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

const ClassPolynomial& class_polynomial(int n, StructureFamily f) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ClassPolynomial>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, static_cast<int>(f)});
        if (it != cache.end()) return *it->second;
    }
    const StructureInfo info = structure_info(f);
    const Group& G = Group::get(info.group, n);
    auto cp = std::make_unique<ClassPolynomial>();
    cp->family = f;
    cp->n = n;
    cp->class_of.resize(G.order());
    std::map<ClassLabel, std::uint32_t> pos;
    for (std::size_t i = 0; i < G.order(); ++i) {
        const ClassLabel label = classify(info.classes, G, i);
        UniPoly p = info.group == GroupKind::symmetric ? order_polynomial(G.perm(i), info.kind)
                                                       : order_polynomial(G.signed_perm(i), info.kind);
        p = p.compose_linear(info.a, info.b);
        auto it = pos.find(label);
        if (it == pos.end()) {
            it = pos.emplace(label, static_cast<std::uint32_t>(cp->labels.size())).first;
            cp->labels.push_back(label);
            cp->polys.push_back(p);
        } else if (cp->polys[it->second] != p) {
            throw std::logic_error(to_string(f) + ": order polynomial is not constant on class " +
                                   label_to_string(info.classes, label) + " (element " + G.element_string(i) + ")");
        }
        cp->class_of[i] = it->second;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(n, static_cast<int>(f)), std::move(cp));
    return *it->second;
}

GAPoly structure_polynomial(int n, StructureFamily f) {
    const StructureInfo info = structure_info(f);
    const ClassPolynomial& cp = class_polynomial(n, f);
    GAPoly out{info.group, n, {}};
    const int deg = cp.degree();
    out.coeffs.assign(std::max(deg + 1, 0), GAElem(info.group, n));
    for (std::size_t i = 0; i < cp.class_of.size(); ++i) {
        const UniPoly& p = cp.polys[cp.class_of[i]];
        for (int d = 0; d <= p.degree(); ++d) out.coeffs[d].add(i, p[d]);
    }
    return out;
}

std::vector<GAElem> idempotents(int n, StructureFamily f) {
    const GAPoly poly = structure_polynomial(n, f);
    const int deg = poly.degree();
    std::vector<GAElem> values;
    for (int x = 1; x <= deg + 1; ++x) values.push_back(poly.eval(x));
    std::vector<GAElem> out(std::max(deg + 1, 0), GAElem(poly.kind, n));
    const std::size_t order = Group::get(poly.kind, n).order();
    std::vector<std::pair<Rational, Rational>> pts(deg + 1);
    for (std::size_t g = 0; g < order; ++g) {
        bool any = false;
        for (int x = 1; x <= deg + 1; ++x) {
            pts[x - 1] = {Rational(x), values[x - 1].coeff(g)};
            any = any || pts[x - 1].second != 0;
        }
        if (!any) continue;
        UniPoly p = interpolate(pts);
        for (int d = 0; d <= p.degree(); ++d) out[d].add(g, p[d]);
    }
    return out;
}

}  // namespace peaklab
