#include "peaklab/json_io.hpp"

#include <stdexcept>

namespace peaklab {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

json to_json(const RationalGF& g) { return json{{"num", to_json(g.num())}, {"den", to_json(g.den())}}; }

json to_json(const StatResult& s) { return json{{"set", s.positions()}, {"count", s.count}}; }

json to_json(const GAElem& x) {
    json terms = json::array();
    const Group& G = x.group();
    for (const auto& [k, c] : x.terms()) terms.push_back(json{{"perm", G.element(k)}, {"coeff", to_string(c)}});
    return json{{"n", x.n()},
                {"group", x.kind() == GroupKind::symmetric ? "S" : "B"},
                {"terms", std::move(terms)}};
}

json to_json(const QsymExpansion& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.coeffs()) {
        json t;
        if (e.basis() == QsymBasis::K_B) {
            t["sign"] = sign_peak_sign(k);
            t["peaks"] = mask_positions(sign_peak_set(k));
        } else {
            t["set"] = mask_positions(k);
        }
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    return json{{"basis", to_string(e.basis())}, {"n", e.n()}, {"terms", std::move(terms)}};
}

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [ex, c] : p.terms()) {
        std::vector<int> e(ex.begin(), ex.end());
        terms.push_back(json{{"exp", e}, {"coeff", to_string(c)}});
    }
    return json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

json to_json(const StructureConstants& sc) {
    json labels = json::array();
    for (auto l : sc.labels) labels.push_back(label_to_string(sc.family, l));
    json entries = json::array();
    const std::size_t m = sc.labels.size();
    for (std::size_t I = 0; I < m; ++I)
        for (std::size_t J = 0; J < m; ++J)
            for (std::size_t K = 0; K < m; ++K)
                if (auto c = sc.at(I, J, K)) entries.push_back(json{{"I", labels[I]}, {"J", labels[J]}, {"K", labels[K]}, {"count", c}});
    json out{{"family", to_string(sc.family)},
             {"n", sc.n},
             {"labels", labels},
             {"class_sizes", sc.class_sizes},
             {"entries", std::move(entries)},
             {"well_defined", sc.well_defined}};
    if (sc.counterexample) {
        const auto& c = *sc.counterexample;
        const Group& G = Group::get(group_of(sc.family), sc.n);
        out["counterexample"] = json{{"I", labels[c.I]},
                                     {"J", labels[c.J]},
                                     {"K", labels[c.K]},
                                     {"representative", G.element(c.rep)},
                                     {"representative_count", c.rep_count},
                                     {"other", G.element(c.other)},
                                     {"other_count", c.other_count}};
    }
    return out;
}

json to_json(const VerifyResult& r) {
    json out{{"id", r.id}, {"n", r.n}, {"ok", r.ok}, {"expected", r.expected}, {"detail", r.detail}};
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    throw std::invalid_argument("expected a rational as a string or integer");
}

GAElem gaelem_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const std::string g = j.at("group").get<std::string>();
    if (g != "S" && g != "B") throw std::invalid_argument("group must be \"S\" or \"B\"");
    const GroupKind kind = g == "S" ? GroupKind::symmetric : GroupKind::hyperoctahedral;
    GAElem x(kind, n);
    const Group& G = x.group();
    for (const auto& t : j.at("terms")) x.add(G.index_of(t.at("perm").get<std::vector<int>>()), rational_from_json(t.at("coeff")));
    return x;
}

namespace {

std::vector<std::pair<int, int>> covers_from(const json& covers) {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : covers) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover relations are pairs [a, b]");
        out.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return out;
}

}  // namespace

Poset poset_from_json(int n, const json& covers) { return Poset::from_relations(n, covers_from(covers)); }

BPoset bposet_from_json(int n, const json& covers) { return BPoset::from_relations(n, covers_from(covers)); }

}  // namespace peaklab
