#include "peaklab/group_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace peaklab {

Rational GAElem::coeff(std::size_t idx) const {
    auto it = terms_.find(static_cast<std::uint32_t>(idx));
    return it == terms_.end() ? Rational(0) : it->second;
}

void GAElem::add(std::size_t idx, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(static_cast<std::uint32_t>(idx), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GAElem GAElem::single(GroupKind kind, int n, const std::vector<int>& images, const Rational& c) {
    GAElem e(kind, n);
    e.add(Group::get(kind, n).index_of(images), c);
    return e;
}

GAElem GAElem::identity(GroupKind kind, int n) {
    GAElem e(kind, n);
    e.add(Group::get(kind, n).identity(), 1);
    return e;
}

void GAElem::check_same(const GAElem& o) const {
    if (o.kind_ != kind_ || o.n_ != n_) throw std::invalid_argument("group algebra elements from different groups");
}

GAElem& GAElem::operator+=(const GAElem& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

GAElem& GAElem::operator-=(const GAElem& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

GAElem& GAElem::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string GAElem::to_string() const {
    if (terms_.empty()) return "0";
    const Group& G = group();
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += peaklab::to_string(c) + "*" + G.element_string(k);
    }
    return s;
}

GAElem ga_multiply(const GAElem& a, const GAElem& b) {
    if (a.kind() != b.kind() || a.n() != b.n())
        throw std::invalid_argument("ga_multiply: elements from different groups");
    GAElem out(a.kind(), a.n());
    if (a.is_zero() || b.is_zero()) return out;
    const Group& G = a.group();
    // Scale both factors to integers and convolve over the integers.
    auto common_den = [](const GAElem& e) {
        Integer l = 1;
        for (const auto& [k, c] : e.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        return l;
    };
    const Integer da = common_den(a), db = common_den(b);
    std::vector<std::pair<std::uint32_t, Integer>> ia, ib;
    for (const auto& [k, c] : a.terms()) ia.emplace_back(k, Integer(c.get_num() * (da / c.get_den())));
    for (const auto& [k, c] : b.terms()) ib.emplace_back(k, Integer(c.get_num() * (db / c.get_den())));
    std::vector<Integer> acc(G.order());
    std::vector<char> touched(G.order(), 0);
    for (const auto& [s, x] : ia)
        for (const auto& [t, y] : ib) {
            std::size_t p = G.multiply(s, t);
            mpz_addmul(acc[p].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            touched[p] = 1;
        }
    const Integer d = da * db;
    for (std::size_t p = 0; p < acc.size(); ++p)
        if (touched[p] && acc[p] != 0) {
            Rational r(acc[p], d);
            r.canonicalize();
            out.add(p, r);
        }
    return out;
}

GAElem GAPoly::eval(const Rational& x) const {
    GAElem out(kind, n);
    Rational power = 1;
    for (const auto& c : coeffs) {
        out += c * power;
        power *= x;
    }
    return out;
}

int GAPoly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;
}

namespace {

const std::pair<const char*, ClassFamily> kFamilyNames[] = {
    {"descent_set", ClassFamily::descent_set},
    {"descent_num", ClassFamily::descent_num},
    {"cyclic_descent_num", ClassFamily::cyclic_descent_num},
    {"B_descent_num", ClassFamily::B_descent_num},
    {"B_cyclic_descent_num", ClassFamily::B_cyclic_descent_num},
    {"peak_interior_set", ClassFamily::peak_interior_set},
    {"peak_left_set", ClassFamily::peak_left_set},
    {"peak_interior_num", ClassFamily::peak_interior_num},
    {"peak_left_num", ClassFamily::peak_left_num},
    {"peak_right_num", ClassFamily::peak_right_num},
    {"peak_exterior_num", ClassFamily::peak_exterior_num},
    {"B_peak_sign_num", ClassFamily::B_peak_sign_num},
    {"B_peak_sign_set", ClassFamily::B_peak_sign_set},
    {"right_peak_num", ClassFamily::right_peak_num},
    {"peak_right_set", ClassFamily::peak_right_set},
    {"peak_exterior_set", ClassFamily::peak_exterior_set},
    {"B_cyclic_descent_sign", ClassFamily::B_cyclic_descent_sign},
    {"peak_interior_first_descent", ClassFamily::peak_interior_first_descent},
    {"B_exterior_peak_set", ClassFamily::B_exterior_peak_set},
};

enum class LabelShape { set, number, signed_number, sign_set, number_flag };

LabelShape shape_of(ClassFamily f) {
    switch (f) {
        case ClassFamily::descent_set:
        case ClassFamily::peak_interior_set:
        case ClassFamily::peak_left_set:
        case ClassFamily::peak_right_set:
        case ClassFamily::peak_exterior_set:
        case ClassFamily::B_exterior_peak_set:
            return LabelShape::set;
        case ClassFamily::B_peak_sign_num:
        case ClassFamily::B_cyclic_descent_sign:
            return LabelShape::signed_number;
        case ClassFamily::B_peak_sign_set:
            return LabelShape::sign_set;
        case ClassFamily::peak_interior_first_descent:
            return LabelShape::number_flag;
        default:
            return LabelShape::number;
    }
}

std::string set_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int p : mask_positions(m)) {
        s += (first ? "" : ",") + std::to_string(p);
        first = false;
    }
    return s + "}";
}

Mask parse_set(const std::string& t) {
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw std::invalid_argument("expected a set like {1,3}: " + t);
    std::vector<int> pos;
    std::string body = t.substr(1, t.size() - 2), cur;
    for (char ch : body + ",") {
        if (ch == ',') {
            if (!cur.empty()) pos.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    return mask_of(pos);
}

}  // namespace

ClassFamily parse_class_family(const std::string& s) {
    for (auto [name, f] : kFamilyNames)
        if (s == name) return f;
    throw std::invalid_argument("unknown class family: " + s);
}

std::string to_string(ClassFamily f) {
    for (auto [name, g] : kFamilyNames)
        if (g == f) return name;
    return "?";
}

GroupKind group_of(ClassFamily f) {
    switch (f) {
        case ClassFamily::B_descent_num:
        case ClassFamily::B_cyclic_descent_num:
        case ClassFamily::B_peak_sign_num:
        case ClassFamily::B_peak_sign_set:
        case ClassFamily::B_cyclic_descent_sign:
        case ClassFamily::B_exterior_peak_set:
            return GroupKind::hyperoctahedral;
        default:
            return GroupKind::symmetric;
    }
}

ClassLabel classify(ClassFamily f, const Group& G, std::size_t idx) {
    if (G.kind() != group_of(f)) throw std::invalid_argument("class family " + to_string(f) + " used on the wrong group");
    if (G.kind() == GroupKind::symmetric) {
        const Permutation pi = G.perm(idx);
        switch (f) {
            case ClassFamily::descent_set: return static_cast<ClassLabel>(descent_stat(pi).set);
            case ClassFamily::descent_num: return descent_stat(pi).count;
            case ClassFamily::cyclic_descent_num: return descent_stat(pi, DescentKind::cyclic).count;
            case ClassFamily::peak_interior_set: return static_cast<ClassLabel>(peak_stat(pi, PeakKind::interior).set);
            case ClassFamily::peak_left_set: return static_cast<ClassLabel>(peak_stat(pi, PeakKind::left).set);
            case ClassFamily::peak_right_set: return static_cast<ClassLabel>(peak_stat(pi, PeakKind::right).set);
            case ClassFamily::peak_exterior_set: return static_cast<ClassLabel>(peak_stat(pi, PeakKind::exterior).set);
            case ClassFamily::peak_interior_num: return peak_stat(pi, PeakKind::interior).count;
            case ClassFamily::peak_left_num: return peak_stat(pi, PeakKind::left).count;
            case ClassFamily::peak_right_num:
            case ClassFamily::right_peak_num: return peak_stat(pi, PeakKind::right).count;
            case ClassFamily::peak_exterior_num: return peak_stat(pi, PeakKind::exterior).count;
            case ClassFamily::peak_interior_first_descent:
                return pair_label(peak_stat(pi, PeakKind::interior).count, (descent_stat(pi).set >> 1) & 1);
            default: break;
        }
    } else {
        const SignedPermutation pi = G.signed_perm(idx);
        const int n = pi.size();
        const int sign = signed_stat(pi, SignedStatKind::sign).count;
        switch (f) {
            case ClassFamily::B_descent_num: return signed_stat(pi, SignedStatKind::descent).count;
            case ClassFamily::B_cyclic_descent_num: return signed_stat(pi, SignedStatKind::cyclic_descent).count;
            case ClassFamily::B_peak_sign_num: return pair_label(signed_stat(pi, SignedStatKind::peak).count, sign);
            case ClassFamily::B_peak_sign_set:
                return pair_label(static_cast<std::int64_t>(signed_stat(pi, SignedStatKind::peak).set), sign);
            case ClassFamily::B_cyclic_descent_sign:
                return pair_label(signed_stat(pi, SignedStatKind::cyclic_descent).count, n >= 1 && pi(n) < 0);
            case ClassFamily::B_exterior_peak_set:
                return static_cast<ClassLabel>(signed_exterior_peak_stat(pi).set);
            default: break;
        }
    }
    throw std::logic_error("unhandled class family");
}

std::vector<ClassLabel> class_labels(ClassFamily f, int n) {
    const Group& G = Group::get(group_of(f), n);
    std::set<ClassLabel> seen;
    for (std::size_t i = 0; i < G.order(); ++i) seen.insert(classify(f, G, i));
    return {seen.begin(), seen.end()};
}

std::string label_to_string(ClassFamily f, ClassLabel label) {
    switch (shape_of(f)) {
        case LabelShape::set: return set_string(static_cast<Mask>(label));
        case LabelShape::number: return std::to_string(label);
        case LabelShape::signed_number:
            return std::to_string(label_primary(label)) + (label_flag(label) ? "-" : "+");
        case LabelShape::sign_set:
            return "(" + std::to_string(label_flag(label)) + "," + set_string(static_cast<Mask>(label_primary(label))) + ")";
        case LabelShape::number_flag:
            return "(" + std::to_string(label_primary(label)) + "," + std::to_string(label_flag(label)) + ")";
    }
    return "?";
}

ClassLabel parse_label(ClassFamily f, const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.empty()) throw std::invalid_argument("empty class label");
    switch (shape_of(f)) {
        case LabelShape::set: return static_cast<ClassLabel>(parse_set(t));
        case LabelShape::number: return std::stoll(t);
        case LabelShape::signed_number: {
            char s = t.back();
            if (s != '+' && s != '-') throw std::invalid_argument("expected a label like 2+ or 1-: " + t);
            return pair_label(std::stoll(t.substr(0, t.size() - 1)), s == '-');
        }
        case LabelShape::sign_set:
        case LabelShape::number_flag: {
            if (t.front() != '(' || t.back() != ')') throw std::invalid_argument("expected a parenthesized pair: " + t);
            std::string body = t.substr(1, t.size() - 2);
            auto comma = shape_of(f) == LabelShape::sign_set ? body.find(',') : body.rfind(',');
            if (comma == std::string::npos) throw std::invalid_argument("expected a pair: " + t);
            std::string first = body.substr(0, comma), second = body.substr(comma + 1);
            if (shape_of(f) == LabelShape::sign_set)
                return pair_label(static_cast<std::int64_t>(parse_set(second)), std::stoi(first));
            return pair_label(std::stoll(first), std::stoi(second));
        }
    }
    throw std::logic_error("unhandled label shape");
}

ClassSum class_sum(int n, ClassFamily f, ClassLabel label) {
    const Group& G = Group::get(group_of(f), n);
    GAElem e(G.kind(), n);
    for (std::size_t i = 0; i < G.order(); ++i)
        if (classify(f, G, i) == label) e.add(i, 1);
    bool empty = e.is_zero();
    return {std::move(e), empty};
}

}  // namespace peaklab
