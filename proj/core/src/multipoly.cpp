#include "peaklab/multipoly.hpp"

#include <stdexcept>

namespace peaklab {

void MultiPoly::check_arity(const Exponent& e) const {
    if (e.size() != arity_) throw std::invalid_argument("multipoly: exponent arity mismatch");
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    check_arity(e);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("multipoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("multipoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("multipoly: arity mismatch");
    MultiPoly out(a.arity_);
    Exponent e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& at) const {
    if (at.size() != arity_) throw std::invalid_argument("multipoly: eval arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < arity_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= at[i];
        total += term;
    }
    return total;
}

Rational MultiPoly::eval_ones() const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

MultiPoly MultiPoly::zero_variable(std::size_t var) const {
    MultiPoly out(arity_);
    for (const auto& [e, c] : terms_)
        if (e.at(var) == 0) out.terms_.emplace(e, c);
    return out;
}

MultiPoly MultiPoly::embed(std::size_t new_arity, std::size_t offset) const {
    if (offset + arity_ > new_arity) throw std::invalid_argument("multipoly: embed out of range");
    MultiPoly out(new_arity);
    for (const auto& [e, c] : terms_) {
        Exponent w(new_arity, 0);
        for (std::size_t i = 0; i < arity_; ++i) w[offset + i] = e[i];
        out.terms_.emplace(std::move(w), c);
    }
    return out;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) s += "*z" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s;
}

}  // namespace peaklab
