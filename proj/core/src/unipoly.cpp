#include "peaklab/unipoly.hpp"

#include <stdexcept>

namespace peaklab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

// Callers may hand in mpq values built from raw (p, q) pairs; equality needs lowest terms.

void UniPoly::trim() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }
UniPoly UniPoly::x() { return UniPoly({0, 1}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational UniPoly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q;
        acc += constant(*it);
    }
    return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
    return compose(UniPoly({b, a}));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly out = constant(1), base = *this;
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UniPoly operator-(UniPoly a) { return a *= Rational(-1); }

UniPoly binom_poly(long shift, unsigned degree) {
    UniPoly out = UniPoly::constant(1);
    Integer fact = 1;
    for (unsigned j = 0; j < degree; ++j) {
        out *= UniPoly({Rational(shift - static_cast<long>(j)), Rational(1)});
        fact *= j + 1;
    }
    return out * Rational(Integer(1), fact);
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate x-value " +
                                            to_string(points[i].first));
    // Newton divided differences.
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t lvl = 1; lvl < m; ++lvl)
        for (std::size_t i = m - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - lvl].first);
    UniPoly out = UniPoly::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        out *= UniPoly({-points[i].first, Rational(1)});
        out += UniPoly::constant(dd[i]);
    }
    return out;
}

std::string to_string(const UniPoly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += to_string(p.coeffs()[i]);
    }
    return s + "]";
}

}  // namespace peaklab
