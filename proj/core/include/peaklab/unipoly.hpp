#pragma once

#include "peaklab/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace peaklab {

// Dense univariate polynomial over Q. coeffs[i] is the coefficient of x^i;
// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly x();
    static UniPoly monomial(const Rational& c, std::size_t power);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of x^i; zero past the end.
    Rational operator[](std::size_t i) const;

    Rational eval(const Rational& at) const;
    // p(a*x + b)
    UniPoly compose_linear(const Rational& a, const Rational& b) const;
    // p(q(x))
    UniPoly compose(const UniPoly& q) const;
    UniPoly pow(unsigned e) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator-(UniPoly a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// C(x + shift, degree) as a polynomial in x.
UniPoly binom_poly(long shift, unsigned degree);

// Unique polynomial of degree < points.size() through the given points.
// Throws std::invalid_argument on an empty list or repeated x-values.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

std::string to_string(const UniPoly& p);

}  // namespace peaklab
