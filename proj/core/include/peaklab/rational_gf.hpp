#pragma once

#include "peaklab/unipoly.hpp"

#include <vector>

namespace peaklab {

// num(t)/den(t) as a formal power series. Both polynomials are kept with integer
// coefficients whose joint content is 1, and the constant term of den is positive.
class RationalGF {
public:
    // Throws std::invalid_argument if den has zero constant term.
    RationalGF(const UniPoly& num, const UniPoly& den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    RationalGF operator*(const RationalGF& o) const;
    RationalGF operator+(const RationalGF& o) const;

    // Equality as rational functions (cross-multiplication).
    friend bool operator==(const RationalGF& a, const RationalGF& b);
    // Literal equality of the stored normal forms.
    bool same_normal_form(const RationalGF& o) const;

private:
    UniPoly num_, den_;
};

// Coefficients of t^0 .. t^(count-1).
std::vector<Rational> gf_coeffs(const RationalGF& gf, std::size_t count);

}  // namespace peaklab
