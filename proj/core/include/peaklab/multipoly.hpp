#pragma once

#include "peaklab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace peaklab {

using Exponent = std::vector<std::uint8_t>;

// Sparse polynomial in a fixed number of variables.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const Rational& c);
    static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

    std::size_t arity() const { return arity_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::vector<Rational>& at) const;
    Rational eval_ones() const;
    // Sets variable `var` to zero.
    MultiPoly zero_variable(std::size_t var) const;
    // Places this polynomial's variables at positions offset.. of a wider ring.
    MultiPoly embed(std::size_t new_arity, std::size_t offset) const;

private:
    void check_arity(const Exponent& e) const;
    std::size_t arity_;
    std::map<Exponent, Rational> terms_;
};

std::string to_string(const MultiPoly& p);

}  // namespace peaklab
