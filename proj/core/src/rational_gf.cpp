#include "peaklab/rational_gf.hpp"

#include <stdexcept>

namespace peaklab {

namespace {

Integer lcm_of_dens(const UniPoly& p, Integer acc) {
    for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
    return acc;
}

Integer gcd_of_nums(const UniPoly& p, Integer acc) {
    for (const auto& c : p.coeffs()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
    return acc;
}

}  // namespace

RationalGF::RationalGF(const UniPoly& num, const UniPoly& den) {
    if (den[0] == 0)
        throw std::invalid_argument("rational gf: denominator has zero constant term");
    Integer l = lcm_of_dens(den, lcm_of_dens(num, 1));
    UniPoly n = num * Rational(l), d = den * Rational(l);
    Integer g = gcd_of_nums(d, gcd_of_nums(n, 0));
    Rational scale(Integer(1), g);
    if (d[0] < 0) scale = -scale;
    num_ = n * scale;
    den_ = d * scale;
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return RationalGF(num_ * o.num_, den_ * o.den_);
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool RationalGF::same_normal_form(const RationalGF& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::vector<Rational> gf_coeffs(const RationalGF& gf, std::size_t count) {
    const auto& d = gf.den().coeffs();
    if (d.empty() || d[0] == 0)
        throw std::invalid_argument("gf_coeffs: denominator has zero constant term");
    std::vector<Rational> a(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rational acc = gf.num()[k];
        for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * a[k - j];
        a[k] = acc / d[0];
    }
    return a;
}

}  // namespace peaklab
