#include "peaklab/rational.hpp"

#include <stdexcept>

namespace peaklab {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer p(num), q(den);
    if (q == 0) throw bad();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer binomial(const Integer& m, unsigned long k) {
    if (m >= 0) {
        Integer out;
        mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), k);
        return out;
    }
    // C(m,k) = (-1)^k C(k-m-1, k)
    Integer top = Integer(k) - m - 1, out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return (k % 2) ? Integer(-out) : out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace peaklab
