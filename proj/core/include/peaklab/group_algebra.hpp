#pragma once

#include "peaklab/group.hpp"
#include "peaklab/order_poly.hpp"
#include "peaklab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace peaklab {

// Sparse element of Q[S_n] or Q[B_n]; keys are group indices.
class GAElem {
public:
    GAElem(GroupKind kind, int n) : kind_(kind), n_(n) {}

    GroupKind kind() const { return kind_; }
    int n() const { return n_; }
    const Group& group() const { return Group::get(kind_, n_); }
    const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Rational coeff(std::size_t idx) const;

    void add(std::size_t idx, const Rational& c);
    static GAElem single(GroupKind kind, int n, const std::vector<int>& images, const Rational& c = 1);
    static GAElem identity(GroupKind kind, int n);

    GAElem& operator+=(const GAElem& o);
    GAElem& operator-=(const GAElem& o);
    GAElem& operator*=(const Rational& s);
    friend GAElem operator+(GAElem a, const GAElem& b) { return a += b; }
    friend GAElem operator-(GAElem a, const GAElem& b) { return a -= b; }
    friend GAElem operator*(GAElem a, const Rational& s) { return a *= s; }
    friend GAElem operator*(const Rational& s, GAElem a) { return a *= s; }
    friend bool operator==(const GAElem& a, const GAElem& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void check_same(const GAElem& o) const;
    GroupKind kind_;
    int n_;
    std::map<std::uint32_t, Rational> terms_;
};

// (ab)(pi) = sum over sigma tau = pi of a(sigma) b(tau).
GAElem ga_multiply(const GAElem& a, const GAElem& b);
inline GAElem operator*(const GAElem& a, const GAElem& b) { return ga_multiply(a, b); }

// Polynomial in x with group-algebra coefficients; coeffs[i] multiplies x^i.
struct GAPoly {
    GroupKind kind;
    int n;
    std::vector<GAElem> coeffs;

    GAElem eval(const Rational& x) const;
    int degree() const;
};

enum class ClassFamily {
    descent_set,
    descent_num,
    cyclic_descent_num,
    B_descent_num,
    B_cyclic_descent_num,
    peak_interior_set,
    peak_left_set,
    peak_interior_num,
    peak_left_num,
    peak_right_num,
    peak_exterior_num,
    B_peak_sign_num,
    B_peak_sign_set,
    right_peak_num,
    // Further families used for refinements and searches.
    peak_right_set,
    peak_exterior_set,
    B_cyclic_descent_sign,        // (cdes_B, sign of pi(n))
    peak_interior_first_descent,  // (pe, whether 1 is a descent)
    B_exterior_peak_set,          // report-only: peaks over 1..n with pi(n+1) = 0
};

using ClassLabel = std::int64_t;

ClassFamily parse_class_family(const std::string& s);
std::string to_string(ClassFamily f);
GroupKind group_of(ClassFamily f);
ClassLabel classify(ClassFamily f, const Group& G, std::size_t idx);
// Distinct labels realized in the group, ascending.
std::vector<ClassLabel> class_labels(ClassFamily f, int n);
std::string label_to_string(ClassFamily f, ClassLabel label);
// Accepts the label_to_string form.
ClassLabel parse_label(ClassFamily f, const std::string& text);

// Label helpers for paired families.
inline ClassLabel pair_label(std::int64_t primary, int flag) { return primary * 2 + flag; }
inline std::int64_t label_primary(ClassLabel l) { return l >> 1; }
inline int label_flag(ClassLabel l) { return static_cast<int>(l & 1); }

struct ClassSum {
    GAElem elem;
    bool empty;
};
ClassSum class_sum(int n, ClassFamily f, ClassLabel label);

enum class StructureFamily { phi, phi_c, phi_B, phi_B_c, rho, rho_bar, rho_l, rho_r, rho_B };

struct StructureInfo {
    OrderPolyKind kind;
    Rational a, b;  // argument substitution x -> a x + b
    GroupKind group;
    ClassFamily classes;
};

StructureFamily parse_structure_family(const std::string& s);
std::string to_string(StructureFamily f);
StructureInfo structure_info(StructureFamily f);

// The structure polynomial in class-collapsed form: one polynomial per class label.
// Construction asserts that the order polynomial is constant on each class.
struct ClassPolynomial {
    StructureFamily family;
    int n;
    std::vector<ClassLabel> labels;
    std::vector<UniPoly> polys;           // parallel to labels
    std::vector<std::uint32_t> class_of;  // group index -> position in labels
    int degree() const;
};

const ClassPolynomial& class_polynomial(int n, StructureFamily f);
GAPoly structure_polynomial(int n, StructureFamily f);
// Coefficients e_0..e_deg of the structure polynomial, recovered by interpolation
// at the nodes x = 1..deg+1; zero entries are kept so the index is the power of x.
std::vector<GAElem> idempotents(int n, StructureFamily f);

}  // namespace peaklab
