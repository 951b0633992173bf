#pragma once

#include "peaklab/partitions.hpp"
#include "peaklab/rational_gf.hpp"
#include "peaklab/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace peaklab {

enum class OrderPolyKind {
    A_ordinary,
    A_cyclic,
    B_ordinary,
    B_cyclic,
    enriched_interior,
    enriched_left,
    enriched_right,
    enriched_exterior,
    enriched_B,
};

OrderPolyKind parse_order_poly_kind(const std::string& s);
std::string to_string(OrderPolyKind kind);
bool is_type_b(OrderPolyKind kind);
bool is_enriched(OrderPolyKind kind);
// The alphabet counted by the kind's order polynomial at parameter k (not defined for the cyclic kinds).
ImageSetSpec image_set_for(OrderPolyKind kind, int k);

// Throws std::invalid_argument when the kind does not belong to the permutation's group.
UniPoly order_polynomial(const Permutation& pi, OrderPolyKind kind);
UniPoly order_polynomial(const SignedPermutation& pi, OrderPolyKind kind);

// Closed-form generating function sum_k Omega(pi;k) t^k.
RationalGF enriched_gf(const Permutation& pi, OrderPolyKind kind);
RationalGF enriched_gf(const SignedPermutation& pi);

// Functional equation for enriched kinds:
//   interior, exterior:  O(-x) = (-1)^n O(x)
//   left, right:         O(-x-1/2) = (-1)^n O(x-1/2)
//   B:                   as left when pi(1) > 0, as interior when pi(1) < 0
bool reciprocity_check(const Permutation& pi, OrderPolyKind kind);
bool reciprocity_check(const SignedPermutation& pi);

enum class PeakPolyKind {
    A_eulerian,         // sum t^(des+1)
    B_eulerian,         // sum t^des_B
    B_cyclic_eulerian,  // sum t^cdes_B
    W_interior,         // sum t^(pe+1)
    W_left,             // sum t^lpe
    W_plus,             // pi(1) > 0: sum t^pe_B
    W_minus,            // pi(1) < 0: sum t^(pe_B+1)
    W_weighted,         // exactly i minus signs: sum t^des_B
};

PeakPolyKind parse_peak_poly_kind(const std::string& s);
std::string to_string(PeakPolyKind kind);
UniPoly peak_polynomial(int n, PeakPolyKind kind, int i = 0);

// W(4t/(1+t)^2) as a rational function of t.
RationalGF substitute_peak_variable(const UniPoly& W);

enum class Identity43 { augeul, peeul1, peeul2, bpeeul1, bpeeul2 };
Identity43 parse_identity43(const std::string& s);
std::string to_string(Identity43 id);

struct IdentityReport {
    bool ok = false;
    std::string detail;
};

// bpeeul2 is checked with alpha symbolic unless a value is supplied.
IdentityReport identity_check_43(int n, Identity43 which, std::optional<Rational> alpha = std::nullopt);

}  // namespace peaklab
