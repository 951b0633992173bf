#pragma once

#include "peaklab/multipoly.hpp"
#include "peaklab/permutation.hpp"
#include "peaklab/span.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace peaklab {

// Index conventions (all bitmasks use bit i for i):
//   M, F    subsets of [n-1]
//   N, L    subsets of [0, n-1]
//   K_A     interior peak sets (subsets of [2, n-1], no two adjacent)
//   K_left  left peak sets (subsets of [1, n-1], no two adjacent)
//   K_B     sign-peak sets (sign, S), keyed by sign_peak_key
enum class QsymBasis { M, F, N, L, K_A, K_left, K_B };

QsymBasis parse_qsym_basis(const std::string& s);
std::string to_string(QsymBasis b);
// Bases whose realizations use z_0 as well as z_1..z_m.
bool uses_zero_variable(QsymBasis b);

inline std::uint64_t sign_peak_key(int sign, Mask peaks) { return (peaks << 1) | (sign ? 1u : 0u); }
inline int sign_peak_sign(std::uint64_t key) { return static_cast<int>(key & 1); }
inline Mask sign_peak_set(std::uint64_t key) { return key >> 1; }

bool valid_index(QsymBasis b, int n, std::uint64_t key);
// All valid indices of the basis in increasing key order.
std::vector<std::uint64_t> basis_indices(QsymBasis b, int n);

class QsymExpansion {
public:
    QsymExpansion(QsymBasis basis, int n) : basis_(basis), n_(n) {}

    QsymBasis basis() const { return basis_; }
    int n() const { return n_; }
    const std::map<std::uint64_t, Rational>& coeffs() const { return coeffs_; }
    // Throws std::invalid_argument for an index outside the basis.
    void add(std::uint64_t key, const Rational& c);
    Rational coeff(std::uint64_t key) const;

    friend bool operator==(const QsymExpansion& a, const QsymExpansion& b) {
        return a.basis_ == b.basis_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    QsymBasis basis_;
    int n_;
    std::map<std::uint64_t, Rational> coeffs_;
};

enum class DeltaFlavor { interior, left, B };
enum class ExpansionBasis { monomial, fundamental, peak };

DeltaFlavor parse_delta_flavor(const std::string& s);
std::string to_string(DeltaFlavor f);
ExpansionBasis parse_expansion_basis(const std::string& s);
std::string to_string(ExpansionBasis b);

// The generating function of enriched P-partitions of the chain of pi.
// interior: M/F/K_A; left: N/L/K_left (images of pi in S_n).
QsymExpansion delta_expansion(const Permutation& pi, DeltaFlavor flavor, ExpansionBasis basis);
// Type B: N/L/K_B.
QsymExpansion delta_expansion(const SignedPermutation& pi, ExpansionBasis basis);

// Peak functions from their index alone.
QsymExpansion peak_function(QsymBasis basis, int n, std::uint64_t key, ExpansionBasis target);

// Changes of basis: F <-> M, L <-> N; peak functions go to F or L.
QsymExpansion to_fundamental(const QsymExpansion& e);
QsymExpansion to_monomial(const QsymExpansion& e);

// Realization in finitely many variables: z_1..z_m, or z_0..z_m for the bases that use z_0
// (slot 0 is then z_0).
MultiPoly truncate_realize(const QsymExpansion& e, int m);

// Brute-force generating function of the chain of pi in the truncated enriched alphabet.
MultiPoly chain_realization(const Permutation& pi, DeltaFlavor flavor, int m);
MultiPoly chain_realization(const SignedPermutation& pi, int m);

enum class BipartiteFlavor { gesA, interior, left, B, peakideal_mixed, interiordescent_mixed };
BipartiteFlavor parse_bipartite_flavor(const std::string& s);
std::string to_string(BipartiteFlavor f);

struct BipartiteReport {
    bool ok = true;
    std::string detail;
};
// Compares the generating function over the product alphabet with the sum over
// factorizations sigma tau = pi, both truncated to p and q letters per factor.
// images are read as a signed permutation for flavor B.
BipartiteReport bipartite_check(const std::vector<int>& images, BipartiteFlavor flavor, int p, int q);

// Structure constants of the dual coalgebra; same tensor as the group-algebra side.
StructureConstants coalgebra_constants(int n, ClassFamily family);

enum class PeakFamily { interior, left, B };
PeakFamily parse_peak_family(const std::string& s);
// Rank of the peak functions of degree n expressed in the F (or L) basis.
std::size_t peak_basis_rank(int n, PeakFamily family);
// Number of valid index sets of the family.
std::size_t peak_set_count(int n, PeakFamily family);
// f_0 = f_1 = 1.
std::uint64_t fibonacci(int k);

}  // namespace peaklab
