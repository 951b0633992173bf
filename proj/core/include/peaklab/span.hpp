#pragma once

#include "peaklab/echelon.hpp"
#include "peaklab/group_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace peaklab {

SparseVec to_sparse(const GAElem& x);
std::size_t span_rank(const std::vector<GAElem>& elems);
bool in_span(const std::vector<GAElem>& elems, const GAElem& x);

// Class sums of every realized label of the family, in label order.
std::vector<GAElem> class_sums(int n, ClassFamily f);

struct ClosureResult {
    std::vector<GAElem> basis;  // starts with a basis of the input span
    std::size_t initial_rank = 0;
    bool initially_closed = true;
    // First product (positions in the input list) found outside the input span.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Adjoins products of basis elements until the span is stable.
// Throws ResourceLimitError once the dimension exceeds cap.
ClosureResult multiplicative_closure(const std::vector<GAElem>& elems, std::size_t cap);

// counts[pi][a][b] = #{(sigma, tau) : sigma tau = pi, cls1[sigma] = a, cls2[tau] = b}.
struct PairTensor {
    std::size_t k1 = 0, k2 = 0;
    std::vector<std::uint32_t> counts;
    std::uint32_t at(std::size_t pi, std::size_t a, std::size_t b) const {
        return counts[(pi * k1 + a) * k2 + b];
    }
};
PairTensor pair_tensor(const Group& G, const std::vector<std::uint32_t>& cls1, std::size_t k1,
                       const std::vector<std::uint32_t>& cls2, std::size_t k2);

struct StructureCounterexample {
    std::size_t I, J, K;       // positions in labels
    std::size_t rep, other;    // group indices of two members of class K
    std::uint32_t rep_count, other_count;
};

struct StructureConstants {
    ClassFamily family;
    int n;
    std::vector<ClassLabel> labels;
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> representatives;  // lexicographically least member
    std::vector<std::uint32_t> entries;        // [I][J][K], counted at the representative of K
    bool well_defined = true;
    std::optional<StructureCounterexample> counterexample;

    std::uint32_t at(std::size_t I, std::size_t J, std::size_t K) const {
        const std::size_t m = labels.size();
        return entries[(I * m + J) * m + K];
    }
};
StructureConstants structure_constants(int n, ClassFamily f);

// Smallest n in [n_from, n_to] whose structure constants are not well defined.
std::optional<StructureConstants> first_ill_defined(ClassFamily f, int n_from, int n_to);

enum class RefinedKind { typeB_F, typeA_F };
RefinedKind parse_refined_kind(const std::string& s);

struct NamedElem {
    std::string name;
    GAElem elem;
};
struct RelationCheck {
    std::string relation;
    bool ok;
};
struct RefinedReport {
    std::vector<NamedElem> pieces;      // the F elements
    std::vector<RelationCheck> relations;
    std::size_t pieces_rank = 0;
    std::size_t union_rank = 0;         // rank of the pieces together with both E families
    bool ok = true;
};
RefinedReport refined_decomposition(int n, RefinedKind kind);

// Psi(pi) = (1/n) sum_{i=1..n} hat(pi) omega^i, from the span of the Eulerian class sums of
// S_{n-1} into Q[S_n].
GAElem cyclic_map(const GAElem& x, int n, bool normalized = true);

struct CyclicIsoReport {
    bool multiplicative = true;        // Psi(E_i) Psi(E_j) == Psi(E_i E_j)
    bool raw_multiplicative = true;    // the same without the 1/n
    bool raw_scaled = true;            // Phi(a) Phi(b) == n Phi(ab)
    std::size_t image_rank = 0;        // n - 1 when injective
    bool image_is_cyclic_span = true;  // image == span of the cyclic Eulerian class sums
    bool unit_idempotent = true;       // Psi(identity)^2 == Psi(identity)
    bool ok() const { return multiplicative && image_rank + 1 == static_cast<std::size_t>(n) &&
                             image_is_cyclic_span && unit_idempotent; }
    int n = 0;
};
CyclicIsoReport cyclic_isomorphism_check(int n);

}  // namespace peaklab
