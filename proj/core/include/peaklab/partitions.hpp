#pragma once

#include "peaklab/multipoly.hpp"
#include "peaklab/poset.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace peaklab {

enum class AlphabetKind {
    ordinary,           // 1 < 2 < ... < k
    ordinaryB,          // -k < ... < 0 < ... < k
    enriched,           // -1 < 1 < -2 < 2 < ... (primed alphabet)
    left_enriched,      // 0 < -1 < 1 < ...
    right_enriched,     // enriched[k] followed by -(k+1)
    exterior_enriched,  // left_enriched[k-1] followed by -k
    B_enriched,         // -k < -k^-1 < ... < -1 < -1^-1 < 0 < 1^-1 < 1 < ... < k
};

struct ImageSetSpec {
    AlphabetKind kind;
    int k;
};

AlphabetKind parse_alphabet_kind(const std::string& s);
std::string to_string(AlphabetKind kind);
bool is_type_b(AlphabetKind kind);

// One letter of a totally ordered alphabet. Letters compare by their index in the alphabet.
struct Letter {
    int value;   // signed display value
    int eps;     // +1 or -1: whether equality is allowed under <=+ or <=-
    int weight;  // |value|; selects the variable z_weight in generating functions
    int neg;     // index of the negated letter, or -1
};

struct Alphabet {
    std::vector<Letter> letters;
    int zero = -1;        // index of the zero letter, if any
    int min_weight = 1;   // variable slot = weight - min_weight
    int num_vars = 0;

    std::size_t size() const { return letters.size(); }
    // x <=+ y  /  x <=- y on letter indices.
    bool leq_plus(int x, int y) const { return x < y || (x == y && letters[x].eps > 0); }
    bool leq_minus(int x, int y) const { return x < y || (x == y && letters[x].eps < 0); }
    std::string letter_name(int x) const;
};

Alphabet make_alphabet(const ImageSetSpec& spec);

struct PartitionGuard {
    int max_n = 6;
    int max_k = 5;
};

// Calls visit(f) for each P-partition; f[i-1] is the letter index assigned to label i.
void for_each_partition(const Poset& P, const ImageSetSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit,
                        PartitionGuard guard = {});
void for_each_partition(const BPoset& P, const ImageSetSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit,
                        PartitionGuard guard = {});

// Same enumeration over an explicit alphabet (no size guard). For type B posets the alphabet
// needs a zero letter and a negation on every letter.
void for_each_partition(const Poset& P, const Alphabet& A,
                        const std::function<void(const std::vector<int>&)>& visit);
void for_each_partition(const BPoset& P, const Alphabet& A,
                        const std::function<void(const std::vector<int>&)>& visit);

std::uint64_t count_partitions(const Poset& P, const ImageSetSpec& spec, PartitionGuard guard = {});
std::uint64_t count_partitions(const BPoset& P, const ImageSetSpec& spec, PartitionGuard guard = {});

// Sum of the weight monomials over all P-partitions, in alphabet.num_vars variables.
MultiPoly partition_gf(const Poset& P, const ImageSetSpec& spec, PartitionGuard guard = {});
MultiPoly partition_gf(const BPoset& P, const ImageSetSpec& spec, PartitionGuard guard = {});

// Counts for the chain of pi by dynamic programming over the chain; no size guard.
Integer count_chain_partitions(const Permutation& pi, const ImageSetSpec& spec);
Integer count_chain_partitions(const SignedPermutation& pi, const ImageSetSpec& spec);

// c[l] (l = 0..n, c[0] = 0): partitions into the enriched alphabet with absolute support [l].
// c0[l] (l = 0..n-1): partitions into the left (or type B) alphabet with support [0,l].
struct SupportCounts {
    std::vector<Integer> c;
    std::vector<Integer> c0;
};
// kind = enriched: c only; left_enriched: both; B_enriched: both (type B poset).
SupportCounts support_counts(const Poset& P, AlphabetKind kind);
SupportCounts support_counts(const BPoset& P);
// sum_l C(k,l) c[l] (+ sum_l C(k,l) c0[l] when with_zero).
Integer support_sum(const SupportCounts& sc, int k, bool with_zero);

}  // namespace peaklab
