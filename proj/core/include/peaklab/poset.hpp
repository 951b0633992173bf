#pragma once

#include "peaklab/permutation.hpp"

#include <utility>
#include <vector>

namespace peaklab {

// Strict partial order on labels 1..n, stored transitively closed.
class Poset {
public:
    // Builds the closure of the given a < b relations; throws on cycles or bad labels.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less);
    static Poset antichain(int n);
    static Poset chain(const Permutation& pi);

    int size() const { return n_; }
    bool less(int a, int b) const { return rel_[(a - 1) * n_ + (b - 1)]; }
    // Cover-free list of all pairs a < b.
    std::vector<std::pair<int, int>> relations() const;

private:
    int n_ = 0;
    std::vector<char> rel_;
};

// Strict partial order on -n..n, closed under a < b => -b < -a.
class BPoset {
public:
    // With symmetrize=true the mirrored relations are added before closing;
    // otherwise a relation set that is not already symmetric is rejected.
    static BPoset from_relations(int n, const std::vector<std::pair<int, int>>& less,
                                 bool symmetrize = true);
    static BPoset antichain(int n);
    static BPoset chain(const SignedPermutation& pi);

    int size() const { return n_; }
    bool less(int a, int b) const { return rel_[(a + n_) * (2 * n_ + 1) + (b + n_)]; }
    std::vector<std::pair<int, int>> relations() const;

private:
    int n_ = 0;
    std::vector<char> rel_;
};

// pi(s) < pi(s+1) for s not in I, pi(s) > pi(s+1) for s in I.
Poset zigzag_poset(const Permutation& pi, Mask I);
// Same along 0 = pi(0), pi(1), ..., pi(n), with the mirrored relations.
BPoset zigzag_poset(const SignedPermutation& pi, Mask I);

std::vector<Permutation> linear_extensions(const Poset& P);
std::vector<SignedPermutation> linear_extensions(const BPoset& P);

}  // namespace peaklab
