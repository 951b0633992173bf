#pragma once

#include "peaklab/permutation.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace peaklab {

// S_n or B_n with elements numbered in lexicographic order of their images.
// Instances are built once per (kind, n) and shared.
class Group {
public:
    static const Group& get(GroupKind kind, int n);

    GroupKind kind() const { return kind_; }
    int n() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<int>& element(std::size_t idx) const { return elems_[idx]; }
    // Throws std::invalid_argument if the images are not an element of this group.
    std::size_t index_of(const std::vector<int>& images) const;
    std::size_t identity() const { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    Permutation perm(std::size_t idx) const { return Permutation(elems_[idx]); }
    SignedPermutation signed_perm(std::size_t idx) const { return SignedPermutation(elems_[idx]); }
    std::string element_string(std::size_t idx) const;

private:
    Group(GroupKind kind, int n);
    static std::uint64_t encode(const std::vector<int>& v);

    GroupKind kind_;
    int n_;
    std::vector<std::vector<int>> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> table_;  // order^2 products when small enough
    std::size_t identity_ = 0;
};

}  // namespace peaklab
