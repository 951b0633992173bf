#pragma once

#include "peaklab/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace peaklab {

using SparseVec = std::map<std::uint64_t, Rational>;

// Incremental row echelon form over Q with sparse rows.
class Echelon {
public:
    // Reduces v against the stored rows; the result is zero iff v is in the span.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // Returns true if v was independent of the stored rows.
    bool insert(const SparseVec& v);
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::uint64_t, SparseVec>> rows_;  // (pivot, row with pivot entry 1)
};

std::size_t rank_of(const std::vector<SparseVec>& rows);

}  // namespace peaklab
