#include "peaklab/echelon.hpp"

namespace peaklab {

SparseVec Echelon::reduce(SparseVec v) const {
    for (const auto& [pivot, row] : rows_) {
        auto it = v.find(pivot);
        if (it == v.end()) continue;
        const Rational f = it->second;
        for (const auto& [k, c] : row) {
            auto [jt, inserted] = v.try_emplace(k, -f * c);
            if (!inserted) {
                jt->second -= f * c;
                if (jt->second == 0) v.erase(jt);
            }
        }
    }
    return v;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const std::uint64_t pivot = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [k, c] : r) c *= inv;
    rows_.emplace_back(pivot, std::move(r));
    return true;
}

std::size_t rank_of(const std::vector<SparseVec>& rows) {
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace peaklab
