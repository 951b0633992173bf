#include "peaklab/group.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace peaklab {

namespace {
constexpr std::size_t kTableLimit = 1000;
}

std::uint64_t Group::encode(const std::vector<int>& v) {
    std::uint64_t code = 0;
    for (int x : v) code = (code << 5) | static_cast<std::uint64_t>(x + 16);
    return code;
}

Group::Group(GroupKind kind, int n) : kind_(kind), n_(n) {
    iterate_group(n, kind, [&](const std::vector<int>& v) { elems_.push_back(v); });
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(encode(elems_[i]), static_cast<std::uint32_t>(i));
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    identity_ = index_of(id);
    inverse_.resize(elems_.size());
    std::vector<int> w(n);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        for (int j = 0; j < n; ++j) {
            int y = elems_[i][j];
            w[std::abs(y) - 1] = y > 0 ? j + 1 : -(j + 1);
        }
        inverse_[i] = static_cast<std::uint32_t>(index_of(w));
    }
    if (elems_.size() <= kTableLimit) {
        const std::size_t m = elems_.size();
        table_.resize(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                for (int j = 0; j < n; ++j) {
                    int t = elems_[b][j];
                    w[j] = t > 0 ? elems_[a][t - 1] : -elems_[a][-t - 1];
                }
                table_[a * m + b] = static_cast<std::uint32_t>(index_of(w));
            }
    }
}

const Group& Group::get(GroupKind kind, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Group>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Group>(new Group(kind, n))).first;
    return *it->second;
}

std::size_t Group::index_of(const std::vector<int>& images) const {
    if (static_cast<int>(images.size()) == n_) {
        auto it = index_.find(encode(images));
        if (it != index_.end()) return it->second;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < images.size(); ++i) s += (i ? "," : "") + std::to_string(images[i]);
    throw std::invalid_argument(s + "] is not an element of " +
                                (kind_ == GroupKind::symmetric ? "S_" : "B_") + std::to_string(n_));
}

std::size_t Group::multiply(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * elems_.size() + b];
    std::vector<int> w(n_);
    for (int j = 0; j < n_; ++j) {
        int t = elems_[b][j];
        w[j] = t > 0 ? elems_[a][t - 1] : -elems_[a][-t - 1];
    }
    return index_of(w);
}

std::string Group::element_string(std::size_t idx) const {
    std::string s = "[";
    for (std::size_t i = 0; i < elems_[idx].size(); ++i) s += (i ? "," : "") + std::to_string(elems_[idx][i]);
    return s + "]";
}

}  // namespace peaklab
