#include "peaklab/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace peaklab {

std::vector<int> mask_positions(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

Mask mask_of(const std::vector<int>& positions) {
    Mask m = 0;
    for (int p : positions) {
        if (p < 0 || p > 62) throw std::invalid_argument("position out of mask range");
        m |= Mask{1} << p;
    }
    return m;
}

StatResult stat_from_mask(Mask m) { return {m, std::popcount(m)}; }

std::vector<int> StatResult::positions() const { return mask_positions(set); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
    if (i == 0 || i == size() + 1) return 0;
    return img_.at(i - 1);
}

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a])
            throw std::invalid_argument("not a signed permutation of +-1.." + std::to_string(n));
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return SignedPermutation(std::move(v));
}

int SignedPermutation::operator()(int i) const {
    if (i == 0) return 0;
    if (i < 0) return -img_.at(-i - 1);
    return img_.at(i - 1);
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) v[i - 1] = sigma(tau(i));
    return Permutation(std::move(v));
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) v[i - 1] = sigma(tau(i));
    return SignedPermutation(std::move(v));
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> v(pi.size());
    for (int i = 1; i <= pi.size(); ++i) v[pi(i) - 1] = i;
    return Permutation(std::move(v));
}

SignedPermutation inverse(const SignedPermutation& pi) {
    std::vector<int> v(pi.size());
    for (int i = 1; i <= pi.size(); ++i) {
        int y = pi(i);
        v[std::abs(y) - 1] = y > 0 ? i : -i;
    }
    return SignedPermutation(std::move(v));
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected a bracketed list like [2,1,3]: '" + std::string(text) + "'");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size())
            throw std::invalid_argument("bad entry '" + tok + "' in '" + std::string(text) + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string list_to_string(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

Permutation parse_permutation(std::string_view text) { return Permutation(parse_int_list(text)); }
SignedPermutation parse_signed_permutation(std::string_view text) {
    return SignedPermutation(parse_int_list(text));
}
std::string to_string(const Permutation& pi) { return list_to_string(pi.images()); }
std::string to_string(const SignedPermutation& pi) { return list_to_string(pi.images()); }

StatResult descent_stat(const Permutation& pi, DescentKind kind) {
    const int n = pi.size();
    Mask m = 0;
    for (int i = 1; i < n; ++i)
        if (pi(i) > pi(i + 1)) m |= Mask{1} << i;
    if (kind == DescentKind::cyclic && n >= 1 && pi(n) > pi(1)) m |= Mask{1} << n;
    return stat_from_mask(m);
}

StatResult peak_stat(const Permutation& pi, PeakKind kind) {
    const int n = pi.size();
    int lo = 2, hi = n - 1;
    if (kind == PeakKind::left || kind == PeakKind::exterior) lo = 1;
    if (kind == PeakKind::right || kind == PeakKind::exterior) hi = n;
    Mask m = 0;
    for (int i = lo; i <= hi; ++i)
        if (pi(i - 1) < pi(i) && pi(i) > pi(i + 1)) m |= Mask{1} << i;
    return stat_from_mask(m);
}

StatResult signed_stat(const SignedPermutation& pi, SignedStatKind kind) {
    const int n = pi.size();
    Mask m = 0;
    switch (kind) {
        case SignedStatKind::descent:
        case SignedStatKind::cyclic_descent:
            for (int i = 0; i < n; ++i)
                if (pi(i) > pi(i + 1)) m |= Mask{1} << i;
            if (kind == SignedStatKind::cyclic_descent && n >= 1 && pi(n) > 0) m |= Mask{1} << n;
            break;
        case SignedStatKind::peak:
            for (int i = 1; i < n; ++i)
                if (pi(i - 1) < pi(i) && pi(i) > pi(i + 1)) m |= Mask{1} << i;
            break;
        case SignedStatKind::sign:
            return {0, (n >= 1 && pi(1) < 0) ? 1 : 0};
    }
    return stat_from_mask(m);
}

StatResult signed_exterior_peak_stat(const SignedPermutation& pi) {
    const int n = pi.size();
    Mask m = 0;
    for (int i = 1; i <= n; ++i) {
        int next = i == n ? 0 : pi(i + 1);
        if (pi(i - 1) < pi(i) && pi(i) > next) m |= Mask{1} << i;
    }
    return stat_from_mask(m);
}

Permutation eta(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation omega(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (i + 1) % n + 1;
    return Permutation(std::move(v));
}

Permutation hat(const Permutation& pi, int n) {
    if (pi.size() != n - 1) throw std::invalid_argument("hat: expected a permutation of size n-1");
    std::vector<int> v = pi.images();
    v.push_back(n);
    return Permutation(std::move(v));
}

int group_size_guard(GroupKind kind) {
    if (const char* env = std::getenv("PEAKLAB_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 12) return static_cast<int>(v);
    }
    return kind == GroupKind::symmetric ? 8 : 6;
}

namespace {

void check_guard(int n, GroupKind kind) {
    if (n < 0) throw std::invalid_argument("group size must be nonnegative");
    int g = group_size_guard(kind);
    if (n > g)
        throw ResourceLimitError(std::string(kind == GroupKind::symmetric ? "S_n" : "B_n") +
                                 " enumeration guard exceeded: n=" + std::to_string(n) +
                                 " > " + std::to_string(g) + " (set PEAKLAB_MAX_N to override)");
}

std::vector<std::vector<int>> raw_elements(int n, GroupKind kind) {
    check_guard(n, kind);
    std::vector<std::vector<int>> out;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
        if (kind == GroupKind::symmetric) {
            out.push_back(v);
            continue;
        }
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            std::vector<int> w = v;
            for (int i = 0; i < n; ++i)
                if (s >> i & 1) w[i] = -w[i];
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(v.begin(), v.end()));
    if (kind == GroupKind::hyperoctahedral) std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for (auto& v : raw_elements(n, GroupKind::symmetric)) out.emplace_back(std::move(v));
    return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (auto& v : raw_elements(n, GroupKind::hyperoctahedral)) out.emplace_back(std::move(v));
    return out;
}

void iterate_group(int n, GroupKind kind, const std::function<void(const std::vector<int>&)>& visit) {
    for (const auto& v : raw_elements(n, kind)) visit(v);
}

}  // namespace peaklab
