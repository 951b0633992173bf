#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peaklab {

using Mask = std::uint64_t;

// Raised when a computation would exceed a size guard.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StatResult {
    Mask set = 0;  // bit i <=> position i
    int count = 0;
    std::vector<int> positions() const;
    friend bool operator==(const StatResult&, const StatResult&) = default;
};

StatResult stat_from_mask(Mask m);
std::vector<int> mask_positions(Mask m);
Mask mask_of(const std::vector<int>& positions);

// pi(1..n) in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    // pi(i) for 1 <= i <= n; the virtual values pi(0) = pi(n+1) = 0.
    int operator()(int i) const;
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// pi(1..n) with nonzero images; pi(-i) = -pi(i) and pi(0) = 0 are implied.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);
    static SignedPermutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    // pi(i) for -n <= i <= n.
    int operator()(int i) const;
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> img_;
};

Permutation compose(const Permutation& sigma, const Permutation& tau);
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);
Permutation inverse(const Permutation& pi);
SignedPermutation inverse(const SignedPermutation& pi);

Permutation parse_permutation(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);
std::string to_string(const Permutation& pi);
std::string to_string(const SignedPermutation& pi);

enum class DescentKind { linear, cyclic };
enum class PeakKind { interior, left, right, exterior };
enum class SignedStatKind { descent, cyclic_descent, peak, sign };

StatResult descent_stat(const Permutation& pi, DescentKind kind = DescentKind::linear);
StatResult peak_stat(const Permutation& pi, PeakKind kind);
StatResult signed_stat(const SignedPermutation& pi, SignedStatKind kind);
// Peaks of a signed permutation over 1 <= i <= n with pi(n+1) = 0 appended.
StatResult signed_exterior_peak_stat(const SignedPermutation& pi);

Permutation eta(int n);    // (n, n-1, ..., 1)
Permutation omega(int n);  // (2, 3, ..., n, 1)
// Appends n to a permutation of size n-1.
Permutation hat(const Permutation& pi, int n);

enum class GroupKind { symmetric, hyperoctahedral };

// Largest n for full enumeration of each group. PEAKLAB_MAX_N raises or lowers both.
int group_size_guard(GroupKind kind);

// Elements in lexicographic order of their one-line images.
std::vector<Permutation> all_permutations(int n);
std::vector<SignedPermutation> all_signed_permutations(int n);
void iterate_group(int n, GroupKind kind, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace peaklab
