#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "psskit/ratlin.hpp"

namespace psskit {

/// Sorted, duplicate-free list of element indices into a VecSet.
using IndexSet = std::vector<std::size_t>;

/// Bit i set <=> element i present. Subset scans are limited to 63 elements.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskSize = 63;

IndexSet mask_to_indices(Mask m);
Mask indices_to_mask(const IndexSet& s);
inline Mask full_mask(std::size_t n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }
inline bool mask_contains(Mask m, std::size_t i) { return (m >> i) & 1U; }
inline bool is_submask(Mask a, Mask b) { return (a & ~b) == 0; }

/// An indexed finite set of distinct nonzero rational vectors in Q^dim.
///
/// Element order is part of the value: every report refers to elements by
/// their index here, and derived sets keep a map back to these indices.
class VecSet {
public:
    /// Throws DimensionError (dim == 0 or a vector of another length),
    /// ZeroVectorError or DuplicateVectorError naming the offending index.
    VecSet(std::size_t dim, std::vector<QVec> vectors);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }
    const QVec& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<QVec>& vectors() const noexcept { return vectors_; }
    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }

    IndexSet all_indices() const;
    std::optional<std::size_t> find(const QVec& v) const;

    /// Elements at `ids`, in the order given.
    VecSet subset(const IndexSet& ids) const;
    VecSet subset(Mask m) const { return subset(mask_to_indices(m)); }

    /// d x n matrix with the elements as columns.
    QMat columns() const;
    QMat columns(const IndexSet& ids) const;

    std::size_t rank() const;
    std::size_t rank(const IndexSet& ids) const;

    friend bool operator==(const VecSet& a, const VecSet& b) {
        return a.dim_ == b.dim_ && a.vectors_ == b.vectors_;
    }

private:
    std::size_t dim_;
    std::vector<QVec> vectors_;
};

/// Memoized rank of subsets of one VecSet, keyed by mask.
class SubsetRanks {
public:
    explicit SubsetRanks(const VecSet& x);
    std::size_t operator()(Mask m) const;

private:
    const VecSet* x_;
    mutable std::unordered_map<Mask, std::size_t> cache_;
};

/// Calls f(ids) for every k-element subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    IndexSet ids(k);
    for (std::size_t i = 0; i < k; ++i) ids[i] = i;
    for (;;) {
        f(static_cast<const IndexSet&>(ids));
        std::size_t i = k;
        while (i > 0 && ids[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++ids[i - 1];
        for (std::size_t j = i; j < k; ++j) ids[j] = ids[j - 1] + 1;
    }
}

}  // namespace psskit
