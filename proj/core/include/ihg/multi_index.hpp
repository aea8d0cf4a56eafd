#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "ihg/errors.hpp"

namespace ihg {

/// n-tuple of nonnegative integers. Immutable once built.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static MultiIndex unit(int n, int i);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int> &entries() const noexcept { return entries_; }
    int norm() const noexcept { return norm_; }

    MultiIndex plusUnit(int i) const;
    // Index of the last nonzero entry, -1 for the zero index.
    int lastNonzero() const noexcept;

    friend bool operator==(const MultiIndex &a, const MultiIndex &b) { return a.entries_ == b.entries_; }
    // Graded lexicographic: by norm first, then lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b)
    {
        if (auto c = a.norm_ <=> b.norm_; c != 0) {
            return c;
        }
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    int norm_ = 0;
};

// All multi-indices of size n with |m| <= maxNorm, in graded lexicographic order.
std::vector<MultiIndex> gradedMultiIndices(int n, int maxNorm);

// Walks shells |m| = 0..maxNorm. Each index m != 0 is reached exactly once from its
// predecessor m - e_i (i = lastNonzero(m)); visit(m, parentValue, i) returns the value
// carried to m. Shells are visited in graded lexicographic order.
template <class V, class Visit>
void walkShells(int n, int maxNorm, const V &rootValue, Visit &&visit,
                const std::function<void(const MultiIndex &, const V &)> &emit);

} // namespace ihg

#include "ihg/multi_index_impl.hpp"
