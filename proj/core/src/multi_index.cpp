#include "ihg/multi_index.hpp"

#include <numeric>

namespace ihg {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_) {
        if (e < 0) {
            throw DomainError("MultiIndex: negative entry");
        }
    }
    norm_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::unit(int n, int i)
{
    if (i < 0 || i >= n) {
        throw DomainError("MultiIndex::unit: index out of range");
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plusUnit(int i) const
{
    if (i < 0 || i >= size()) {
        throw DomainError("MultiIndex::plusUnit: index out of range");
    }
    MultiIndex r = *this;
    ++r.entries_[static_cast<std::size_t>(i)];
    ++r.norm_;
    return r;
}

int MultiIndex::lastNonzero() const noexcept
{
    for (int i = size() - 1; i >= 0; --i) {
        if (entries_[static_cast<std::size_t>(i)] != 0) {
            return i;
        }
    }
    return -1;
}

std::vector<MultiIndex> gradedMultiIndices(int n, int maxNorm)
{
    if (n < 0 || maxNorm < 0) {
        throw DomainError("gradedMultiIndices: negative argument");
    }
    std::vector<MultiIndex> out;
    walkShells<char>(
        n, maxNorm, 0, [](const MultiIndex &, char, int) { return char{0}; },
        [&](const MultiIndex &m, const char &) { out.push_back(m); });
    return out;
}

} // namespace ihg
