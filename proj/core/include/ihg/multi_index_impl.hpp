#pragma once

#include <map>

namespace ihg {

template <class V, class Visit>
void walkShells(int n, int maxNorm, const V &rootValue, Visit &&visit,
                const std::function<void(const MultiIndex &, const V &)> &emit)
{
    std::map<MultiIndex, V> shell;
    shell.emplace(MultiIndex::zero(n), rootValue);
    for (int d = 0;; ++d) {
        for (const auto &[m, v] : shell) {
            emit(m, v);
        }
        if (d == maxNorm || n == 0) {
            break;
        }
        std::map<MultiIndex, V> next;
        for (const auto &[m, v] : shell) {
            for (int i = m.lastNonzero() < 0 ? 0 : m.lastNonzero(); i < n; ++i) {
                next.emplace(m.plusUnit(i), visit(m, v, i));
            }
        }
        shell = std::move(next);
    }
}

} // namespace ihg
