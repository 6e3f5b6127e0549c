// Lexicographic enumeration of k-subsets; shared by fault-set scans.
#pragma once

#include <cstdint>
#include <vector>

#include "ftcut/errors.hpp"

namespace ftcut {

inline std::int64_t combination_count(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > INT64_MAX) throw ValidationError("combination count overflow");
    }
    return static_cast<std::int64_t>(c);
}

// Calls fn(span-of-k-indices) for each k-subset of {0..n-1} in lexicographic
// order. fn may return void, or bool to stop early (return false = stop).
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const std::vector<int>& view = idx;
    for (;;) {
        if constexpr (std::is_same_v<decltype(fn(view)), bool>) {
            if (!fn(view)) return;
        } else {
            fn(view);
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace ftcut
