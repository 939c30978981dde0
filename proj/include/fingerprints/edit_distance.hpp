#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fingerprints {

/// Bounded verifier result: the exact distance when it is <= k, otherwise
/// empty ("exceeds k").
using BoundedDistance = std::optional<int>;

/// Early-exit Hamming distance: gives up after k+1 mismatches.
/// Both strings must have the same length; Hamming is undefined otherwise.
inline BoundedDistance hamming_bounded(std::string_view s1, std::string_view s2, int k) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("hamming_bounded: strings differ in length");
    int mismatches = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        if (s1[i] != s2[i] && ++mismatches > k)
            return std::nullopt;
    }
    return mismatches;
}

/// Banded Levenshtein distance: evaluates only the 2k+1 diagonal strip with
/// two rows of state. Exact whenever the distance is <= k.
inline BoundedDistance levenshtein_bounded(std::string_view s1, std::string_view s2, int k) {
    if (k < 0)
        return std::nullopt;
    const auto m = static_cast<int>(s1.size());
    const auto n = static_cast<int>(s2.size());
    if (m > n)
        return levenshtein_bounded(s2, s1, k);
    if (n - m > k)
        return std::nullopt;

    const int inf = k + 1;  // anything past the band behaves as +infinity
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, inf);
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, inf);
    for (int j = 0; j <= std::min(k, n); ++j)
        prev[j] = j;

    for (int i = 1; i <= m; ++i) {
        const int lo = std::max(1, i - k);
        const int hi = std::min(n, i + k);
        cur[lo - 1] = (i <= k) ? i : inf;
        int row_best = inf;
        for (int j = lo; j <= hi; ++j) {
            const int sub = prev[j - 1] + (s1[i - 1] != s2[j - 1]);
            const int del = (j < i + k) ? prev[j] + 1 : inf;   // prev[j] valid iff |i-1-j| <= k
            const int ins = (j > i - k) ? cur[j - 1] + 1 : inf;  // cur[j-1] valid iff j-1 >= i-k
            cur[j] = std::min({sub, del, ins});
            row_best = std::min(row_best, cur[j]);
        }
        if (row_best > k)
            return std::nullopt;
        std::swap(prev, cur);
    }
    return prev[n] <= k ? BoundedDistance(prev[n]) : std::nullopt;
}

}  // namespace fingerprints
