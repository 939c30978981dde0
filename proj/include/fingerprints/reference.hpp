#pragma once

// Slow, obviously-correct counterparts of the fast paths. They back the
// property tests and the CLI's cross-check mode; none of them is optimized.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fingerprints/fingerprint.hpp"

namespace fingerprints {

/// Full O(|s1|*|s2|) dynamic-programming Levenshtein distance.
inline int levenshtein_full(std::string_view s1, std::string_view s2) {
    const std::size_t n = s2.size();
    std::vector<int> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= s1.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= n; ++j) {
            const int sub = prev[j - 1] + (s1[i - 1] != s2[j - 1]);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

/// Full mismatch count, no early exit.
inline int hamming_full(std::string_view s1, std::string_view s2) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("hamming_full: strings differ in length");
    int mismatches = 0;
    for (std::size_t i = 0; i < s1.size(); ++i)
        mismatches += s1[i] != s2[i];
    return mismatches;
}

/// Fingerprint-free scan of the whole collection; the completeness oracle
/// for filtered queries.
inline std::vector<std::size_t> naive_scan(const std::vector<std::string>& words,
                                           std::string_view pattern, int k, Metric metric) {
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (metric == Metric::Hamming) {
            if (words[i].size() != pattern.size())
                continue;
            if (hamming_full(words[i], pattern) <= k)
                matches.push_back(i);
        } else if (levenshtein_full(words[i], pattern) <= k) {
            matches.push_back(i);
        }
    }
    return matches;
}

/// Field-by-field fingerprint distance, no lookup tables.
inline int fingerprint_distance_reference(Fingerprint f1, Fingerprint f2, const Scheme& scheme) {
    const std::uint16_t x = f1.bits ^ f2.bits;
    switch (scheme.variant()) {
        case Variant::Occurrence:
        case Variant::OccurrenceHalved: {
            int bits = 0;
            for (unsigned i = 0; i < kFingerprintBits; ++i)
                bits += (x >> i) & 1;
            return bits;
        }
        case Variant::Count:
        case Variant::Position: {
            int mismatches = 0;
            for (std::size_t i = 0; i < scheme.field_count(); ++i) {
                const std::uint32_t mask = (1u << scheme.field_width(i)) - 1;
                if ((x >> scheme.field_shift(i)) & mask)
                    ++mismatches;
            }
            return mismatches;
        }
    }
    throw std::invalid_argument("unknown variant");
}

}  // namespace fingerprints
