#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fingerprints/edit_distance.hpp"
#include "fingerprints/fingerprint.hpp"

namespace fingerprints {

/// Per-query filter bookkeeping. Every candidate lands in exactly one of the
/// three rejection/verification buckets, so
/// compared == rejected_by_length + rejected_by_fingerprint + verified.
struct QueryStats {
    std::uint64_t compared = 0;
    std::uint64_t rejected_by_length = 0;
    std::uint64_t rejected_by_fingerprint = 0;
    std::uint64_t verified = 0;
    std::uint64_t matches = 0;

    QueryStats& operator+=(const QueryStats& o) {
        compared += o.compared;
        rejected_by_length += o.rejected_by_length;
        rejected_by_fingerprint += o.rejected_by_fingerprint;
        verified += o.verified;
        matches += o.matches;
        return *this;
    }
};

struct QueryOptions {
    Metric metric = Metric::Hamming;
    int k = 1;
    bool use_filter = true;
    /// Skip words whose length differs from the pattern's by more than k.
    /// Levenshtein only; off by default so rejection rates are measured over
    /// the full collection. Hamming always length-filters.
    bool length_prefilter = false;
};

/// A word collection preprocessed for filter-then-verify queries: one
/// fingerprint per word plus the comparison tables, all immutable after
/// construction.
class FingerprintedDictionary {
public:
    FingerprintedDictionary(std::vector<std::string> words, Scheme scheme)
        : words_(std::move(words)), scheme_(std::move(scheme)), tables_(scheme_) {
        prints_.reserve(words_.size());
        for (const auto& w : words_)
            prints_.push_back(build(w, scheme_));
    }

    [[nodiscard]] const std::vector<std::string>& words() const { return words_; }
    [[nodiscard]] const std::vector<Fingerprint>& prints() const { return prints_; }
    [[nodiscard]] const Scheme& scheme() const { return scheme_; }
    [[nodiscard]] const ComparisonTables& tables() const { return tables_; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }

    /// Scans the collection for words within distance k of the pattern.
    /// Matches are input-order indices and do not depend on `use_filter`.
    [[nodiscard]] std::vector<std::size_t> query(std::string_view pattern, const QueryOptions& opt,
                                                 QueryStats* stats = nullptr) const {
        std::vector<std::size_t> matches;
        query_into(pattern, opt, matches, stats);
        return matches;
    }

    /// Same as query() but reuses the caller's match buffer; the benchmark
    /// loop calls this to keep allocations out of the timed region.
    void query_into(std::string_view pattern, const QueryOptions& opt,
                    std::vector<std::size_t>& matches, QueryStats* stats = nullptr) const {
        matches.clear();
        if (opt.use_filter && !scheme_.supports(opt.metric))
            throw std::invalid_argument("scheme does not filter for this metric");

        QueryStats local;
        const std::size_t pattern_len = pattern.size();
        // Built once per query, reused against every word.
        const Fingerprint pattern_print = opt.use_filter ? build(pattern, scheme_) : Fingerprint{};

        for (std::size_t i = 0; i < words_.size(); ++i) {
            ++local.compared;
            const std::size_t word_len = words_[i].size();
            if (opt.metric == Metric::Hamming) {
                if (word_len != pattern_len) {
                    ++local.rejected_by_length;
                    continue;
                }
            } else if (opt.length_prefilter) {
                const std::size_t gap = word_len > pattern_len ? word_len - pattern_len
                                                               : pattern_len - word_len;
                if (gap > static_cast<std::size_t>(opt.k)) {
                    ++local.rejected_by_length;
                    continue;
                }
            }
            if (opt.use_filter &&
                tables_.ceil_half(tables_.distance(pattern_print, prints_[i])) > opt.k) {
                ++local.rejected_by_fingerprint;
                continue;
            }
            ++local.verified;
            const BoundedDistance d = opt.metric == Metric::Hamming
                                          ? hamming_bounded(words_[i], pattern, opt.k)
                                          : levenshtein_bounded(words_[i], pattern, opt.k);
            if (d) {
                matches.push_back(i);
                ++local.matches;
            }
        }
        if (stats)
            *stats += local;
    }

private:
    std::vector<std::string> words_;
    std::vector<Fingerprint> prints_;
    Scheme scheme_;
    ComparisonTables tables_;
};

}  // namespace fingerprints
