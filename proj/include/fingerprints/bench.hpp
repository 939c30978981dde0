#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fingerprints/corpus.hpp"
#include "fingerprints/dictionary.hpp"

namespace fingerprints {

struct BenchConfig {
    std::string dataset = "unnamed";
    std::vector<std::string> words;  // already length-filtered by the caller
    Variant variant = Variant::Occurrence;
    LetterStrategy strategy = LetterStrategy::Common;
    Metric metric = Metric::Hamming;
    int k = 1;
    unsigned bits_per_count = 2;
    unsigned bits_per_position = 3;
    std::size_t query_count = 1000;
    std::size_t iterations = 100;
    int distort_max_errors = 0;  // each error applied with probability 0.5
    std::uint64_t seed = 0;
    bool levenshtein_length_prefilter = false;
    std::optional<std::vector<std::string>> queries_override;
    std::size_t word_length = 0;  // report label; 0 = collection not length-filtered
};

struct BenchReport {
    std::string dataset;
    Variant variant = Variant::Occurrence;
    LetterStrategy strategy = LetterStrategy::Common;
    Metric metric = Metric::Hamming;
    int k = 1;
    std::size_t word_length = 0;
    std::size_t word_count = 0;
    std::string letters;  // slot-order serialization of the selected set

    double t_naive_ns = 0.0;       // mean time per naive pair comparison
    double t_fingerprint_ns = 0.0; // mean time per fingerprint-path pair comparison
    double speedup = 0.0;          // t_naive_ns / t_fingerprint_ns
    double rejection_pct = 0.0;
    double construction_mbps = 0.0;

    std::uint64_t matches_naive = 0;
    std::uint64_t matches_fingerprint = 0;
    QueryStats filtered_stats;  // one pass over the query set

    std::size_t query_count = 0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::string environment;
};

namespace detail {

inline double elapsed_ns(std::chrono::steady_clock::time_point t0,
                         std::chrono::steady_clock::time_point t1) {
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

inline std::string compiler_description() {
#if defined(__VERSION__)
    return "compiler " __VERSION__;
#else
    return "unknown compiler";
#endif
}

struct PassResult {
    QueryStats totals;
    double total_ns = 0.0;
};

inline PassResult run_pass(const FingerprintedDictionary& dict,
                           const std::vector<std::string>& queries, const QueryOptions& opt,
                           std::size_t iterations) {
    PassResult result;
    std::vector<std::size_t> matches;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t it = 0; it < iterations; ++it)
        for (const auto& q : queries)
            dict.query_into(q, opt, matches, &result.totals);
    result.total_ns = elapsed_ns(t0, std::chrono::steady_clock::now());
    return result;
}

}  // namespace detail

/// Times the naive and fingerprint query paths over the same query set and
/// cross-checks their match counts. Construction time covers the comparison
/// tables and all per-word fingerprints.
inline BenchReport run_benchmark(const BenchConfig& config) {
    if (config.words.empty())
        throw std::invalid_argument("run_benchmark: empty dictionary");
    if (config.query_count < 1 || config.iterations < 1 || config.k < 1)
        throw std::invalid_argument("run_benchmark: query_count, iterations and k must be >= 1");

    const std::size_t capacity =
        Scheme::letter_capacity(config.variant, config.bits_per_count, config.bits_per_position);
    const LetterSet letters =
        select_letters(compute_frequencies(config.words), capacity, config.strategy);
    const Scheme scheme =
        Scheme::make(config.variant, letters, config.bits_per_count, config.bits_per_position);
    if (!scheme.supports(config.metric))
        throw std::invalid_argument(std::string(to_string(config.variant)) +
                                    " fingerprints do not filter for the " +
                                    std::string(to_string(config.metric)) + " distance");

    std::uint64_t word_bytes = 0;
    for (const auto& w : config.words)
        word_bytes += w.size();

    const auto c0 = std::chrono::steady_clock::now();
    const FingerprintedDictionary dict(config.words, scheme);
    const double construction_ns = detail::elapsed_ns(c0, std::chrono::steady_clock::now());

    const std::vector<std::string> queries =
        config.queries_override
            ? *config.queries_override
            : sample_queries(config.words, config.query_count,
                             {config.distort_max_errors, 0.5}, config.seed);

    QueryOptions opt;
    opt.metric = config.metric;
    opt.k = config.k;
    opt.length_prefilter = config.levenshtein_length_prefilter;

    opt.use_filter = false;
    const detail::PassResult naive = detail::run_pass(dict, queries, opt, config.iterations);
    opt.use_filter = true;
    const detail::PassResult filtered = detail::run_pass(dict, queries, opt, config.iterations);

    if (naive.totals.matches != filtered.totals.matches)
        throw std::logic_error("filter dropped matches: naive " +
                               std::to_string(naive.totals.matches) + " vs filtered " +
                               std::to_string(filtered.totals.matches));

    BenchReport report;
    report.dataset = config.dataset;
    report.variant = config.variant;
    report.strategy = config.strategy;
    report.metric = config.metric;
    report.k = config.k;
    report.word_length = config.word_length;
    report.word_count = config.words.size();
    report.letters = letters.symbols();
    report.query_count = queries.size();
    report.iterations = config.iterations;
    report.seed = config.seed;
    report.environment = detail::compiler_description();

    const double pairs =
        static_cast<double>(config.iterations) * static_cast<double>(queries.size()) *
        static_cast<double>(config.words.size());
    report.t_naive_ns = naive.total_ns / pairs;
    report.t_fingerprint_ns = filtered.total_ns / pairs;
    report.speedup = report.t_naive_ns / report.t_fingerprint_ns;

    const auto& ft = filtered.totals;
    const std::uint64_t pool = ft.compared - ft.rejected_by_length;
    report.rejection_pct =
        pool == 0 ? 0.0 : 100.0 * static_cast<double>(ft.rejected_by_fingerprint) /
                              static_cast<double>(pool);
    report.construction_mbps = static_cast<double>(word_bytes) / 1e6 / (construction_ns / 1e9);

    const auto iters = static_cast<std::uint64_t>(config.iterations);
    report.matches_naive = naive.totals.matches / iters;
    report.matches_fingerprint = filtered.totals.matches / iters;
    report.filtered_stats.compared = ft.compared / iters;
    report.filtered_stats.rejected_by_length = ft.rejected_by_length / iters;
    report.filtered_stats.rejected_by_fingerprint = ft.rejected_by_fingerprint / iters;
    report.filtered_stats.verified = ft.verified / iters;
    report.filtered_stats.matches = ft.matches / iters;
    return report;
}

struct SweepConfig {
    std::vector<std::size_t> word_sizes;
    std::uint64_t corpus_bytes = 256 * 1024;
    std::vector<Variant> variants{Variant::Occurrence, Variant::Count, Variant::Position};
    std::vector<LetterStrategy> strategies{LetterStrategy::Common, LetterStrategy::Mixed,
                                           LetterStrategy::Rare};
    Metric metric = Metric::Hamming;
    int k = 1;
    unsigned bits_per_count = 2;
    unsigned bits_per_position = 3;
    std::size_t query_count = 200;
    std::size_t iterations = 1;
    int distort_max_errors = 0;
    std::uint64_t seed = 0;
};

struct SweepRow {
    std::size_t word_size = 0;
    std::string variant;   // fingerprint variant, or "naive" for the baseline
    std::string strategy;  // "-" on the naive row
    double mean_pair_ns = 0.0;
};

/// Per-pair comparison time over synthetic English words, one row per
/// (word size, variant, strategy) plus a naive baseline row per size.
inline std::vector<SweepRow> emit_figure_data(const SweepConfig& config) {
    if (config.word_sizes.empty())
        throw std::invalid_argument("emit_figure_data: no word sizes");

    std::vector<SweepRow> rows;
    for (const std::size_t size : config.word_sizes) {
        const std::vector<std::string> words = generate_synthetic(
            config.corpus_bytes, size, english_letter_frequencies(), config.seed);
        const std::vector<std::string> queries = sample_queries(
            words, config.query_count, {config.distort_max_errors, 0.5}, config.seed);
        const SymbolFrequencyTable freq = compute_frequencies(words);
        const double pairs = static_cast<double>(config.iterations) *
                             static_cast<double>(queries.size()) *
                             static_cast<double>(words.size());

        QueryOptions opt;
        opt.metric = config.metric;
        opt.k = config.k;

        {
            // The naive path ignores fingerprints, so any scheme will do here.
            const FingerprintedDictionary dict(
                words, Scheme::occurrence(select_letters(freq, 16, LetterStrategy::Common)));
            opt.use_filter = false;
            const detail::PassResult naive =
                detail::run_pass(dict, queries, opt, config.iterations);
            rows.push_back({size, "naive", "-", naive.total_ns / pairs});
        }

        opt.use_filter = true;
        for (const Variant variant : config.variants) {
            const std::size_t capacity = Scheme::letter_capacity(variant, config.bits_per_count,
                                                                 config.bits_per_position);
            for (const LetterStrategy strategy : config.strategies) {
                const Scheme scheme =
                    Scheme::make(variant, select_letters(freq, capacity, strategy),
                                 config.bits_per_count, config.bits_per_position);
                const FingerprintedDictionary dict(words, scheme);
                const detail::PassResult pass =
                    detail::run_pass(dict, queries, opt, config.iterations);
                rows.push_back({size, std::string(to_string(variant)),
                                std::string(to_string(strategy)), pass.total_ns / pairs});
            }
        }
    }
    return rows;
}

}  // namespace fingerprints
