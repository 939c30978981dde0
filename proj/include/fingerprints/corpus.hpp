#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fingerprints/letter_model.hpp"

namespace fingerprints {

struct CorpusStats {
    std::map<std::size_t, std::size_t> length_histogram;
    std::size_t mode_length = 0;  // ties break toward the smaller length
    std::uint64_t total_bytes = 0;
};

inline CorpusStats corpus_stats(const std::vector<std::string>& words) {
    if (words.empty())
        throw std::invalid_argument("corpus_stats: empty word list");
    CorpusStats stats;
    for (const auto& w : words) {
        ++stats.length_histogram[w.size()];
        stats.total_bytes += w.size();
    }
    std::size_t best = 0;
    for (const auto& [length, count] : stats.length_histogram) {
        if (count > best) {  // map iterates lengths ascending, so ties keep the smaller
            best = count;
            stats.mode_length = length;
        }
    }
    return stats;
}

/// Generates fixed-length words with symbols drawn independently from the
/// given distribution, until at least `total_bytes` of word data exist.
/// Deterministic for a fixed seed.
inline std::vector<std::string> generate_synthetic(std::uint64_t total_bytes,
                                                   std::size_t word_length,
                                                   std::span<const LetterFrequency> frequencies,
                                                   std::uint64_t seed) {
    if (word_length == 0)
        throw std::invalid_argument("generate_synthetic: word length must be positive");
    if (frequencies.empty())
        throw std::invalid_argument("generate_synthetic: empty distribution");

    std::vector<double> weights;
    weights.reserve(frequencies.size());
    for (const auto& f : frequencies)
        weights.push_back(f.weight);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::mt19937_64 rng(seed);

    std::vector<std::string> words;
    std::uint64_t produced = 0;
    while (produced < total_bytes) {
        std::string w(word_length, '\0');
        for (auto& c : w)
            c = static_cast<char>(frequencies[pick(rng)].symbol);
        produced += w.size();
        words.push_back(std::move(w));
    }
    return words;
}

struct DistortionConfig {
    int max_errors = 0;
    double error_probability = 0.5;
};

/// Samples n queries uniformly with replacement, then applies up to
/// max_errors substitutions, each with the configured probability, at a
/// uniform position with a uniform replacement from the corpus alphabet.
inline std::vector<std::string> sample_queries(const std::vector<std::string>& words,
                                               std::size_t n, const DistortionConfig& distortion,
                                               std::uint64_t seed) {
    if (words.empty())
        throw std::invalid_argument("sample_queries: empty dictionary");

    std::string alphabet;
    {
        const SymbolFrequencyTable freq = compute_frequencies(words);
        for (int c = 0; c < 256; ++c)
            if (freq.counts[c] != 0)
                alphabet.push_back(static_cast<char>(c));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_symbol(0, alphabet.size() - 1);
    std::bernoulli_distribution flip(distortion.error_probability);

    std::vector<std::string> queries;
    queries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string q = words[pick_word(rng)];
        for (int e = 0; e < distortion.max_errors && !q.empty(); ++e) {
            if (!flip(rng))
                continue;
            std::uniform_int_distribution<std::size_t> pick_pos(0, q.size() - 1);
            q[pick_pos(rng)] = alphabet[pick_symbol(rng)];
        }
        queries.push_back(std::move(q));
    }
    return queries;
}

/// Reads a newline-separated word file as raw bytes. A trailing newline does
/// not produce an empty final word.
inline std::vector<std::string> read_word_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line))
        words.push_back(line);
    return words;
}

inline void write_word_lines(const std::string& path, const std::vector<std::string>& words) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& w : words) {
        out.write(w.data(), static_cast<std::streamsize>(w.size()));
        out.put('\n');
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace fingerprints
