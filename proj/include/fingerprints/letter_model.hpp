#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fingerprints {

/// Per-byte occurrence counts over a corpus.
struct SymbolFrequencyTable {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;

    [[nodiscard]] std::size_t alphabet_size() const {
        std::size_t n = 0;
        for (auto c : counts)
            if (c != 0) ++n;
        return n;
    }

    void add(std::string_view corpus) {
        for (unsigned char c : corpus)
            ++counts[c];
        total += corpus.size();
    }
};

inline SymbolFrequencyTable compute_frequencies(std::string_view corpus) {
    SymbolFrequencyTable table;
    table.add(corpus);
    return table;
}

/// Frequencies of a word collection, counted over the concatenated words.
inline SymbolFrequencyTable compute_frequencies(const std::vector<std::string>& words) {
    SymbolFrequencyTable table;
    for (const auto& w : words)
        table.add(w);
    return table;
}

enum class LetterStrategy { Common, Mixed, Rare };

inline std::string_view to_string(LetterStrategy s) {
    switch (s) {
        case LetterStrategy::Common: return "common";
        case LetterStrategy::Mixed: return "mixed";
        case LetterStrategy::Rare: return "rare";
    }
    return "?";
}

/// Ordered alphabet subset with the symbol -> slot mapping used by all
/// fingerprint builders. Slot q of symbol c is the index of c in `symbols`.
class LetterSet {
public:
    LetterSet() { slot_.fill(-1); }

    explicit LetterSet(std::string_view symbols) : symbols_(symbols) {
        slot_.fill(-1);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto c = static_cast<unsigned char>(symbols_[i]);
            if (slot_[c] != -1)
                throw std::invalid_argument("LetterSet: duplicate symbol in letter set");
            slot_[c] = static_cast<std::int16_t>(i);
        }
    }

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] unsigned char symbol(std::size_t slot) const {
        return static_cast<unsigned char>(symbols_[slot]);
    }
    [[nodiscard]] int slot_of(unsigned char c) const { return slot_[c]; }
    [[nodiscard]] bool contains(unsigned char c) const { return slot_[c] >= 0; }

    /// One line of symbols in slot order; used in reports for reproducibility.
    [[nodiscard]] const std::string& symbols() const { return symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> slot_{};
};

/// Picks `count` symbols from a frequency table.
///
/// All strategies rank symbols under one total order (count, then byte value,
/// both ascending); common takes the top of that order, rare the bottom. The
/// shared order keeps common and rare sets disjoint even when counts tie.
inline LetterSet select_letters(const SymbolFrequencyTable& freq, std::size_t count,
                                LetterStrategy strategy) {
    std::vector<unsigned char> ranked;
    for (int c = 0; c < 256; ++c)
        if (freq.counts[c] != 0)
            ranked.push_back(static_cast<unsigned char>(c));
    std::sort(ranked.begin(), ranked.end(), [&](unsigned char a, unsigned char b) {
        if (freq.counts[a] != freq.counts[b])
            return freq.counts[a] < freq.counts[b];
        return a < b;
    });

    if (ranked.size() < count)
        throw std::invalid_argument("select_letters: collection has " +
                                    std::to_string(ranked.size()) +
                                    " distinct symbols, need " + std::to_string(count));

    std::string picked;
    switch (strategy) {
        case LetterStrategy::Common:
            for (std::size_t i = 0; i < count; ++i)
                picked.push_back(static_cast<char>(ranked[ranked.size() - 1 - i]));
            break;
        case LetterStrategy::Rare:
            for (std::size_t i = 0; i < count; ++i)
                picked.push_back(static_cast<char>(ranked[i]));
            break;
        case LetterStrategy::Mixed: {
            const std::size_t from_common = (count + 1) / 2;
            const std::size_t from_rare = count / 2;
            for (std::size_t i = 0; i < from_common; ++i)
                picked.push_back(static_cast<char>(ranked[ranked.size() - 1 - i]));
            for (std::size_t i = 0; i < from_rare; ++i)
                picked.push_back(static_cast<char>(ranked[i]));
            break;
        }
    }
    // The LetterSet constructor rejects duplicates, which catches the case of
    // mixed halves overlapping on a too-small alphabet.
    return LetterSet(picked);
}

/// a-z ordered by descending relative frequency in English text.
inline std::string_view english_default_letters() {
    return "etaoinshrdlcumwfgypbvkjxqz";
}

struct LetterFrequency {
    unsigned char symbol;
    double weight;  // relative frequency, percent
};

/// English letter frequencies (percent), descending.
inline const std::array<LetterFrequency, 26>& english_letter_frequencies() {
    static const std::array<LetterFrequency, 26> table = {{
        {'e', 12.702}, {'t', 9.056}, {'a', 8.167}, {'o', 7.507}, {'i', 6.966},
        {'n', 6.749},  {'s', 6.327}, {'h', 6.094}, {'r', 5.987}, {'d', 4.253},
        {'l', 4.025},  {'c', 2.782}, {'u', 2.758}, {'m', 2.406}, {'w', 2.360},
        {'f', 2.228},  {'g', 2.015}, {'y', 1.974}, {'p', 1.929}, {'b', 1.492},
        {'v', 0.978},  {'k', 0.772}, {'j', 0.153}, {'x', 0.150}, {'q', 0.095},
        {'z', 0.074},
    }};
    return table;
}

/// The English frequencies as a synthetic count table (counts per million).
inline SymbolFrequencyTable english_frequency_table() {
    SymbolFrequencyTable table;
    for (const auto& [symbol, weight] : english_letter_frequencies()) {
        const auto count = static_cast<std::uint64_t>(weight * 10000.0 + 0.5);
        table.counts[symbol] = count;
        table.total += count;
    }
    return table;
}

}  // namespace fingerprints
