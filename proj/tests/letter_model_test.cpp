#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>

#include "fingerprints/corpus.hpp"
#include "fingerprints/letter_model.hpp"

using namespace fingerprints;

TEST_CASE("compute_frequencies counts bytes") {
    SECTION("empty corpus") {
        const auto table = compute_frequencies(std::string_view(""));
        CHECK(table.total == 0);
        for (auto c : table.counts)
            CHECK(c == 0);
        CHECK(table.alphabet_size() == 0);
    }
    SECTION("aab") {
        const auto table = compute_frequencies(std::string_view("aab"));
        CHECK(table.counts['a'] == 2);
        CHECK(table.counts['b'] == 1);
        CHECK(table.total == 3);
        CHECK(table.alphabet_size() == 2);
    }
    SECTION("word-list overload matches concatenation") {
        const std::vector<std::string> words{"ab", "ba", "c"};
        const auto split = compute_frequencies(words);
        const auto joined = compute_frequencies(std::string_view("abbac"));
        CHECK(split.counts == joined.counts);
        CHECK(split.total == joined.total);
    }
}

TEST_CASE("generator's most probable symbol ranks first in its own corpus") {
    const auto words =
        generate_synthetic(1 << 20, 12, english_letter_frequencies(), 42);
    // Independent counting pass, bypassing SymbolFrequencyTable.
    std::array<std::uint64_t, 256> counts{};
    for (const auto& w : words)
        for (unsigned char c : w)
            ++counts[c];
    const auto top = std::max_element(counts.begin(), counts.end()) - counts.begin();
    CHECK(top == 'e');

    const auto table = compute_frequencies(words);
    for (int c = 0; c < 256; ++c)
        CHECK(table.counts[c] == counts[c]);
}

TEST_CASE("select_letters on the English table") {
    const auto table = english_frequency_table();
    SECTION("16 most common, in order") {
        const auto set = select_letters(table, 16, LetterStrategy::Common);
        CHECK(set.symbols() == "etaoinshrdlcumwf");
    }
    SECTION("8 most common") {
        CHECK(select_letters(table, 8, LetterStrategy::Common).symbols() == "etaoinsh");
    }
    SECTION("mixed 16 = 8 most common + 8 rarest") {
        const auto set = select_letters(table, 16, LetterStrategy::Mixed);
        CHECK(set.symbols().substr(0, 8) == "etaoinsh");
        CHECK(set.symbols().substr(8) == "zqxjkvbp");
    }
    SECTION("mixed with odd count takes the extra letter from the common side") {
        const auto set = select_letters(table, 5, LetterStrategy::Mixed);
        CHECK(set.symbols() == "etazq");
    }
}

TEST_CASE("select_letters edge cases and errors") {
    SECTION("whole alphabet of 3, rare, ascending") {
        SymbolFrequencyTable table;
        table.counts['x'] = 5;
        table.counts['y'] = 1;
        table.counts['z'] = 3;
        table.total = 9;
        const auto set = select_letters(table, 3, LetterStrategy::Rare);
        CHECK(set.symbols() == "yzx");
    }
    SECTION("fails when too few distinct symbols") {
        const auto table = compute_frequencies(std::string_view("aab"));
        CHECK_THROWS_AS(select_letters(table, 3, LetterStrategy::Common), std::invalid_argument);
        CHECK_THROWS_AS(select_letters(table, 3, LetterStrategy::Mixed), std::invalid_argument);
    }
    SECTION("ties break on byte value and stay deterministic") {
        SymbolFrequencyTable table;
        for (char c : {'a', 'b', 'c', 'd'})
            table.counts[static_cast<unsigned char>(c)] = 7;
        table.total = 28;
        const auto common = select_letters(table, 2, LetterStrategy::Common);
        const auto rare = select_letters(table, 2, LetterStrategy::Rare);
        CHECK(common.symbols() == select_letters(table, 2, LetterStrategy::Common).symbols());
        CHECK(rare.symbols() == "ab");
        // All counts equal: common and rare must still not collide.
        for (char c : rare.symbols())
            CHECK(common.symbols().find(c) == std::string::npos);
    }
}

TEST_CASE("common and rare selections are disjoint and frequency-ordered") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        SymbolFrequencyTable table;
        const int alphabet = 8 + static_cast<int>(rng() % 40);
        for (int i = 0; i < alphabet; ++i) {
            table.counts[32 + i] = 1 + rng() % 5;  // plenty of ties
            table.total += table.counts[32 + i];
        }
        const std::size_t k = 1 + rng() % (alphabet / 2);
        const auto common = select_letters(table, k, LetterStrategy::Common);
        const auto rare = select_letters(table, k, LetterStrategy::Rare);

        for (std::size_t i = 0; i < k; ++i)
            CHECK(common.symbols().find(rare.symbols()[i]) == std::string::npos);

        std::uint64_t min_common = UINT64_MAX, max_rare = 0;
        for (unsigned char c : common.symbols())
            min_common = std::min(min_common, table.counts[c]);
        for (unsigned char c : rare.symbols())
            max_rare = std::max(max_rare, table.counts[c]);
        CHECK(max_rare <= min_common);
    }
}

TEST_CASE("english default letters") {
    const auto letters = english_default_letters();
    CHECK(letters.size() == 26);
    CHECK(letters.front() == 'e');
    CHECK(letters[15] == 'f');
    CHECK(letters.substr(0, 16) == "etaoinshrdlcumwf");
    // The built-in ordering and the frequency table agree.
    CHECK(select_letters(english_frequency_table(), 26, LetterStrategy::Common).symbols() ==
          letters);
}

TEST_CASE("LetterSet maps symbols to slots") {
    const LetterSet set(std::string_view("etao"));
    CHECK(set.size() == 4);
    CHECK(set.slot_of('e') == 0);
    CHECK(set.slot_of('o') == 3);
    CHECK(set.slot_of('z') == -1);
    CHECK(set.symbol(1) == 't');
    CHECK(set.contains('a'));
    CHECK_FALSE(set.contains('b'));
    CHECK(set.symbols() == "etao");
    CHECK_THROWS_AS(LetterSet(std::string_view("abca")), std::invalid_argument);
}
