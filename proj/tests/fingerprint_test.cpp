#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "fingerprints/fingerprint.hpp"
#include "fingerprints/reference.hpp"

using namespace fingerprints;

namespace {

Scheme occ16() { return Scheme::occurrence(LetterSet(std::string_view("etaoinshrdlcumwf"))); }
Scheme halved8() { return Scheme::occurrence_halved(LetterSet(std::string_view("etaoinsh"))); }
Scheme count8() { return Scheme::count(LetterSet(std::string_view("etaoinsh")), 2); }
Scheme pos6() { return Scheme::position(LetterSet(std::string_view("etaoin")), 3); }

std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                        std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz") {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string w(len(rng), '\0');
    for (auto& c : w)
        c = alphabet[pick(rng)];
    return w;
}

}  // namespace

TEST_CASE("scheme capacities and validation") {
    CHECK(Scheme::letter_capacity(Variant::Occurrence) == 16);
    CHECK(Scheme::letter_capacity(Variant::OccurrenceHalved) == 8);
    CHECK(Scheme::letter_capacity(Variant::Count, 2) == 8);
    CHECK(Scheme::letter_capacity(Variant::Count, 4) == 4);
    CHECK(Scheme::letter_capacity(Variant::Position, 2, 3) == 6);  // 5 fields + 1 spare bit
    CHECK(Scheme::letter_capacity(Variant::Position, 2, 4) == 4);
    CHECK(Scheme::letter_capacity(Variant::Position, 2, 5) == 4);  // 3 fields + 1 spare bit
    CHECK_THROWS_AS(Scheme::letter_capacity(Variant::Count, 3), std::invalid_argument);
    CHECK_THROWS_AS(Scheme::occurrence(LetterSet(std::string_view("abc"))),
                    std::invalid_argument);

    const auto pos = pos6();
    CHECK(pos.position_slots() == 5);
    CHECK(pos.extra_occurrence_slots() == 1);
    CHECK(pos.field_count() == 6);
    CHECK(pos.field_width(0) == 3);
    CHECK(pos.field_width(5) == 1);
}

TEST_CASE("metric support per variant") {
    CHECK(occ16().supports(Metric::Hamming));
    CHECK(occ16().supports(Metric::Levenshtein));
    CHECK(count8().supports(Metric::Levenshtein));
    CHECK(halved8().supports(Metric::Hamming));
    CHECK_FALSE(halved8().supports(Metric::Levenshtein));
    CHECK(pos6().supports(Metric::Hamming));
    CHECK_FALSE(pos6().supports(Metric::Levenshtein));
}

TEST_CASE("rendered fingerprints of \"instance\"") {
    CHECK(render(build_occurrence("instance", occ16()), occ16()) == "1110111000010000");
    CHECK(render(build_occurrence_halved("instance", halved8()), halved8()) ==
          "01 10 01 00 10 11 10 00");
    CHECK(render(build_count("instance", count8()), count8()) == "01 01 01 00 01 10 01 00");
    CHECK(render(build_position("instance", pos6()), pos6()) == "111 011 100 111 000 1");
}

TEST_CASE("builders on empty and tiny strings") {
    CHECK(build_occurrence("", occ16()).bits == 0);
    CHECK(build_occurrence_halved("", halved8()).bits == 0);
    CHECK(build_count("", count8()).bits == 0);
    // Every position field reads "absent", occurrence bits stay clear.
    CHECK(render(build_position("", pos6()), pos6()) == "111 111 111 111 111 0");
    // A 1-character string has an empty first half.
    CHECK(render(build_occurrence_halved("e", halved8()), halved8()) ==
          "01 00 00 00 00 00 00 00");
}

TEST_CASE("position fields hold first occurrences, saturating at all-ones") {
    const auto scheme = pos6();
    const std::string s = "e" + std::string(19, 'z');
    const auto f = build_position(s, scheme);
    CHECK(render(f, scheme) == "000 111 111 111 111 0");

    // Position 7 and beyond is indistinguishable from absent.
    CHECK(render(build_position("zzzzzzze", scheme), scheme) ==
          render(build_position("zzzzzzzz", scheme), scheme));
    CHECK(render(build_position("zzzzzze", scheme), scheme) == "110 111 111 111 111 0");
}

TEST_CASE("count fields saturate at 2^b - 1") {
    const auto scheme = count8();
    CHECK(render(build_count("eeee", scheme), scheme) == "11 00 00 00 00 00 00 00");
    CHECK(render(build_count("eee", scheme), scheme) == "11 00 00 00 00 00 00 00");
    CHECK(render(build_count("ee", scheme), scheme) == "10 00 00 00 00 00 00 00");

    std::mt19937_64 rng(3);
    for (int round = 0; round < 500; ++round) {
        const auto s = random_word(rng, 0, 24, "etaoz");
        const auto f = build_count(s, scheme);
        for (std::size_t q = 0; q < scheme.letters().size(); ++q) {
            std::size_t occurrences = 0;  // independent counting scan
            for (char c : s)
                occurrences += c == scheme.letters().symbol(q);
            const auto field = (f.bits >> scheme.field_shift(q)) & 3u;
            CHECK(field == std::min<std::size_t>(occurrences, 3));
        }
    }
}

TEST_CASE("occurrence bits agree with membership scans") {
    // A letter set that tracks the whole test alphabet.
    const auto scheme = Scheme::occurrence(LetterSet(std::string_view("abcdefghijklmnop")));
    std::mt19937_64 rng(4);
    for (int round = 0; round < 500; ++round) {
        const auto s = random_word(rng, 0, 20, "abc");
        const auto f = build_occurrence(s, scheme);
        for (std::size_t q = 0; q < 16; ++q) {
            const bool present = s.find(static_cast<char>(scheme.letters().symbol(q))) !=
                                 std::string::npos;
            CHECK(((f.bits >> (15 - q)) & 1u) == (present ? 1u : 0u));
        }
    }
}

TEST_CASE("halved bits agree with per-half membership scans") {
    const auto scheme = halved8();
    std::mt19937_64 rng(5);
    for (int round = 0; round < 500; ++round) {
        const auto s = random_word(rng, 0, 15, "etaozq");
        const auto f = build_occurrence_halved(s, scheme);
        const std::string first = s.substr(0, s.size() / 2);
        const std::string second = s.substr(s.size() / 2);
        for (std::size_t q = 0; q < 8; ++q) {
            const char c = static_cast<char>(scheme.letters().symbol(q));
            CHECK(((f.bits >> (15 - 2 * q)) & 1u) ==
                  (first.find(c) != std::string::npos ? 1u : 0u));
            CHECK(((f.bits >> (14 - 2 * q)) & 1u) ==
                  (second.find(c) != std::string::npos ? 1u : 0u));
        }
    }
}

TEST_CASE("build dispatches to the variant builders deterministically") {
    std::mt19937_64 rng(6);
    for (int round = 0; round < 200; ++round) {
        const auto s = random_word(rng, 0, 20);
        CHECK(build(s, occ16()) == build_occurrence(s, occ16()));
        CHECK(build(s, halved8()) == build_occurrence_halved(s, halved8()));
        CHECK(build(s, count8()) == build_count(s, count8()));
        CHECK(build(s, pos6()) == build_position(s, pos6()));
        CHECK(build(s, occ16()) == build(s, occ16()));
    }
}

TEST_CASE("comparison tables match direct computation entry by entry") {
    const auto scheme = pos6();
    const ComparisonTables tables(scheme);
    std::uint32_t bad = 0;
    for (std::uint32_t x = 0; x < (1u << 16); ++x) {
        // Kernighan bit count, independent of std::popcount.
        std::uint32_t v = x;
        int bits = 0;
        for (; v != 0; v &= v - 1)
            ++bits;
        bad += tables.popcount16(static_cast<std::uint16_t>(x)) != bits;

        int groups = 0;
        for (unsigned g = 0; g < 5; ++g)
            groups += ((x >> (13 - 3 * g)) & 7u) != 0;
        groups += x & 1u;
        bad += tables.group_mismatch(static_cast<std::uint16_t>(x)) != groups;
        bad += tables.group_mismatch(static_cast<std::uint16_t>(x)) > 6;
    }
    CHECK(bad == 0);
    for (int d = 0; d <= 16; ++d)
        CHECK(tables.ceil_half(d) == (d + 1) / 2);
}

TEST_CASE("fingerprint_distance equals the field-by-field reference everywhere") {
    for (const auto& scheme : {occ16(), halved8(), count8(), pos6()}) {
        const ComparisonTables tables(scheme);
        std::uint32_t bad = 0;
        for (std::uint32_t x = 0; x < (1u << 16); ++x) {
            const Fingerprint a{static_cast<std::uint16_t>(x)};
            const Fingerprint b{0};
            bad += fingerprint_distance(a, b, scheme, tables) !=
                   fingerprint_distance_reference(a, b, scheme);
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("fingerprint distance examples") {
    const auto scheme = occ16();
    const ComparisonTables tables(scheme);
    const auto run = build(std::string_view("run"), scheme);
    const auto ran = build(std::string_view("ran"), scheme);
    // Occurrence sets differ exactly for 'a' and 'u'.
    CHECK(fingerprint_distance(run, ran, scheme, tables) == 2);
    CHECK(fingerprint_distance(run, run, scheme, tables) == 0);

    const auto counts = count8();
    const ComparisonTables count_tables(counts);
    const auto three = build(std::string_view("eee"), counts);  // e-field 11
    const auto one = build(std::string_view("e"), counts);      // e-field 01
    CHECK(fingerprint_distance(three, one, counts, count_tables) == 1);
}

TEST_CASE("lower bound and rejection decisions") {
    const auto scheme = occ16();
    const ComparisonTables tables(scheme);
    CHECK(lower_bound_errors(0, tables) == 0);
    CHECK(lower_bound_errors(2, tables) == 1);
    CHECK(lower_bound_errors(3, tables) == 2);

    const auto f_run = build(std::string_view("run"), scheme);
    const auto f_ran = build(std::string_view("ran"), scheme);
    // F_D = 2 only proves one error; k = 1 must go to verification.
    CHECK_FALSE(can_reject(f_run, f_ran, 1, scheme, tables));
    // "tea" vs "wof": six occurrence bits differ, bound 3 > 1.
    CHECK(can_reject(build(std::string_view("tea"), scheme),
                     build(std::string_view("wof"), scheme), 1, scheme, tables));
    CHECK_FALSE(can_reject(f_run, f_run, 1, scheme, tables));
}

TEST_CASE("fingerprint distance is a metric") {
    std::mt19937_64 rng(8);
    for (const auto& scheme : {occ16(), halved8(), count8(), pos6()}) {
        const ComparisonTables tables(scheme);
        for (int round = 0; round < 2000; ++round) {
            const Fingerprint x{static_cast<std::uint16_t>(rng())};
            const Fingerprint y{static_cast<std::uint16_t>(rng())};
            const Fingerprint z{static_cast<std::uint16_t>(rng())};
            CHECK(tables.distance(x, x) == 0);
            CHECK(tables.distance(x, y) == tables.distance(y, x));
            CHECK(tables.distance(x, z) <= tables.distance(x, y) + tables.distance(y, z));
        }
    }
}

TEST_CASE("ceil(F_D/2) lower-bounds the true distance", "[soundness]") {
    std::mt19937_64 rng(9);
    const auto schemes = {occ16(), halved8(), count8(), pos6()};
    std::vector<ComparisonTables> tables;
    for (const auto& s : schemes)
        tables.emplace_back(s);

    for (int round = 0; round < 3000; ++round) {
        const auto s1 = random_word(rng, 0, 12);
        const auto s2_equal = random_word(rng, s1.size(), s1.size());
        const auto s2_any = random_word(rng, 0, 12);

        const int ham = hamming_full(s1, s2_equal);
        const int lev = levenshtein_full(s1, s2_any);

        std::size_t i = 0;
        for (const auto& scheme : schemes) {
            const int fd_equal = tables[i].distance(build(s1, scheme), build(s2_equal, scheme));
            CHECK(tables[i].ceil_half(fd_equal) <= ham);
            if (scheme.supports(Metric::Levenshtein)) {
                const int fd = tables[i].distance(build(s1, scheme), build(s2_any, scheme));
                CHECK(tables[i].ceil_half(fd) <= lev);
            }
            ++i;
        }
    }
}

TEST_CASE("one edit grows the fingerprint distance by at most two", "[growth]") {
    std::mt19937_64 rng(10);
    const std::string_view alphabet = "abcdefghijklmnopqrstuvwxyz";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);

    const auto schemes = {occ16(), count8(), pos6()};
    std::vector<ComparisonTables> tables;
    for (const auto& s : schemes)
        tables.emplace_back(s);

    for (int round = 0; round < 3000; ++round) {
        const auto s1 = random_word(rng, 1, 20);
        const auto s2 = random_word(rng, 1, 20);

        // One substitution (a single Hamming or Levenshtein error).
        std::string sub = s2;
        sub[rng() % sub.size()] = alphabet[pick(rng)];
        // One insertion or deletion (Levenshtein only).
        std::string indel = s2;
        if (rng() % 2 == 0 && indel.size() > 1)
            indel.erase(rng() % indel.size(), 1);
        else
            indel.insert(indel.begin() + static_cast<long>(rng() % (indel.size() + 1)),
                         alphabet[pick(rng)]);

        std::size_t i = 0;
        for (const auto& scheme : schemes) {
            const auto f1 = build(s1, scheme);
            const int base = tables[i].distance(f1, build(s2, scheme));
            CHECK(tables[i].distance(f1, build(sub, scheme)) <= base + 2);
            if (scheme.supports(Metric::Levenshtein))
                CHECK(tables[i].distance(f1, build(indel, scheme)) <= base + 2);
            ++i;
        }
    }
}
