#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fingerprints/letter_model.hpp"

namespace fingerprints {

enum class Variant { Occurrence, OccurrenceHalved, Count, Position };
enum class Metric { Hamming, Levenshtein };

inline std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Occurrence: return "occurrence";
        case Variant::OccurrenceHalved: return "occurrence-halved";
        case Variant::Count: return "count";
        case Variant::Position: return "position";
    }
    return "?";
}

inline std::string_view to_string(Metric m) {
    return m == Metric::Hamming ? "hamming" : "levenshtein";
}

inline constexpr unsigned kFingerprintBits = 16;

/// Occurrence and count fingerprints bound both metrics; the halved and
/// position layouts depend on absolute character positions and so filter
/// for Hamming only.
inline constexpr bool variant_supports(Variant v, Metric m) {
    return m == Metric::Hamming || v == Variant::Occurrence || v == Variant::Count;
}

/// 16-bit string summary. Only meaningful together with the Scheme that built it.
struct Fingerprint {
    std::uint16_t bits = 0;
    friend bool operator==(Fingerprint, Fingerprint) = default;
};

/// Fingerprint variant plus its parameters and letter set.
///
/// Bit layout (shared by builders, comparison tables and rendering): slot 0
/// owns the most significant field, so the rendered form reads left to right
/// in letter-set order.
///   Occurrence        16 x 1-bit occurrence flags
///   OccurrenceHalved   8 x 2-bit fields: [first-half bit][second-half bit]
///   Count             16/b x b-bit saturating counters
///   Position          floor(16/p) x p-bit first-occurrence fields, then the
///                     remaining r = 16 - floor(16/p)*p bits as 1-bit
///                     occurrence flags for r further letters
class Scheme {
public:
    static Scheme occurrence(LetterSet letters) {
        return Scheme(Variant::Occurrence, std::move(letters), 0, 0);
    }
    static Scheme occurrence_halved(LetterSet letters) {
        return Scheme(Variant::OccurrenceHalved, std::move(letters), 0, 0);
    }
    static Scheme count(LetterSet letters, unsigned bits_per_count = 2) {
        return Scheme(Variant::Count, std::move(letters), bits_per_count, 0);
    }
    static Scheme position(LetterSet letters, unsigned bits_per_position = 3) {
        return Scheme(Variant::Position, std::move(letters), 0, bits_per_position);
    }

    static Scheme make(Variant v, LetterSet letters, unsigned bits_per_count = 2,
                       unsigned bits_per_position = 3) {
        switch (v) {
            case Variant::Occurrence: return occurrence(std::move(letters));
            case Variant::OccurrenceHalved: return occurrence_halved(std::move(letters));
            case Variant::Count: return count(std::move(letters), bits_per_count);
            case Variant::Position: return position(std::move(letters), bits_per_position);
        }
        throw std::invalid_argument("unknown variant");
    }

    /// Required letter-set size for a variant with the given parameters.
    static std::size_t letter_capacity(Variant v, unsigned b = 2, unsigned p = 3) {
        switch (v) {
            case Variant::Occurrence: return kFingerprintBits;
            case Variant::OccurrenceHalved: return kFingerprintBits / 2;
            case Variant::Count:
                if (b == 0 || kFingerprintBits % b != 0)
                    throw std::invalid_argument("count scheme: bits per count must divide 16");
                return kFingerprintBits / b;
            case Variant::Position: {
                if (p == 0 || p > kFingerprintBits)
                    throw std::invalid_argument("position scheme: bits per position must be in [1,16]");
                const std::size_t slots = kFingerprintBits / p;
                return slots + (kFingerprintBits - slots * p);
            }
        }
        throw std::invalid_argument("unknown variant");
    }

    [[nodiscard]] Variant variant() const { return variant_; }
    [[nodiscard]] const LetterSet& letters() const { return letters_; }
    [[nodiscard]] unsigned bits_per_count() const { return bits_per_count_; }
    [[nodiscard]] unsigned bits_per_position() const { return bits_per_position_; }

    /// Number of p-bit position fields (Position variant).
    [[nodiscard]] std::size_t position_slots() const { return kFingerprintBits / bits_per_position_; }
    /// Leftover 1-bit occurrence slots after the position fields.
    [[nodiscard]] std::size_t extra_occurrence_slots() const {
        return kFingerprintBits - position_slots() * bits_per_position_;
    }

    [[nodiscard]] bool supports(Metric m) const { return variant_supports(variant_, m); }

    [[nodiscard]] std::size_t field_count() const {
        switch (variant_) {
            case Variant::Occurrence: return kFingerprintBits;
            case Variant::OccurrenceHalved: return kFingerprintBits / 2;
            case Variant::Count: return kFingerprintBits / bits_per_count_;
            case Variant::Position: return position_slots() + extra_occurrence_slots();
        }
        return 0;
    }

    /// Width in bits of field `i` (fields are indexed in slot order).
    [[nodiscard]] unsigned field_width(std::size_t i) const {
        switch (variant_) {
            case Variant::Occurrence: return 1;
            case Variant::OccurrenceHalved: return 2;
            case Variant::Count: return bits_per_count_;
            case Variant::Position: return i < position_slots() ? bits_per_position_ : 1;
        }
        return 0;
    }

    /// Left shift that places field `i` within the 16-bit word.
    [[nodiscard]] unsigned field_shift(std::size_t i) const {
        if (variant_ == Variant::Position) {
            const std::size_t slots = position_slots();
            if (i < slots)
                return kFingerprintBits - bits_per_position_ * static_cast<unsigned>(i + 1);
            return static_cast<unsigned>(extra_occurrence_slots() - 1 - (i - slots));
        }
        const unsigned w = field_width(0);
        return kFingerprintBits - w * static_cast<unsigned>(i + 1);
    }

private:
    Scheme(Variant v, LetterSet letters, unsigned b, unsigned p)
        : variant_(v), letters_(std::move(letters)), bits_per_count_(b), bits_per_position_(p) {
        const std::size_t needed = letter_capacity(v, b, p);
        if (letters_.size() != needed)
            throw std::invalid_argument("scheme requires " + std::to_string(needed) +
                                        " letters, got " + std::to_string(letters_.size()));
    }

    Variant variant_;
    LetterSet letters_;
    unsigned bits_per_count_;
    unsigned bits_per_position_;
};

/// Lookup tables that make a fingerprint comparison one xor and one lookup.
///
/// Occurrence and occurrence-halved distances come from `popcount16`; count
/// and position distances come from `group_mismatch`, where a nonzero xor
/// field counts as one mismatch no matter how many of its bits differ. The
/// field-wise rule is what keeps one edit worth at most two mismatches (a
/// +-1 counter step can flip every bit of its field).
class ComparisonTables {
public:
    explicit ComparisonTables(const Scheme& scheme) : popcount_(1u << kFingerprintBits) {
        for (std::uint32_t x = 0; x < popcount_.size(); ++x)
            popcount_[x] = static_cast<std::uint8_t>(std::popcount(x));
        for (unsigned d = 0; d <= kFingerprintBits; ++d)
            ceil_half_[d] = static_cast<std::uint8_t>((d + 1) / 2);

        const Variant v = scheme.variant();
        if (v == Variant::Count || v == Variant::Position) {
            groups_.resize(1u << kFingerprintBits);
            const std::size_t fields = scheme.field_count();
            for (std::uint32_t x = 0; x < groups_.size(); ++x) {
                unsigned mismatches = 0;
                for (std::size_t i = 0; i < fields; ++i) {
                    const std::uint32_t mask = (1u << scheme.field_width(i)) - 1;
                    if ((x >> scheme.field_shift(i)) & mask)
                        ++mismatches;
                }
                groups_[x] = static_cast<std::uint8_t>(mismatches);
            }
            distance_table_ = groups_.data();
        } else {
            distance_table_ = popcount_.data();
        }
    }

    [[nodiscard]] int popcount16(std::uint16_t x) const { return popcount_[x]; }
    [[nodiscard]] int ceil_half(int d) const { return ceil_half_[d]; }
    /// Mismatching-field count for an xor value; built for count/position schemes.
    [[nodiscard]] int group_mismatch(std::uint16_t x) const { return groups_[x]; }
    [[nodiscard]] bool has_group_table() const { return !groups_.empty(); }

    /// Fingerprint distance of the scheme these tables were built for.
    [[nodiscard]] int distance(Fingerprint a, Fingerprint b) const {
        return distance_table_[static_cast<std::uint16_t>(a.bits ^ b.bits)];
    }

private:
    std::vector<std::uint8_t> popcount_;
    std::vector<std::uint8_t> groups_;
    std::array<std::uint8_t, kFingerprintBits + 1> ceil_half_{};
    const std::uint8_t* distance_table_ = nullptr;
};

inline Fingerprint build_occurrence(std::string_view s, const Scheme& scheme) {
    std::uint32_t bits = 0;
    for (unsigned char c : s) {
        const int q = scheme.letters().slot_of(c);
        if (q >= 0)
            bits |= 0x8000u >> q;
    }
    return {static_cast<std::uint16_t>(bits)};
}

inline Fingerprint build_occurrence_halved(std::string_view s, const Scheme& scheme) {
    // First half is s[0, floor(n/2)); a length-1 string has an empty first half.
    const std::size_t half = s.size() / 2;
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int q = scheme.letters().slot_of(static_cast<unsigned char>(s[i]));
        if (q < 0)
            continue;
        const unsigned bit = (i < half) ? (15 - 2 * q) : (14 - 2 * q);
        bits |= 1u << bit;
    }
    return {static_cast<std::uint16_t>(bits)};
}

inline Fingerprint build_count(std::string_view s, const Scheme& scheme) {
    const unsigned b = scheme.bits_per_count();
    const std::uint32_t saturated = (1u << b) - 1;
    std::uint32_t bits = 0;
    for (unsigned char c : s) {
        const int q = scheme.letters().slot_of(c);
        if (q < 0)
            continue;
        const unsigned shift = kFingerprintBits - b * static_cast<unsigned>(q + 1);
        const std::uint32_t field = (bits >> shift) & saturated;
        if (field != saturated)
            bits = (bits & ~(saturated << shift)) | ((field + 1) << shift);
    }
    return {static_cast<std::uint16_t>(bits)};
}

inline Fingerprint build_position(std::string_view s, const Scheme& scheme) {
    const unsigned p = scheme.bits_per_position();
    const std::uint32_t absent = (1u << p) - 1;
    const std::size_t slots = scheme.position_slots();
    std::uint32_t bits = 0;
    for (std::size_t q = 0; q < scheme.letters().size(); ++q) {
        const char c = static_cast<char>(scheme.letters().symbol(q));
        const std::size_t first = s.find(c);  // leftmost occurrence, O(n) per letter
        if (q < slots) {
            std::uint32_t field = absent;
            if (first != std::string_view::npos && first < absent)
                field = static_cast<std::uint32_t>(first);
            bits |= field << scheme.field_shift(q);
        } else if (first != std::string_view::npos) {
            bits |= 1u << scheme.field_shift(q);
        }
    }
    return {static_cast<std::uint16_t>(bits)};
}

inline Fingerprint build(std::string_view s, const Scheme& scheme) {
    switch (scheme.variant()) {
        case Variant::Occurrence: return build_occurrence(s, scheme);
        case Variant::OccurrenceHalved: return build_occurrence_halved(s, scheme);
        case Variant::Count: return build_count(s, scheme);
        case Variant::Position: return build_position(s, scheme);
    }
    throw std::invalid_argument("unknown variant");
}

/// Fingerprint distance F_D: one xor, one table lookup.
inline int fingerprint_distance(Fingerprint f1, Fingerprint f2, const Scheme&,
                                const ComparisonTables& tables) {
    return tables.distance(f1, f2);
}

/// Lower bound on the true number of errors: ceil(F_D / 2).
inline int lower_bound_errors(int fd, const ComparisonTables& tables) {
    return tables.ceil_half(fd);
}

/// True when the fingerprints alone prove the distance exceeds k.
inline bool can_reject(Fingerprint f1, Fingerprint f2, int k, const Scheme& scheme,
                       const ComparisonTables& tables) {
    return lower_bound_errors(fingerprint_distance(f1, f2, scheme, tables), tables) > k;
}

/// Canonical textual form: slot-0 field leftmost, fields space-separated
/// except for the occurrence variant whose 16 bits form one run.
inline std::string render(Fingerprint f, const Scheme& scheme) {
    std::string out;
    const std::size_t fields = scheme.field_count();
    for (std::size_t i = 0; i < fields; ++i) {
        if (i != 0 && scheme.variant() != Variant::Occurrence)
            out.push_back(' ');
        const unsigned w = scheme.field_width(i);
        const unsigned shift = scheme.field_shift(i);
        for (unsigned bit = 0; bit < w; ++bit)
            out.push_back((f.bits >> (shift + w - 1 - bit)) & 1 ? '1' : '0');
    }
    return out;
}

}  // namespace fingerprints
