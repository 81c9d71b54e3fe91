#ifndef CELL24_PAIRING_HPP
#define CELL24_PAIRING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cell24/cell.hpp"

namespace cell24 {

/// The k-part of a side pairing: a diagonal +-1 involution of R^4,
/// a composition of reflections in the coordinate hyperplanes x_i = 0.
/// Decoded from one character in 1..9, A..F (value = bitmask of -1 entries).
struct KPart {
    std::array<int8_t, 4> diag{+1, +1, +1, +1};

    static KPart from_char(char c);  // throws ParseError::BadCharacter
    char to_char() const;

    SideVector apply(const SideVector& v) const {
        SideVector r;
        for (int i = 0; i < 4; ++i) r.s[i] = static_cast<int8_t>(diag[i] * v.s[i]);
        return r;
    }
    SideIndex apply(SideIndex i) const { return side_index(apply(side_vector(i))); }

    /// Determinant, the parity of -1 entries.
    int det() const { return diag[0] * diag[1] * diag[2] * diag[3]; }

    bool operator==(const KPart&) const = default;

    std::string to_string() const;  // "k(-1,+1,+1,+1)"
};

using LetterIndex = uint8_t;  // 0..11 for a..l
inline constexpr int kNumLetters = 12;

inline char letter_char(LetterIndex i) { return static_cast<char>('a' + i); }

/// One of the twelve pairing transformations, possibly inverted.
struct PairingLetter {
    LetterIndex letter = 0;
    bool inverse = false;

    bool operator==(const PairingLetter&) const = default;

    std::string to_string() const {  // "a" or "a^-1"
        std::string s(1, letter_char(letter));
        if (inverse) s += "^-1";
        return s;
    }
};

/// The decoded content of a six-character side-pairing code: for each letter
/// its source side, target side and k-part, plus the per-scheme labelling of
/// the 24 sides by A..L (source sides) and A'..L' (target sides).
///
/// Immutable after parse_code(); safe to share freely.
class PairingScheme {
public:
    /// Decode a code string. Characters are case-sensitive, drawn from
    /// 1..9, A..F exactly as printed in census tables.
    ///
    /// Throws ParseError with kind BadLength, BadCharacter, or
    /// FixedSideCharacter (a character whose k-part restricted to its group's
    /// two nonzero positions is (+1,+1) would pair a side with itself,
    /// contradicting two-element codimension-1 classes).
    static PairingScheme parse(const std::string& code);

    const std::string& code() const { return code_; }

    SideIndex domain(LetterIndex l) const { return domain_[l]; }
    SideIndex image(LetterIndex l) const { return image_[l]; }
    const KPart& kpart(LetterIndex l) const { return kpart_[l]; }

    /// The unique transformation whose source is this side: the letter itself
    /// for a domain side, the inverted letter for an image side.
    PairingLetter transformation_from(SideIndex s) const;

    /// Combinatorial action of a letter (or inverse) on one side.
    ///
    /// The source side maps to the target side. Any other side t maps to
    /// k(t), valid when k(t) intersects the target side; the reflection part
    /// fixes every side orthogonal to the target, so it drops out. Throws
    /// NotIncident otherwise.
    SideIndex apply_to_side(PairingLetter step, SideIndex t) const;

    /// +1 iff the side pairing r*k is orientation preserving on H^4,
    /// computed as det(r)*det(k) = -det(k).
    int orientation_character(LetterIndex l) const { return -kpart_[l].det(); }

    /// True iff every letter is orientation preserving.
    bool orientable() const;

    /// Display label of a side under this scheme: "A".."L" for domains,
    /// "A'".."L'" for images.
    std::string label(SideIndex s) const;
    /// Inverse of label(); nullopt for strings that are not labels.
    std::optional<SideIndex> side_for_label(const std::string& label) const;

    /// Letter owning this side and whether the side is the primed (image) one.
    std::pair<LetterIndex, bool> letter_for_side(SideIndex s) const {
        return {side_letter_[s], side_primed_[s]};
    }

private:
    PairingScheme() = default;

    std::string code_;
    std::array<SideIndex, kNumLetters> domain_{};
    std::array<SideIndex, kNumLetters> image_{};
    std::array<KPart, kNumLetters> kpart_{};
    std::array<LetterIndex, kNumSides> side_letter_{};
    std::array<bool, kNumSides> side_primed_{};
};

}  // namespace cell24

#endif
