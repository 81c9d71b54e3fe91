#include "cell24/pairing.hpp"

#include <algorithm>

namespace cell24 {

KPart KPart::from_char(char c) {
    int value;
    if (c >= '1' && c <= '9')
        value = c - '0';
    else if (c >= 'A' && c <= 'F')
        value = 10 + (c - 'A');
    else
        throw ParseError(ParseError::Kind::BadCharacter, 0,
                         std::string("bad code character '") + c + "'");
    KPart k;
    for (int i = 0; i < 4; ++i)
        if ((value >> i) & 1) k.diag[i] = -1;
    return k;
}

char KPart::to_char() const {
    int value = 0;
    for (int i = 0; i < 4; ++i)
        if (diag[i] < 0) value |= 1 << i;
    return value < 10 ? static_cast<char>('0' + value)
                      : static_cast<char>('A' + value - 10);
}

std::string KPart::to_string() const {
    std::string out = "k(";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ',';
        out += diag[i] > 0 ? "+1" : "-1";
    }
    out += ')';
    return out;
}

PairingScheme PairingScheme::parse(const std::string& code) {
    if (code.size() != 6)
        throw ParseError(ParseError::Kind::BadLength, 0,
                         "code must have exactly 6 characters, got " +
                             std::to_string(code.size()));

    PairingScheme scheme;
    scheme.code_ = code;

    for (int g = 0; g < kNumGroups; ++g) {
        KPart k;
        try {
            k = KPart::from_char(code[g]);
        } catch (ParseError& e) {
            throw ParseError(e.kind, g, std::string("bad code character '") +
                                            code[g] + "' at position " +
                                            std::to_string(g));
        }
        // A k-part acting trivially on the group's two nonzero positions
        // would pair every side of the group with itself.
        const auto [p, q] = kGroupSupport[g];
        if (k.diag[p] > 0 && k.diag[q] > 0)
            throw ParseError(ParseError::Kind::FixedSideCharacter, g,
                             std::string("character '") + code[g] +
                                 "' at position " + std::to_string(g) +
                                 " fixes every side of its group");

        // First letter pairs the (+1,+1) side with its k-image; the second
        // pairs the least unused side with the last remaining one, which for
        // an involutive fixed-point-free k is again its k-image.
        const SideIndex base = static_cast<SideIndex>(4 * g);
        std::array<bool, 4> used{};
        for (int which = 0; which < 2; ++which) {
            const LetterIndex letter = static_cast<LetterIndex>(2 * g + which);
            int d = 0;
            while (used[d]) ++d;
            const SideIndex dom = static_cast<SideIndex>(base + d);
            const SideIndex img = k.apply(dom);
            used[d] = true;
            used[img - base] = true;
            scheme.domain_[letter] = dom;
            scheme.image_[letter] = img;
            scheme.kpart_[letter] = k;
            scheme.side_letter_[dom] = letter;
            scheme.side_primed_[dom] = false;
            scheme.side_letter_[img] = letter;
            scheme.side_primed_[img] = true;
        }
    }
    return scheme;
}

PairingLetter PairingScheme::transformation_from(SideIndex s) const {
    return {side_letter_[s], side_primed_[s]};
}

SideIndex PairingScheme::apply_to_side(PairingLetter step, SideIndex t) const {
    const SideIndex src = step.inverse ? image_[step.letter] : domain_[step.letter];
    const SideIndex dst = step.inverse ? domain_[step.letter] : image_[step.letter];
    if (t == src) return dst;
    const SideIndex kt = kpart_[step.letter].apply(t);
    if (!sides_intersect(kt, dst))
        throw NotIncident(step.to_string() + " cannot act on " + side_to_string(t) +
                          ": " + side_to_string(kt) + " does not intersect " +
                          side_to_string(dst));
    return kt;
}

bool PairingScheme::orientable() const {
    for (LetterIndex l = 0; l < kNumLetters; ++l)
        if (orientation_character(l) < 0) return false;
    return true;
}

std::string PairingScheme::label(SideIndex s) const {
    std::string out(1, static_cast<char>('A' + side_letter_[s]));
    if (side_primed_[s]) out += '\'';
    return out;
}

std::optional<SideIndex> PairingScheme::side_for_label(const std::string& label) const {
    if (label.empty() || label[0] < 'A' || label[0] > 'L') return std::nullopt;
    const LetterIndex letter = static_cast<LetterIndex>(label[0] - 'A');
    if (label.size() == 1) return domain_[letter];
    if (label.size() == 2 && label[1] == '\'') return image_[letter];
    return std::nullopt;
}

}  // namespace cell24
