#include <random>
#include <set>

#include <doctest.h>

#include "cell24/pairing.hpp"
#include "golden.hpp"

using namespace cell24;
using golden::side_idx;

namespace {

const char kAlphabet[] = "123456789ABCDEF";

PairingScheme m3() { return PairingScheme::parse("1477B8"); }
PairingScheme m1011() { return PairingScheme::parse("14FF28"); }

KPart kpart_of(const std::array<int, 4>& diag) {
    KPart k;
    for (int i = 0; i < 4; ++i) k.diag[i] = static_cast<int8_t>(diag[i]);
    return k;
}

}  // namespace

TEST_CASE("character table decodes as the bitmask of reflections") {
    CHECK(KPart::from_char('1').diag == std::array<int8_t, 4>{-1, +1, +1, +1});
    CHECK(KPart::from_char('4').diag == std::array<int8_t, 4>{+1, +1, -1, +1});
    CHECK(KPart::from_char('8').diag == std::array<int8_t, 4>{+1, +1, +1, -1});
    CHECK(KPart::from_char('B').diag == std::array<int8_t, 4>{-1, -1, +1, -1});
    CHECK(KPart::from_char('F').diag == std::array<int8_t, 4>{-1, -1, -1, -1});
    CHECK_THROWS_AS(KPart::from_char('0'), ParseError);
    CHECK_THROWS_AS(KPart::from_char('G'), ParseError);
    for (char c : std::string(kAlphabet)) CHECK(KPart::from_char(c).to_char() == c);
}

TEST_CASE("decoding 1428BD reproduces the worked example") {
    const auto scheme = PairingScheme::parse("1428BD");
    CHECK(scheme.kpart(0) == kpart_of({-1, +1, +1, +1}));  // a
    CHECK(scheme.kpart(2) == kpart_of({+1, +1, -1, +1}));  // c
    CHECK(scheme.domain(0) == side_idx("++00"));
    CHECK(scheme.image(0) == side_idx("-+00"));
    CHECK(scheme.domain(9) == side_idx("0+0-"));  // j
    CHECK(scheme.image(9) == side_idx("0-0+"));
    CHECK(scheme.domain(11) == side_idx("00+-"));  // l
    CHECK(scheme.image(11) == side_idx("00-+"));
}

TEST_CASE("golden pairing listings decode exactly") {
    const struct {
        const char* code;
        const std::vector<golden::PairingRow>& rows;
    } cases[] = {
        {"1477B8", golden::pairings_1477B8()},
        {"14FF28", golden::pairings_14FF28()},
    };
    for (const auto& c : cases) {
        CAPTURE(c.code);
        const auto scheme = PairingScheme::parse(c.code);
        for (const auto& row : c.rows) {
            const LetterIndex l = static_cast<LetterIndex>(row.letter - 'a');
            CHECK(scheme.domain(l) == side_idx(row.domain));
            CHECK(scheme.image(l) == side_idx(row.image));
            CHECK(scheme.kpart(l) == kpart_of(row.k));
        }
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(PairingScheme::parse("1477B"), ParseError);
    CHECK_THROWS_AS(PairingScheme::parse("1477B88"), ParseError);
    CHECK_THROWS_AS(PairingScheme::parse("1477BG"), ParseError);
    CHECK_THROWS_AS(PairingScheme::parse("1477bd"), ParseError);  // case sensitive

    try {
        PairingScheme::parse("1477BG");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::BadCharacter);
        CHECK(e.position == 5);
    }

    // '8' in a group supported away from coordinate 4 is fine, but '8' as
    // first character fixes every side of group {0,1}.
    try {
        PairingScheme::parse("8477B8");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::FixedSideCharacter);
        CHECK(e.position == 0);
    }
    // '3' = k(-1,-1,+1,+1) acts trivially on positions {2,3}: bad as the
    // last character.
    CHECK_THROWS_AS(PairingScheme::parse("1477B3"), ParseError);
}

TEST_CASE("every six-character string has exactly one documented outcome") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> pick(0, 14);
    int ok = 0, fixed = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::string code;
        for (int i = 0; i < 6; ++i) code += kAlphabet[pick(rng)];
        try {
            const auto scheme = PairingScheme::parse(code);
            CHECK(scheme.code() == code);
            ++ok;
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::FixedSideCharacter);
            ++fixed;
        }
    }
    CHECK(ok + fixed == 20000);
    CHECK(ok > 0);
    CHECK(fixed > 0);
}

TEST_CASE("apply_to_side on the worked faces") {
    const auto scheme = m3();
    const LetterIndex a = 0, d = 3, e = 4;
    // a carries C to D
    CHECK(scheme.apply_to_side({a, false}, side_idx("+0+0")) == side_idx("-0+0"));
    // d fixes A'
    CHECK(scheme.apply_to_side({d, false}, side_idx("-+00")) == side_idx("-+00"));
    // e carries A' to B
    CHECK(scheme.apply_to_side({e, false}, side_idx("-+00")) == side_idx("+-00"));
    // domain maps to image, image back to domain under the inverse
    CHECK(scheme.apply_to_side({a, false}, scheme.domain(a)) == scheme.image(a));
    CHECK(scheme.apply_to_side({a, true}, scheme.image(a)) == scheme.domain(a));

    // acting on a side that misses the target entirely
    CHECK_THROWS_AS(scheme.apply_to_side({a, false}, side_idx("00++")), NotIncident);
    CHECK_THROWS_AS(scheme.apply_to_side({a, false}, scheme.image(a)), NotIncident);
}

TEST_CASE("letter then inverse is the identity wherever defined") {
    for (const char* code : {"1477B8", "14FF28", "1428BD"}) {
        const auto scheme = PairingScheme::parse(code);
        for (LetterIndex l = 0; l < kNumLetters; ++l) {
            for (SideIndex t = 0; t < kNumSides; ++t) {
                SideIndex mid;
                try {
                    mid = scheme.apply_to_side({l, false}, t);
                } catch (const NotIncident&) {
                    continue;
                }
                CHECK(scheme.apply_to_side({l, true}, mid) == t);
            }
        }
    }
}

TEST_CASE("label map is a bijection onto A..L and primes") {
    const auto scheme = m1011();
    std::set<std::string> labels;
    for (SideIndex s = 0; s < kNumSides; ++s) labels.insert(scheme.label(s));
    CHECK(labels.size() == 24);
    for (char c = 'A'; c <= 'L'; ++c) {
        CHECK(labels.count(std::string(1, c)) == 1);
        CHECK(labels.count(std::string(1, c) + "'") == 1);
    }
    for (SideIndex s = 0; s < kNumSides; ++s)
        CHECK(*scheme.side_for_label(scheme.label(s)) == s);
    CHECK(!scheme.side_for_label("M").has_value());
    CHECK(!scheme.side_for_label("").has_value());
}

TEST_CASE("the misprinted coordinate-table labels resolve by the pairing rule") {
    // The 1477B8 coordinate table swaps G'/H' and I'/J'; the cycle tables and
    // the labelling rule give:
    const auto scheme = m3();
    CHECK(scheme.label(side_idx("-00+")) == "G'");
    CHECK(scheme.label(side_idx("-00-")) == "H'");
    CHECK(scheme.label(side_idx("0-0-")) == "I'");
    CHECK(scheme.label(side_idx("0-0+")) == "J'");
    // The 14FF28 table follows the rule as printed.
    const auto scheme2 = m1011();
    CHECK(scheme2.label(side_idx("-00+")) == "H'");
    CHECK(scheme2.label(side_idx("-00-")) == "G'");
}

TEST_CASE("orientation characters") {
    const auto scheme = m3();
    CHECK(scheme.orientation_character(0) == +1);  // a, k(-1,+1,+1,+1)
    const auto scheme2 = m1011();
    CHECK(scheme2.orientation_character(4) == -1);  // e, k(-1,-1,-1,-1)
    // A single reflection: identity-like k has character -1. The parser
    // rejects such codes, so probe the k-part arithmetic directly.
    KPart identity_k;
    CHECK(-identity_k.det() == -1);

    CHECK(m3().orientable());
    CHECK(!m1011().orientable());
}

TEST_CASE("serialize round-trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 14);
    int seen = 0;
    while (seen < 50) {
        std::string code;
        for (int i = 0; i < 6; ++i) code += kAlphabet[pick(rng)];
        try {
            const auto scheme = PairingScheme::parse(code);
            ++seen;
            std::string rebuilt;
            for (int g = 0; g < kNumGroups; ++g)
                rebuilt += scheme.kpart(static_cast<LetterIndex>(2 * g)).to_char();
            CHECK(rebuilt == code);
        } catch (const ParseError&) {
        }
    }
}
