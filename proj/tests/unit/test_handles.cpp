#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <doctest.h>

#include "cell24/handles.hpp"
#include "golden.hpp"

using namespace cell24;
using golden::side_idx;

namespace {

PairingScheme m3() { return PairingScheme::parse("1477B8"); }
PairingScheme m1011() { return PairingScheme::parse("14FF28"); }

Ridge ridge_by_labels(const PairingScheme& s, const char* x, const char* y) {
    return Ridge(*s.side_for_label(x), *s.side_for_label(y));
}

Codim3Face face_by_labels(const PairingScheme& s, const golden::FaceTriple& t) {
    return Codim3Face(*s.side_for_label(t[0]), *s.side_for_label(t[1]),
                      *s.side_for_label(t[2]));
}

// Independent orbit oracle: closure of a ridge under every letter or inverse
// whose source side is one of its members (a transformation only moves faces
// lying on its source side), with no walk structure.
std::set<Ridge> bfs_orbit(const PairingScheme& scheme, Ridge start) {
    std::set<Ridge> seen{start};
    std::vector<Ridge> queue{start};
    while (!queue.empty()) {
        const Ridge r = queue.back();
        queue.pop_back();
        for (LetterIndex l = 0; l < kNumLetters; ++l) {
            for (bool inverse : {false, true}) {
                const PairingLetter step{l, inverse};
                const SideIndex src = inverse ? scheme.image(l) : scheme.domain(l);
                if (!r.contains(src)) continue;
                const Ridge img(scheme.apply_to_side(step, r.a),
                                scheme.apply_to_side(step, r.b));
                if (seen.insert(img).second) queue.push_back(img);
            }
        }
    }
    return seen;
}

// Canonical form of a face sequence modulo rotation, reversal and basepoint.
std::vector<Ridge> canonical_faces(std::vector<Ridge> faces) {
    std::vector<Ridge> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < faces.size(); ++shift) {
            std::vector<Ridge> cand(faces.begin() + shift, faces.end());
            cand.insert(cand.end(), faces.begin(), faces.begin() + shift);
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(faces.begin(), faces.end());
    }
    return best;
}

std::vector<Ridge> golden_cycle_faces(const PairingScheme& scheme,
                                      const golden::CycleRow& row) {
    std::vector<Ridge> faces;
    for (const auto& f : row.faces)
        faces.push_back(ridge_by_labels(scheme, f[0], f[1]));
    return faces;
}

std::vector<std::string> random_valid_codes(int want, unsigned seed) {
    const char alphabet[] = "123456789ABCDEF";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 14);
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < want) {
        std::string code;
        for (int i = 0; i < 6; ++i) code += alphabet[pick(rng)];
        try {
            const auto scheme = PairingScheme::parse(code);
            if (validate(scheme).valid) out.push_back(code);
        } catch (const ParseError&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("codimension-1 classes") {
    const auto scheme = m3();
    const auto classes = codim1_classes(scheme);
    CHECK(classes.size() == 12);
    CHECK(classes[0] == std::make_pair(side_idx("++00"), side_idx("-+00")));

    std::set<SideIndex> covered;
    for (const auto& [dom, img] : classes) {
        covered.insert(dom);
        covered.insert(img);
    }
    CHECK(covered.size() == 24);
}

TEST_CASE("ridge cycles on worked rows") {
    const auto scheme = m3();

    SUBCASE("A∩C acting on A") {
        const auto cyc = ridge_cycle(scheme, ridge_by_labels(scheme, "A", "C"),
                                     *scheme.side_for_label("A"));
        CHECK(cyc.closed);
        CHECK(cyc.to_string(scheme) ==
              "A∩C --a--> A'∩D --d--> A'∩D' --a^-1--> A∩C' --c^-1--> A∩C");
    }
    SUBCASE("C∩F' acting on C") {
        const auto cyc = ridge_cycle(scheme, ridge_by_labels(scheme, "C", "F'"),
                                     *scheme.side_for_label("C"));
        CHECK(cyc.to_string(scheme) ==
              "C∩F' --c--> C'∩E' --e^-1--> D∩E --d--> D'∩F --f--> C∩F'");
    }
    SUBCASE("code 14FF28, G∩I acting on G ends with i^-1") {
        const auto scheme2 = m1011();
        const auto cyc = ridge_cycle(scheme2, ridge_by_labels(scheme2, "G", "I"),
                                     *scheme2.side_for_label("G"));
        CHECK(cyc.steps[3].to_string() == "i^-1");
        CHECK(cyc.faces[3] == ridge_by_labels(scheme2, "G", "I'"));
    }
}

TEST_CASE("codimension-2 classes match the published tables") {
    const struct {
        const char* code;
        const std::vector<golden::CycleRow>& rows;
    } cases[] = {
        {"1477B8", golden::cycles_1477B8()},
        {"14FF28", golden::cycles_14FF28()},
    };
    for (const auto& c : cases) {
        CAPTURE(c.code);
        const auto scheme = PairingScheme::parse(c.code);

        // Published rows are internally consistent: each printed step maps
        // its face to the next (guards the transcription itself).
        for (const auto& row : c.rows) {
            const auto faces = golden_cycle_faces(scheme, row);
            for (int i = 0; i < 4; ++i) {
                const Ridge cur = faces[i];
                const Ridge next = faces[(i + 1) % 4];
                const std::string name = row.steps[i];
                const bool inverse = name.size() > 1;
                const PairingLetter step{static_cast<LetterIndex>(name[0] - 'a'),
                                         inverse};
                const Ridge img(scheme.apply_to_side(step, cur.a),
                                scheme.apply_to_side(step, cur.b));
                CHECK(img == next);
            }
        }

        const auto computed = codim2_classes(scheme);
        CHECK(computed.size() == 24);
        for (const auto& cycle : computed) {
            CHECK(cycle.closed);
            CHECK(cycle.length() == 4);
        }

        std::set<std::vector<Ridge>> mine, published;
        for (const auto& cycle : computed) mine.insert(canonical_faces(cycle.faces));
        for (const auto& row : c.rows)
            published.insert(canonical_faces(golden_cycle_faces(scheme, row)));
        CHECK(mine == published);
    }
}

TEST_CASE("cycle traversal is direction-independent up to reversal") {
    const auto scheme = m1011();
    for (const Ridge& r : all_ridges()) {
        const auto fwd = ridge_cycle(scheme, r, r.a);
        const auto rev = ridge_cycle(scheme, r, r.b);
        CHECK(canonical_faces(fwd.faces) == canonical_faces(rev.faces));
    }
}

TEST_CASE("codimension-3 classes") {
    SUBCASE("code 1477B8 equals the published twelve classes as sets") {
        const auto scheme = m3();
        const auto computed = codim3_classes(scheme);
        CHECK(computed.size() == 12);

        std::set<std::set<Codim3Face>> mine, published;
        for (const auto& orbit : computed) {
            CHECK(orbit.members.size() == 8);
            mine.insert(std::set<Codim3Face>(orbit.members.begin(), orbit.members.end()));
        }
        for (const auto& row : golden::codim3_1477B8()) {
            std::set<Codim3Face> faces;
            for (const auto& t : row) faces.insert(face_by_labels(scheme, t));
            CHECK(faces.size() == 8);  // transcription sanity
            published.insert(std::move(faces));
        }
        CHECK(mine == published);
    }
    SUBCASE("code 14FF28 has twelve classes of eight") {
        const auto computed = codim3_classes(m1011());
        CHECK(computed.size() == 12);
        for (const auto& orbit : computed) CHECK(orbit.members.size() == 8);
    }
    SUBCASE("display chains visit each member once") {
        for (const auto& orbit : codim3_classes(m3())) {
            CHECK(orbit.chain.size() == 8);
            CHECK(std::set<Codim3Face>(orbit.chain.begin(), orbit.chain.end()).size() == 8);
            CHECK(orbit.chain_steps.size() == 7);
        }
    }
}

TEST_CASE("summary") {
    for (const char* code : {"1477B8", "14FF28"}) {
        const auto s = summary(PairingScheme::parse(code));
        CHECK(s.h0 == 1);
        CHECK(s.h1 == 12);
        CHECK(s.h2 == 24);
        CHECK(s.h3 == 12);
        CHECK(s.h4 == 0);
        CHECK(s.euler == 1);
    }
    CHECK(summary(m3()).orientable);
    CHECK(!summary(m1011()).orientable);
}

TEST_CASE("validate accepts the two census codes") {
    CHECK(validate(m3()).valid);
    CHECK(validate(m1011()).valid);
}

TEST_CASE("validate rejects codes with broken ridge cycles") {
    // Found by scanning parseable codes with the brute-force orbit oracle.
    int rejected = 0;
    std::string example;
    const char alphabet[] = "123456789ABCDEF";
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(0, 14);
    for (int trial = 0; trial < 3000 && rejected < 5; ++trial) {
        std::string code;
        for (int i = 0; i < 6; ++i) code += alphabet[pick(rng)];
        try {
            const auto scheme = PairingScheme::parse(code);
            const auto report = validate(scheme);
            if (!report.valid) {
                ++rejected;
                example = code;
                CHECK(!report.failures.empty());
                CHECK(!report.failures.front().to_string(scheme).empty());
            }
        } catch (const ParseError&) {
        }
    }
    CHECK(rejected >= 5);

    // An invalid scheme makes the class computations throw.
    const auto bad = PairingScheme::parse(example);
    CHECK_THROWS_AS(
        [&] {
            codim2_classes(bad);
            codim3_classes(bad);
        }(),
        Error);
}

TEST_CASE("orbit oracle equivalence and partition on random valid codes") {
    auto codes = random_valid_codes(100, 20240812);
    codes.push_back("1477B8");
    codes.push_back("14FF28");
    for (const auto& code : codes) {
        CAPTURE(code);
        const auto scheme = PairingScheme::parse(code);

        // Cycle faces equal the breadth-first closure for every ridge.
        std::set<Ridge> covered;
        for (const Ridge& r : all_ridges()) {
            const auto cycle = ridge_cycle(scheme, r, r.a);
            const std::set<Ridge> walk(cycle.faces.begin(), cycle.faces.end());
            CHECK(walk == bfs_orbit(scheme, r));
            covered.insert(walk.begin(), walk.end());
        }
        CHECK(covered.size() == 96);

        // Classes partition the ridges and the codimension-3 faces.
        const auto c2 = codim2_classes(scheme);
        CHECK(c2.size() == 24);
        std::set<Ridge> seen2;
        for (const auto& cycle : c2)
            for (const Ridge& f : cycle.faces) CHECK(seen2.insert(f).second);
        CHECK(seen2.size() == 96);

        const auto c3 = codim3_classes(scheme);
        CHECK(c3.size() == 12);
        std::set<Codim3Face> seen3;
        for (const auto& orbit : c3)
            for (const Codim3Face& f : orbit.members) CHECK(seen3.insert(f).second);
        CHECK(seen3.size() == 96);

        CHECK(summary(scheme).euler == 1);
    }
}
