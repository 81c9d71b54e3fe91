#include "cell24/report.hpp"

#include <cmath>
#include <cstdio>

namespace cell24 {

double json_num(double x) {
    const double r = std::round(x * 1e6) / 1e6;
    return r == 0 ? 0 : r;  // normalise -0
}

Json json_vec(const Vec3& v) {
    return Json::array({json_num(v.x), json_num(v.y), json_num(v.z)});
}

Json json_vec(const Vec3E& v) {
    return json_vec(to_vec3(v));
}

namespace {

Json json_side(const PairingScheme& scheme, SideIndex s) {
    return Json{{"side", side_to_string(s)}, {"label", scheme.label(s)}};
}

Json json_steps(const std::vector<PairingLetter>& steps) {
    Json arr = Json::array();
    for (const PairingLetter& p : steps) arr.push_back(p.to_string());
    return arr;
}

Json json_ridge_faces(const PairingScheme& scheme, const std::vector<Ridge>& faces) {
    Json arr = Json::array();
    for (const Ridge& f : faces) arr.push_back(labeled_face(scheme, f));
    return arr;
}

}  // namespace

Json decode_report(const PairingScheme& scheme) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["code"] = scheme.code();
    Json rows = Json::array();
    for (LetterIndex l = 0; l < kNumLetters; ++l) {
        rows.push_back(Json{
            {"letter", std::string(1, letter_char(l))},
            {"domain", side_to_string(scheme.domain(l))},
            {"image", side_to_string(scheme.image(l))},
            {"k", scheme.kpart(l).to_string()},
            {"orientation_character", scheme.orientation_character(l)},
        });
    }
    j["pairings"] = std::move(rows);
    j["orientable"] = scheme.orientable();
    return j;
}

std::string decode_text(const PairingScheme& scheme) {
    std::string out = "code " + scheme.code() + "\n";
    for (LetterIndex l = 0; l < kNumLetters; ++l) {
        out += std::string(1, letter_char(l)) + ": " +
               side_to_string(scheme.domain(l)) + " -> " +
               side_to_string(scheme.image(l)) + ", " +
               scheme.kpart(l).to_string() + "\n";
    }
    out += std::string("orientable: ") + (scheme.orientable() ? "yes" : "no") + "\n";
    return out;
}

Json validity_json(const PairingScheme& scheme, const ValidityReport& report) {
    Json j;
    j["valid"] = report.valid;
    Json failures = Json::array();
    for (const ValidityFailure& f : report.failures)
        failures.push_back(f.to_string(scheme));
    j["failures"] = std::move(failures);
    j["note"] = "necessary conditions only: 4-step ridge cycles and size-8 "
                "codimension-3 orbits";
    return j;
}

Json handles_report(const PairingScheme& scheme) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["code"] = scheme.code();

    const HandleSummary s = summary(scheme);
    j["handles"] = Json{{"h0", s.h0}, {"h1", s.h1}, {"h2", s.h2},
                        {"h3", s.h3}, {"h4", s.h4}, {"euler", s.euler}};
    j["orientable"] = s.orientable;

    Json c1 = Json::array();
    for (LetterIndex l = 0; l < kNumLetters; ++l) {
        c1.push_back(Json{
            {"letter", std::string(1, letter_char(l))},
            {"domain", json_side(scheme, scheme.domain(l))},
            {"image", json_side(scheme, scheme.image(l))},
            {"k", scheme.kpart(l).to_string()},
        });
    }
    j["codim1_classes"] = std::move(c1);

    const BallLayout layout = ball_layout(scheme);
    const auto cycles = codim2_classes(scheme);
    Json c2 = Json::array();
    Json planes{{"xy", Json::array()}, {"xz", Json::array()},
                {"yz", Json::array()}, {"special", Json::array()}};
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const PlaneClass plane = classify_plane(cycles[i], layout);
        c2.push_back(Json{
            {"index", i},
            {"plane", plane_class_name(plane)},
            {"faces", json_ridge_faces(scheme, cycles[i].faces)},
            {"steps", json_steps(cycles[i].steps)},
        });
        planes[plane_class_name(plane)].push_back(i);
    }
    j["codim2_classes"] = std::move(c2);
    j["planes"] = std::move(planes);

    Json c3 = Json::array();
    for (const FaceOrbit& orbit : codim3_classes(scheme)) {
        Json members = Json::array();
        for (const Codim3Face& f : orbit.members)
            members.push_back(labeled_face(scheme, f));
        Json chain = Json::array();
        for (const Codim3Face& f : orbit.chain)
            chain.push_back(labeled_face(scheme, f));
        c3.push_back(Json{
            {"members", std::move(members)},
            {"chain", std::move(chain)},
            {"chain_steps", json_steps(orbit.chain_steps)},
        });
    }
    j["codim3_classes"] = std::move(c3);

    Json balls = Json::array();
    for (SideIndex i = 0; i < kNumSides; ++i) {
        Json exact = Json::array();
        for (int c = 0; c < 3; ++c) exact.push_back(layout.centers[i][c].to_string());
        balls.push_back(Json{
            {"side", side_to_string(i)},
            {"label", scheme.label(i)},
            {"center", json_vec(layout.centers[i])},
            {"center_exact", std::move(exact)},
        });
    }
    j["balls"] = std::move(balls);
    return j;
}

Json framing_report(const PairingScheme& scheme, const FramingCertificate& cert) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["code"] = scheme.code();
    j["criterion"] = FramingCertificate::criterion();
    j["certified"] = cert.certified;
    Json cycles = Json::array();
    for (const CycleCertificate& cc : cert.cycles) {
        Json lines = Json::array();
        for (const LineVerdict& v : cc.lines) {
            Json tags = Json::array();
            for (SideTag t : v.tags) tags.push_back(side_tag_name(t));
            lines.push_back(Json{
                {"initial", side_tag_name(v.initial)},
                {"tags", std::move(tags)},
                {"closed", v.closed},
                {"sign", v.sign},
                {"degenerate", v.degenerate},
            });
        }
        cycles.push_back(Json{
            {"cycle", cc.name},
            {"plane", plane_class_name(cc.plane)},
            {"certified", cc.certified},
            {"lines", std::move(lines)},
        });
    }
    j["cycles"] = std::move(cycles);
    return j;
}

Json full_report(const PairingScheme& scheme) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["code"] = scheme.code();
    const ValidityReport validity = validate(scheme);
    j["validity"] = validity_json(scheme, validity);
    if (!validity.valid) return j;

    Json h = handles_report(scheme);
    for (auto it = h.begin(); it != h.end(); ++it)
        if (it.key() != "schema" && it.key() != "code") j[it.key()] = it.value();

    const FramingCertificate cert = planar_framing_certificate(scheme);
    Json f = framing_report(scheme, cert);
    j["framing"] = Json{{"criterion", f["criterion"]},
                        {"certified", f["certified"]},
                        {"cycles", f["cycles"]}};
    return j;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace cell24
