#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cell24/census.hpp"
#include "cell24/report.hpp"

namespace {

// Exit codes: 0 success, 2 parse/usage error, 3 validity failure, 4 I/O.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitIo = 4;

cell24::PairingScheme parse_or_exit(const std::string& code) {
    try {
        return cell24::PairingScheme::parse(code);
    } catch (const cell24::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cell24::IoError("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw cell24::IoError("failed writing " + path.string());
}

cell24::Rational parse_rational(const std::string& text) {
    try {
        cell24::Rational r(text);
        return r;
    } catch (...) {
        std::cerr << "error: bad rational '" << text << "'\n";
        std::exit(kExitParse);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using cell24::Json;

    CLI::App app{"Kirby diagram toolkit for 24-cell side-pairing codes"};
    app.require_subcommand(1);

    std::string code;
    bool as_json = false;

    auto* decode = app.add_subcommand(
        "decode", "Decode a code into its twelve side pairings");
    decode->add_option("code", code)->required();
    decode->add_flag("--json", as_json, "emit JSON instead of text");

    auto* handles = app.add_subcommand(
        "handles", "Handle decomposition: counts, cycles, orbits, plane split");
    handles->add_option("code", code)->required();

    auto* validate_cmd = app.add_subcommand(
        "validate", "Check the ridge-cycle and orbit-size conditions");
    validate_cmd->add_option("code", code)->required();

    auto* framing = app.add_subcommand(
        "framing", "Certify the planar framing of every 2-handle");
    framing->add_option("code", code)->required();

    std::string plane = "all";
    std::string out_dir = ".";
    std::string radius_text = "1/8";
    std::vector<double> view{1, 1, 1};
    auto* diagram = app.add_subcommand("diagram", "Write SVG diagram panels");
    diagram->add_option("code", code)->required();
    diagram->add_option("--plane", plane, "xy, xz, yz, special, or all")
        ->check(CLI::IsMember({"xy", "xz", "yz", "special", "all"}));
    diagram->add_option("--out", out_dir, "output directory");
    diagram->add_option("--radius", radius_text, "ball radius as a rational");
    diagram->add_option("--view", view, "view direction for the special panel")
        ->expected(3);

    std::string census_file;
    std::string census_out;
    auto* census = app.add_subcommand("census", "Batch-process a file of codes");
    census->add_option("file", census_file)->required();
    census->add_option("--out", census_out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (decode->parsed()) {
            const auto scheme = parse_or_exit(code);
            if (as_json)
                std::cout << cell24::dump_json(cell24::decode_report(scheme));
            else
                std::cout << cell24::decode_text(scheme);
            return kExitOk;
        }

        if (handles->parsed()) {
            const auto scheme = parse_or_exit(code);
            const auto validity = cell24::validate(scheme);
            if (!validity.valid) {
                Json j;
                j["schema"] = cell24::kSchemaVersion;
                j["code"] = scheme.code();
                j["validity"] = cell24::validity_json(scheme, validity);
                std::cout << cell24::dump_json(j);
                return kExitInvalid;
            }
            std::cout << cell24::dump_json(cell24::handles_report(scheme));
            return kExitOk;
        }

        if (validate_cmd->parsed()) {
            const auto scheme = parse_or_exit(code);
            const auto validity = cell24::validate(scheme);
            Json j;
            j["schema"] = cell24::kSchemaVersion;
            j["code"] = scheme.code();
            j["validity"] = cell24::validity_json(scheme, validity);
            std::cout << cell24::dump_json(j);
            return validity.valid ? kExitOk : kExitInvalid;
        }

        if (framing->parsed()) {
            const auto scheme = parse_or_exit(code);
            const auto validity = cell24::validate(scheme);
            if (!validity.valid) {
                Json j;
                j["schema"] = cell24::kSchemaVersion;
                j["code"] = scheme.code();
                j["validity"] = cell24::validity_json(scheme, validity);
                std::cout << cell24::dump_json(j);
                return kExitInvalid;
            }
            const auto cert = cell24::planar_framing_certificate(scheme);
            std::cout << cell24::dump_json(cell24::framing_report(scheme, cert));
            return kExitOk;
        }

        if (diagram->parsed()) {
            const auto scheme = parse_or_exit(code);
            const cell24::Rational radius = parse_rational(radius_text);
            // Keep the balls disjoint: 2r below the minimal centre distance.
            if (radius <= 0 || cell24::QSqrt2(4 * radius * radius) >=
                                   cell24::QSqrt2(2) - cell24::QSqrt2::sqrt2()) {
                std::cerr << "error: radius out of range\n";
                return kExitParse;
            }
            const auto validity = cell24::validate(scheme);
            if (!validity.valid) {
                std::cerr << "error: " << validity.failures.front().to_string(scheme)
                          << "\n";
                return kExitInvalid;
            }
            const auto layout = cell24::ball_layout(scheme, radius);
            cell24::RenderOptions options;
            options.view_dir = {view[0], view[1], view[2]};
            std::vector<cell24::PlaneClass> planes;
            if (plane == "all")
                planes = {cell24::PlaneClass::XY, cell24::PlaneClass::XZ,
                          cell24::PlaneClass::YZ, cell24::PlaneClass::SPECIAL};
            else if (plane == "xy")
                planes = {cell24::PlaneClass::XY};
            else if (plane == "xz")
                planes = {cell24::PlaneClass::XZ};
            else if (plane == "yz")
                planes = {cell24::PlaneClass::YZ};
            else
                planes = {cell24::PlaneClass::SPECIAL};
            for (cell24::PlaneClass p : planes) {
                const auto scene = cell24::plane_scene(scheme, layout, p);
                const std::filesystem::path path =
                    std::filesystem::path(out_dir) /
                    (code + "-" + cell24::plane_class_name(p) + ".svg");
                write_file(path, cell24::render_svg(scene, options));
                std::cout << path.string() << "\n";
            }
            return kExitOk;
        }

        if (census->parsed()) {
            std::ifstream in(census_file, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read " << census_file << "\n";
                return kExitParse;
            }
            const auto entries = cell24::parse_census(in);
            const std::string text = cell24::dump_json(cell24::census_report(entries));
            if (census_out.empty())
                std::cout << text;
            else
                write_file(census_out, text);
            return kExitOk;
        }
    } catch (const cell24::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const cell24::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
