#ifndef CELL24_REPORT_HPP
#define CELL24_REPORT_HPP

#include <string>

#include <json.hpp>

#include "cell24/framing.hpp"

namespace cell24 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "cell24-kirby/1";

/// Doubles in serialized output are fixed to 6 decimal digits.
double json_num(double x);
Json json_vec(const Vec3& v);
Json json_vec(const Vec3E& v);

/// Pairing listing, one row per letter.
Json decode_report(const PairingScheme& scheme);
std::string decode_text(const PairingScheme& scheme);

Json validity_json(const PairingScheme& scheme, const ValidityReport& report);

/// Handle structure: summary, codimension 1/2/3 classes, plane split, balls.
Json handles_report(const PairingScheme& scheme);

Json framing_report(const PairingScheme& scheme, const FramingCertificate& cert);

/// The full per-code record used by the census command: validity, summary,
/// orientability, cycles, plane classification and framing certificate.
Json full_report(const PairingScheme& scheme);

/// Deterministic serialization used by the CLI (2-space indent, '\n' at end).
std::string dump_json(const Json& j);

}  // namespace cell24

#endif
