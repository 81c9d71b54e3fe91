#ifndef CELL24_FRAMING_HPP
#define CELL24_FRAMING_HPP

#include <array>
#include <string>
#include <vector>

#include "cell24/geometry.hpp"

namespace cell24 {

/// A self-map of R^3 u {oo} written over the generators Rx, Ry, Rz
/// (coordinate-plane reflections), Inv (inversion in the unit sphere) and
/// Ant (the antipodal map, = Rx Ry Rz). All generators commute here and are
/// involutions, so every word reduces to the normal form
///     (subset of {Rx, Ry, Rz}) o (Inv or empty)
/// with Ant standing in for the full reflection triple.
struct MobiusWord {
    std::array<bool, 3> flip{};  // reflect x, y, z
    bool inv = false;

    static MobiusWord identity() { return {}; }
    static MobiusWord reflection(int axis) {
        MobiusWord w;
        w.flip[axis] = true;
        return w;
    }
    static MobiusWord inversion() { return {{}, true}; }
    static MobiusWord antipodal() { return {{true, true, true}, false}; }

    MobiusWord compose(const MobiusWord& o) const {
        MobiusWord w;
        for (int i = 0; i < 3; ++i) w.flip[i] = flip[i] != o.flip[i];
        w.inv = inv != o.inv;
        return w;
    }
    bool is_identity() const { return !flip[0] && !flip[1] && !flip[2] && !inv; }
    bool is_involution() const { return true; }  // all normal forms square to id

    bool operator==(const MobiusWord&) const = default;

    /// Normal form, e.g. "Rx", "Ant∘Inv", "Rx∘Ry∘Inv", "id".
    std::string normal_form() const;
    /// Pointwise formula, e.g. "(x,y,z) -> (-x,y,z)".
    std::string formula() const;
};

/// The diffeomorphism identifying the two attaching balls of a 1-handle,
/// the k-part conjugated through stereographic projection: a reflection
/// Rx/Ry/Rz for each -1 among k1..k3 and Inv for k4 = -1.
MobiusWord attaching_map(const KPart& k);

/// Exact evaluation; 0 and infinity swap under Inv.
DiagramPoint evaluate(const MobiusWord& w, const DiagramPoint& p);
Vec3 evaluate(const MobiusWord& w, const Vec3& p);

struct Sphere {
    Vec3E center;
    QSqrt2 radius;
};

/// Exact image of a sphere. Reflections preserve the radius; inversion maps
/// center c, radius rho to c/(|c|^2 - rho^2), rho/||c|^2 - rho^2|. Throws
/// SphereThroughPole when the sphere passes through the origin.
Sphere sphere_image(const MobiusWord& w, const Sphere& s);

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
};

/// Derivative of the word at a finite point: reflections contribute their
/// own matrices, Inv contributes (I - 2 p̂ p̂ᵀ)/|p|^2. Throws PoleDifferential
/// at the origin when Inv is present.
Mat3 differential(const MobiusWord& w, const Vec3& p);

/// Which side of the handle curve the parallel curve sits on. Above/below is
/// the sign along the panel's transverse axis (global z for special cycles,
/// the plane normal for planar ones); in-plane left/right is the sign along
/// travel-direction x normal within the cycle's plane (planar cycles only).
enum class SideTag { Above, Below, InPlaneRight, InPlaneLeft };

std::string side_tag_name(SideTag t);

enum class AttachmentConvention {
    SegmentSphere,  // entry where the centre-to-centre segment meets the sphere
    AxisAligned,    // schematic entry on the dominant coordinate axis
};

enum class TransportMethod {
    OffsetPoint,   // map an offset point alongside the handle point
    Differential,  // push the offset direction by the derivative
};

struct TraceOptions {
    double epsilon_fraction = 0.125;  // offset = fraction * radius
    AttachmentConvention convention = AttachmentConvention::SegmentSphere;
    TransportMethod method = TransportMethod::OffsetPoint;
};

struct TraceStep {
    Ridge face;         // face whose segment was travelled
    SideIndex through;  // ball the curve entered at the segment's end
    Vec3 entry;         // attachment point entering the ball
    Vec3 exit;          // its image under the identifying map
    Vec3 offset;        // re-projected transverse offset direction (unit)
    SideTag tag;        // recorded side after the transit
};

struct FramingTrace {
    SideTag initial = SideTag::Below;
    PlaneClass plane = PlaneClass::SPECIAL;
    std::vector<TraceStep> steps;
    bool closed = false;    // final side equals the initial one
    int holonomy_sign = 0;  // +1 closed, -1 returned on the opposite side
};

/// Follow a curve parallel to a 2-handle once around its cycle.
///
/// Along each straight segment the offset is carried unchanged (Euclidean
/// transport). At each 1-handle both the attachment point and the offset
/// point beside it map through the identifying word; the image offset is
/// re-projected transverse to the next segment and classified back onto the
/// tracked transverse line by its sign. Throws OffsetDegenerate when a sign
/// cannot be read.
///
/// The traversal follows the cycle as given: segment i of cycle.faces[i] is
/// travelled toward the ball of cycle.acted[i].
FramingTrace trace_parallel(const PairingScheme& scheme, const HandleCycle& cycle,
                            const BallLayout& layout, SideTag initial,
                            const TraceOptions& options = {});

struct LineVerdict {
    SideTag initial;
    SideTag final;
    std::vector<SideTag> tags;
    bool closed = false;
    int sign = 0;
    bool degenerate = false;
};

struct CycleCertificate {
    std::string name;  // labelled base face
    PlaneClass plane = PlaneClass::SPECIAL;
    std::vector<LineVerdict> lines;  // transverse-axis line, plus in-plane for planar
    bool certified = false;
};

struct FramingCertificate {
    std::string code;
    bool certified = false;
    std::vector<CycleCertificate> cycles;
    /// The criterion being certified, spelled out for report readers.
    static const char* criterion() {
        return "every transported transverse line returns to itself with the "
               "parallel loop closing on its starting side";
    }
};

/// Certify the framing of every 2-handle: each canonical cycle's transverse
/// line (and, for planar cycles, the in-plane line) must be preserved with
/// the loop closing on its starting side.
FramingCertificate planar_framing_certificate(const PairingScheme& scheme,
                                              const Rational& radius = Rational(1, 8),
                                              const TraceOptions& options = {});

}  // namespace cell24

#endif
