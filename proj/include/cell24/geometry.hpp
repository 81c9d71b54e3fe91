#ifndef CELL24_GEOMETRY_HPP
#define CELL24_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cell24/handles.hpp"

namespace cell24 {

/// A point of R^3 together with the point at infinity; finite points are
/// exact in Q(sqrt 2).
struct DiagramPoint {
    bool infinite = false;
    Vec3E p;

    static DiagramPoint infinity() { return {true, {}}; }
    static DiagramPoint finite(Vec3E v) { return {false, std::move(v)}; }

    bool operator==(const DiagramPoint& o) const {
        return infinite == o.infinite && (infinite || p == o.p);
    }
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 to_vec3(const Vec3E& v);

/// Radial projection of a side's centre tuple to the unit 3-sphere. The
/// tuples have squared norm 2, so components land in {0, +-1/sqrt 2}.
Vec4E radial_project(const SideVector& s);

/// The sphere-to-space map (x1,x2,x3,x4) |-> (0,0,0,1) +
/// 2/(x1^2+x2^2+x3^2+(x4-1)^2) * (x1,x2,x3,x4-1), restricted to |x| = 1 and
/// with the vanishing last coordinate dropped: equal to (x1,x2,x3)/(1-x4).
/// The pole (0,0,0,1) maps to infinity.
DiagramPoint mobius_phi(const Vec4E& x);

/// Same map by the closed form; kept separate so the two routes can be
/// checked against each other.
DiagramPoint mobius_phi_closed_form(const Vec4E& x);

/// Placement of the 24 diagram balls. Centres are the fixed exact images of
/// the side centres; labels come from the scheme; the radius is a render
/// parameter (rational, default 1/8).
struct BallLayout {
    std::array<Vec3E, kNumSides> centers;
    std::array<std::string, kNumSides> labels;
    QSqrt2 radius;
};

BallLayout ball_layout(const PairingScheme& scheme, const Rational& radius = Rational(1, 8));

/// The exact centre of one ball, independent of any scheme.
const Vec3E& ball_center(SideIndex s);

enum class PlaneClass { XY, XZ, YZ, SPECIAL };

std::string plane_class_name(PlaneClass c);

/// XY/XZ/YZ when every participating ball centre has the corresponding
/// coordinate zero, SPECIAL otherwise.
PlaneClass classify_plane(const HandleCycle& cycle, const BallLayout& layout);

/// One drawn arc of a 2-handle: the straight segment between two ball
/// centres, clipped to the ball boundaries. Attachment points are exact when
/// the direction's norm lies in Q(sqrt 2), and always available numerically.
struct DiagramSegment {
    SideIndex from_side, to_side;
    Vec3E from_center, to_center;
    QSqrt2 sq_length;
    std::optional<Vec3E> exact_unit;   // direction of travel, unit length
    std::optional<Vec3E> exact_start;  // on the from-ball boundary
    std::optional<Vec3E> exact_end;    // on the to-ball boundary
    Vec3 start, end;                   // numeric attachment points
    Vec3 unit;                         // numeric unit direction
};

/// Segments of a cycle in traversal order: segment i belongs to faces[i] and
/// runs from the carried side's ball to the acted side's ball. Throws
/// DegenerateSegment if two participating centres coincide (cannot occur for
/// the 24 fixed centres).
std::vector<DiagramSegment> segment_layout(const HandleCycle& cycle, const BallLayout& layout);

struct SceneCycle {
    std::vector<DiagramSegment> segments;
    std::string color;
    std::string name;  // labelled base face, e.g. "A∩C"
};

struct SceneTriangle {
    std::array<Vec3E, 3> corners;
    std::string color;
};

/// Drawable content of one diagram panel.
struct DiagramScene {
    std::vector<SideIndex> balls;
    std::vector<SceneCycle> cycles;
    std::vector<SceneTriangle> triangles;
    BallLayout layout;
    PlaneClass plane = PlaneClass::SPECIAL;
};

inline constexpr std::array<const char*, 6> kCyclePalette = {
    "green", "red", "brown", "blue", "pink", "black",
};

/// Scene for one plane panel: the cycles of that class in canonical order
/// (colored through the fixed palette) over the balls lying in the plane, or
/// all 24 balls for the SPECIAL panel.
DiagramScene plane_scene(const PairingScheme& scheme, const BallLayout& layout,
                         PlaneClass plane);

/// Scene showing the 8 triangles of one codimension-3 class.
DiagramScene orbit_scene(const PairingScheme& scheme, const BallLayout& layout,
                         const FaceOrbit& orbit);

struct RenderOptions {
    Vec3 view_dir{1, 1, 1};  // SPECIAL-panel orthographic view direction
    double scale = 110;      // pixels per unit
    double margin = 40;      // pixels
};

/// Deterministic SVG 1.1 document for a scene; floats printed with 6
/// decimals, balls ordered by side index, cycles in canonical order.
std::string render_svg(const DiagramScene& scene, const RenderOptions& options = {});

}  // namespace cell24

#endif
