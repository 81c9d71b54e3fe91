#include "cell24/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cell24 {

Vec3 to_vec3(const Vec3E& v) {
    return {v[0].to_double(), v[1].to_double(), v[2].to_double()};
}

Vec4E radial_project(const SideVector& s) {
    // |s|^2 = 2 for every side centre, so dividing by sqrt(2) lands on S^3.
    const QSqrt2 inv = QSqrt2::inv_sqrt2();
    Vec4E out;
    for (int i = 0; i < 4; ++i) out[i] = QSqrt2(s.s[i]) * inv;
    return out;
}

DiagramPoint mobius_phi(const Vec4E& x) {
    QSqrt2 denom;  // x1^2 + x2^2 + x3^2 + (x4 - 1)^2
    for (int i = 0; i < 3; ++i) denom += x[i] * x[i];
    const QSqrt2 x4m1 = x[3] - QSqrt2(1);
    denom += x4m1 * x4m1;
    if (denom.is_zero()) return DiagramPoint::infinity();
    const QSqrt2 scale = QSqrt2(2) * denom.invert();
    Vec3E out;
    for (int i = 0; i < 3; ++i) out[i] = scale * x[i];
    // Fourth coordinate 1 + scale*(x4-1) vanishes on |x| = 1; dropped.
    return DiagramPoint::finite(out);
}

DiagramPoint mobius_phi_closed_form(const Vec4E& x) {
    const QSqrt2 denom = QSqrt2(1) - x[3];
    if (denom.is_zero()) return DiagramPoint::infinity();
    const QSqrt2 inv = denom.invert();
    return DiagramPoint::finite({x[0] * inv, x[1] * inv, x[2] * inv});
}

const Vec3E& ball_center(SideIndex s) {
    static const std::array<Vec3E, kNumSides> centers = [] {
        std::array<Vec3E, kNumSides> out;
        for (int i = 0; i < kNumSides; ++i) {
            const DiagramPoint p = mobius_phi(radial_project(side_vector(i)));
            out[i] = p.p;  // no side centre projects to the pole
        }
        return out;
    }();
    return centers[s];
}

BallLayout ball_layout(const PairingScheme& scheme, const Rational& radius) {
    BallLayout layout;
    layout.radius = QSqrt2(radius);
    for (SideIndex i = 0; i < kNumSides; ++i) {
        layout.centers[i] = ball_center(i);
        layout.labels[i] = scheme.label(i);
    }
    return layout;
}

std::string plane_class_name(PlaneClass c) {
    switch (c) {
        case PlaneClass::XY: return "xy";
        case PlaneClass::XZ: return "xz";
        case PlaneClass::YZ: return "yz";
        case PlaneClass::SPECIAL: return "special";
    }
    return "?";
}

PlaneClass classify_plane(const HandleCycle& cycle, const BallLayout& layout) {
    bool zero[3] = {true, true, true};
    for (SideIndex s : cycle.participating_sides()) {
        for (int c = 0; c < 3; ++c)
            if (!layout.centers[s][c].is_zero()) zero[c] = false;
    }
    if (zero[2]) return PlaneClass::XY;
    if (zero[1]) return PlaneClass::XZ;
    if (zero[0]) return PlaneClass::YZ;
    return PlaneClass::SPECIAL;
}

std::vector<DiagramSegment> segment_layout(const HandleCycle& cycle,
                                           const BallLayout& layout) {
    std::vector<DiagramSegment> segments;
    segments.reserve(cycle.length());
    const double r = layout.radius.to_double();
    for (std::size_t i = 0; i < cycle.length(); ++i) {
        DiagramSegment seg;
        seg.to_side = cycle.acted[i];
        seg.from_side = cycle.faces[i].other(seg.to_side);
        seg.from_center = layout.centers[seg.from_side];
        seg.to_center = layout.centers[seg.to_side];
        const Vec3E d = seg.to_center - seg.from_center;
        seg.sq_length = d.norm2();
        if (seg.sq_length.is_zero())
            throw DegenerateSegment("coincident centres for sides " +
                                    side_to_string(seg.from_side) + " and " +
                                    side_to_string(seg.to_side));
        if (auto len = sqrt_exact(seg.sq_length)) {
            const QSqrt2 inv = len->invert();
            seg.exact_unit = d * inv;
            seg.exact_start = seg.from_center + *seg.exact_unit * layout.radius;
            seg.exact_end = seg.to_center - *seg.exact_unit * layout.radius;
        }
        const Vec3 a = to_vec3(seg.from_center), b = to_vec3(seg.to_center);
        const double len = std::sqrt(seg.sq_length.to_double());
        seg.unit = {(b.x - a.x) / len, (b.y - a.y) / len, (b.z - a.z) / len};
        seg.start = {a.x + r * seg.unit.x, a.y + r * seg.unit.y, a.z + r * seg.unit.z};
        seg.end = {b.x - r * seg.unit.x, b.y - r * seg.unit.y, b.z - r * seg.unit.z};
        segments.push_back(std::move(seg));
    }
    return segments;
}

DiagramScene plane_scene(const PairingScheme& scheme, const BallLayout& layout,
                         PlaneClass plane) {
    DiagramScene scene;
    scene.layout = layout;
    scene.plane = plane;

    for (SideIndex s = 0; s < kNumSides; ++s) {
        if (plane == PlaneClass::SPECIAL) {
            scene.balls.push_back(s);
            continue;
        }
        const int c = plane == PlaneClass::XY ? 2 : plane == PlaneClass::XZ ? 1 : 0;
        if (layout.centers[s][c].is_zero()) scene.balls.push_back(s);
    }

    int color = 0;
    for (const HandleCycle& cycle : codim2_classes(scheme)) {
        if (classify_plane(cycle, layout) != plane) continue;
        SceneCycle sc;
        sc.segments = segment_layout(cycle, layout);
        sc.color = kCyclePalette[color++ % kCyclePalette.size()];
        sc.name = labeled_face(scheme, cycle.faces[0]);
        scene.cycles.push_back(std::move(sc));
    }
    return scene;
}

DiagramScene orbit_scene(const PairingScheme& scheme, const BallLayout& layout,
                         const FaceOrbit& orbit) {
    DiagramScene scene;
    scene.layout = layout;
    scene.plane = PlaneClass::SPECIAL;
    std::array<bool, kNumSides> used{};
    int color = 0;
    for (const Codim3Face& f : orbit.members) {
        SceneTriangle t;
        for (int i = 0; i < 3; ++i) {
            t.corners[i] = layout.centers[f.v[i]];
            used[f.v[i]] = true;
        }
        t.color = kCyclePalette[color++ % kCyclePalette.size()];
        scene.triangles.push_back(std::move(t));
    }
    for (SideIndex s = 0; s < kNumSides; ++s)
        if (used[s]) scene.balls.push_back(s);
    return scene;
}

}  // namespace cell24
