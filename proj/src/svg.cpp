#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "cell24/geometry.hpp"

namespace cell24 {

namespace {

struct Projector {
    // Orthonormal 2D frame; coordinate panels use axis pairs, the SPECIAL
    // panel an orthographic view along options.view_dir.
    Vec3 u, v;

    static Vec3 normalize(Vec3 a) {
        const double n = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
        return {a.x / n, a.y / n, a.z / n};
    }
    static Vec3 cross(Vec3 a, Vec3 b) {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    static Projector make(PlaneClass plane, const Vec3& view) {
        switch (plane) {
            case PlaneClass::XY: return {{1, 0, 0}, {0, 1, 0}};
            case PlaneClass::XZ: return {{1, 0, 0}, {0, 0, 1}};
            case PlaneClass::YZ: return {{0, 1, 0}, {0, 0, 1}};
            case PlaneClass::SPECIAL: break;
        }
        const Vec3 w = normalize(view);
        Vec3 up{0, 0, 1};
        if (std::abs(w.x * up.x + w.y * up.y + w.z * up.z) > 0.999) up = {1, 0, 0};
        const Vec3 u = normalize(cross(up, w));
        const Vec3 v = cross(w, u);
        return {u, v};
    }

    std::pair<double, double> operator()(const Vec3& p) const {
        return {p.x * u.x + p.y * u.y + p.z * u.z,
                p.x * v.x + p.y * v.y + p.z * v.z};
    }
};

std::string fmt(double x) {
    char buf[48];
    if (x == 0) x = 0;  // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::string render_svg(const DiagramScene& scene, const RenderOptions& options) {
    const Projector proj = Projector::make(scene.plane, options.view_dir);
    const double r = scene.layout.radius.to_double();

    double min_x = std::numeric_limits<double>::max(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    auto grow = [&](std::pair<double, double> q, double pad) {
        min_x = std::min(min_x, q.first - pad);
        max_x = std::max(max_x, q.first + pad);
        min_y = std::min(min_y, q.second - pad);
        max_y = std::max(max_y, q.second + pad);
    };
    for (SideIndex s : scene.balls) grow(proj(to_vec3(scene.layout.centers[s])), r);
    for (const SceneCycle& c : scene.cycles)
        for (const DiagramSegment& seg : c.segments) {
            grow(proj(seg.start), 0);
            grow(proj(seg.end), 0);
        }
    for (const SceneTriangle& t : scene.triangles)
        for (const Vec3E& p : t.corners) grow(proj(to_vec3(p)), 0);
    if (scene.balls.empty() && scene.cycles.empty() && scene.triangles.empty()) {
        min_x = min_y = -1;
        max_x = max_y = 1;
    }

    const double k = options.scale;
    const double m = options.margin;
    const double width = (max_x - min_x) * k + 2 * m;
    const double height = (max_y - min_y) * k + 2 * m;
    // SVG y runs downward; flip the vertical axis.
    auto map = [&](std::pair<double, double> q) -> std::pair<double, double> {
        return {m + (q.first - min_x) * k, m + (max_y - q.second) * k};
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
           fmt(width) + " " + fmt(height) + "\">\n";
    out += "  <desc>panel " + plane_class_name(scene.plane) + "</desc>\n";

    for (const SceneTriangle& t : scene.triangles) {
        out += "  <polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            const auto [x, y] = map(proj(to_vec3(t.corners[i])));
            if (i) out += ' ';
            out += fmt(x) + "," + fmt(y);
        }
        out += "\" fill=\"" + t.color + "\" fill-opacity=\"0.25\" stroke=\"" +
               t.color + "\" stroke-width=\"1\"/>\n";
    }

    for (const SceneCycle& c : scene.cycles) {
        out += "  <g stroke=\"" + c.color + "\" stroke-width=\"2.5\" fill=\"none\">";
        out += "<title>" + c.name + "</title>\n";
        for (const DiagramSegment& seg : c.segments) {
            const auto [x1, y1] = map(proj(seg.start));
            const auto [x2, y2] = map(proj(seg.end));
            out += "    <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" +
                   fmt(x2) + "\" y2=\"" + fmt(y2) + "\"/>\n";
        }
        out += "  </g>\n";
    }

    for (SideIndex s : scene.balls) {
        const auto [cx, cy] = map(proj(to_vec3(scene.layout.centers[s])));
        out += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" +
               fmt(r * k) + "\" fill=\"none\" stroke=\"darkred\" stroke-width=\"1.5\"/>\n";
        out += "  <text x=\"" + fmt(cx + r * k + 2) + "\" y=\"" + fmt(cy - r * k - 2) +
               "\" font-size=\"14\" font-family=\"serif\">" +
               scene.layout.labels[s] + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace cell24
