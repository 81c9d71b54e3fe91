#include "cell24/framing.hpp"

#include <cmath>

namespace cell24 {

namespace {

constexpr const char* kAxisNames[3] = {"Rx", "Ry", "Rz"};

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double component(const Vec3& v, int axis) {
    return axis == 0 ? v.x : axis == 1 ? v.y : v.z;
}

}  // namespace

std::string MobiusWord::normal_form() const {
    std::string out;
    auto append = [&out](const char* g) {
        if (!out.empty()) out += "∘";
        out += g;
    };
    if (flip[0] && flip[1] && flip[2]) {
        append("Ant");
    } else {
        for (int i = 0; i < 3; ++i)
            if (flip[i]) append(kAxisNames[i]);
    }
    if (inv) append("Inv");
    if (out.empty()) out = "id";
    return out;
}

std::string MobiusWord::formula() const {
    const char* vars[3] = {"x", "y", "z"};
    std::string out = "(x,y,z) -> (";
    for (int i = 0; i < 3; ++i) {
        if (i) out += ",";
        if (flip[i]) out += "-";
        out += vars[i];
        if (inv) out += "/q";
    }
    out += ")";
    if (inv) out += " with q = x^2+y^2+z^2";
    return out;
}

MobiusWord attaching_map(const KPart& k) {
    MobiusWord w;
    for (int i = 0; i < 3; ++i) w.flip[i] = k.diag[i] < 0;
    w.inv = k.diag[3] < 0;
    return w;
}

DiagramPoint evaluate(const MobiusWord& w, const DiagramPoint& p) {
    if (p.infinite)
        return w.inv ? DiagramPoint::finite({}) : DiagramPoint::infinity();
    Vec3E q = p.p;
    if (w.inv) {
        const QSqrt2 n2 = q.norm2();
        if (n2.is_zero()) return DiagramPoint::infinity();
        q = q * n2.invert();
    }
    for (int i = 0; i < 3; ++i)
        if (w.flip[i]) q[i] = -q[i];
    return DiagramPoint::finite(q);
}

Vec3 evaluate(const MobiusWord& w, const Vec3& p) {
    Vec3 q = p;
    if (w.inv) {
        const double n2 = dot(q, q);
        q = (1.0 / n2) * q;
    }
    if (w.flip[0]) q.x = -q.x;
    if (w.flip[1]) q.y = -q.y;
    if (w.flip[2]) q.z = -q.z;
    return q;
}

Sphere sphere_image(const MobiusWord& w, const Sphere& s) {
    Sphere out = s;
    if (w.inv) {
        const QSqrt2 d = s.center.norm2() - s.radius * s.radius;
        if (d.is_zero())
            throw SphereThroughPole("sphere passes through the inversion centre");
        const QSqrt2 inv_d = d.invert();
        out.center = s.center * inv_d;
        out.radius = s.radius * (d.sign() > 0 ? inv_d : -inv_d);
    }
    for (int i = 0; i < 3; ++i)
        if (w.flip[i]) out.center[i] = -out.center[i];
    return out;
}

Mat3 differential(const MobiusWord& w, const Vec3& p) {
    Mat3 d;
    if (w.inv) {
        const double n2 = dot(p, p);
        if (n2 < 1e-300)
            throw PoleDifferential("derivative of Inv at the origin");
        const double c[3] = {p.x, p.y, p.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                d.m[i][j] = ((i == j ? 1.0 : 0.0) - 2.0 * c[i] * c[j] / n2) / n2;
    } else {
        for (int i = 0; i < 3; ++i) d.m[i][i] = 1.0;
    }
    for (int i = 0; i < 3; ++i)
        if (w.flip[i])
            for (int j = 0; j < 3; ++j) d.m[i][j] = -d.m[i][j];
    return d;
}

std::string side_tag_name(SideTag t) {
    switch (t) {
        case SideTag::Above: return "above";
        case SideTag::Below: return "below";
        case SideTag::InPlaneRight: return "in-plane-right";
        case SideTag::InPlaneLeft: return "in-plane-left";
    }
    return "?";
}

namespace {

bool is_z_like(SideTag t) { return t == SideTag::Above || t == SideTag::Below; }

// Transverse axis for above/below tags: global z for special cycles, the
// plane normal for planar ones.
int transverse_axis(PlaneClass plane) {
    switch (plane) {
        case PlaneClass::XY: return 2;
        case PlaneClass::XZ: return 1;
        case PlaneClass::YZ: return 0;
        case PlaneClass::SPECIAL: return 2;
    }
    return 2;
}

Vec3 axis_vec(int axis) {
    Vec3 v;
    if (axis == 0) v.x = 1;
    if (axis == 1) v.y = 1;
    if (axis == 2) v.z = 1;
    return v;
}

// Entry attachment point into the ball at `center` approached along `unit`.
Vec3 entry_point(const Vec3& center, const Vec3& unit, double r,
                 AttachmentConvention convention) {
    if (convention == AttachmentConvention::SegmentSphere)
        return center - r * unit;
    // Schematic convention: the entry sits on a coordinate axis through the
    // ball's centre, along an axis the centre does not use, pointed back
    // toward the previous ball. A ball centred at (0, 1/sqrt2, 1/sqrt2)
    // entered from (1/sqrt2, 0, 1/sqrt2) gets (r, 1/sqrt2, 1/sqrt2).
    const Vec3 back = -1.0 * unit;
    int best = -1;
    double best_abs = 0;
    for (int axis = 0; axis < 3; ++axis) {
        if (std::abs(component(center, axis)) > 1e-12) continue;
        const double a = std::abs(component(back, axis));
        if (a > best_abs) {
            best = axis;
            best_abs = a;
        }
    }
    if (best < 0) {  // approach orthogonal to every free axis
        for (int axis = 0; axis < 3; ++axis) {
            const double a = std::abs(component(back, axis));
            if (a > best_abs) {
                best = axis;
                best_abs = a;
            }
        }
    }
    const double sign = component(back, best) >= 0 ? 1.0 : -1.0;
    return center + (sign * r) * axis_vec(best);
}

// The unit transverse direction representing a tag at a segment.
Vec3 tag_direction(SideTag tag, const Vec3& unit, PlaneClass plane) {
    if (is_z_like(tag)) {
        const Vec3 n = axis_vec(transverse_axis(plane));
        Vec3 t = n - dot(n, unit) * unit;
        const double len = norm(t);
        if (len < 1e-12)
            throw OffsetDegenerate("segment parallel to the transverse axis");
        t = (1.0 / len) * t;
        return tag == SideTag::Above ? t : -1.0 * t;
    }
    const Vec3 m = cross(unit, axis_vec(transverse_axis(plane)));
    const double len = norm(m);
    if (len < 1e-12) throw OffsetDegenerate("degenerate in-plane direction");
    const Vec3 t = (1.0 / len) * m;
    return tag == SideTag::InPlaneRight ? t : -1.0 * t;
}

}  // namespace

FramingTrace trace_parallel(const PairingScheme& scheme, const HandleCycle& cycle,
                            const BallLayout& layout, SideTag initial,
                            const TraceOptions& options) {
    FramingTrace trace;
    trace.initial = initial;
    trace.plane = classify_plane(cycle, layout);
    if (!is_z_like(initial) && trace.plane == PlaneClass::SPECIAL)
        throw Error("in-plane offsets are only defined for planar cycles");

    const auto segments = segment_layout(cycle, layout);
    const double r = layout.radius.to_double();
    const double eps = options.epsilon_fraction * r;
    if (eps <= 0 || eps >= r) throw Error("offset must satisfy 0 < eps < radius");

    SideTag tag = initial;
    const std::size_t n = segments.size();
    for (std::size_t i = 0; i < n; ++i) {
        const DiagramSegment& seg = segments[i];
        const DiagramSegment& next = segments[(i + 1) % n];
        const Vec3 p = entry_point(to_vec3(layout.centers[seg.to_side]), seg.unit, r,
                                   options.convention);
        const Vec3 offset_dir = tag_direction(tag, seg.unit, trace.plane);
        const MobiusWord w = attaching_map(scheme.kpart(cycle.steps[i].letter));

        Vec3 carried;
        if (options.method == TransportMethod::OffsetPoint) {
            carried = evaluate(w, p + eps * offset_dir) - evaluate(w, p);
        } else {
            carried = differential(w, p).apply(offset_dir);
        }
        const double carried_len = norm(carried);

        // Re-project transverse to the next segment and read the side off the
        // tracked line's sign.
        Vec3 transverse = carried - dot(carried, next.unit) * next.unit;
        const double t_len = norm(transverse);
        if (t_len < 1e-12 * carried_len)
            throw OffsetDegenerate("offset became parallel to the next segment");

        double signal;
        if (is_z_like(tag)) {
            signal = component(transverse, transverse_axis(trace.plane));
            tag = signal > 0 ? SideTag::Above : SideTag::Below;
        } else {
            const Vec3 m = tag_direction(SideTag::InPlaneRight, next.unit, trace.plane);
            signal = dot(transverse, m);
            tag = signal > 0 ? SideTag::InPlaneRight : SideTag::InPlaneLeft;
        }
        if (std::abs(signal) < 1e-9 * t_len)
            throw OffsetDegenerate("transverse side of the offset is ambiguous");

        TraceStep step;
        step.face = cycle.faces[i];
        step.through = seg.to_side;
        step.entry = p;
        step.exit = evaluate(w, p);
        step.offset = (1.0 / t_len) * transverse;
        step.tag = tag;
        trace.steps.push_back(step);
    }

    trace.closed = (tag == initial);
    trace.holonomy_sign = trace.closed ? +1 : -1;
    return trace;
}

FramingCertificate planar_framing_certificate(const PairingScheme& scheme,
                                              const Rational& radius,
                                              const TraceOptions& options) {
    FramingCertificate cert;
    cert.code = scheme.code();
    cert.certified = true;

    const BallLayout layout = ball_layout(scheme, radius);
    for (const HandleCycle& cycle : codim2_classes(scheme)) {
        CycleCertificate cc;
        cc.name = labeled_face(scheme, cycle.faces[0]);
        cc.plane = classify_plane(cycle, layout);
        std::vector<SideTag> initials{SideTag::Below};
        if (cc.plane != PlaneClass::SPECIAL) initials.push_back(SideTag::InPlaneRight);

        cc.certified = true;
        for (SideTag initial : initials) {
            LineVerdict verdict;
            verdict.initial = initial;
            try {
                const FramingTrace trace =
                    trace_parallel(scheme, cycle, layout, initial, options);
                for (const TraceStep& s : trace.steps) verdict.tags.push_back(s.tag);
                verdict.final = verdict.tags.back();
                verdict.closed = trace.closed;
                verdict.sign = trace.holonomy_sign;
            } catch (const OffsetDegenerate&) {
                verdict.degenerate = true;
                verdict.final = initial;
            }
            if (!verdict.closed) cc.certified = false;
            cc.lines.push_back(std::move(verdict));
        }
        if (!cc.certified) cert.certified = false;
        cert.cycles.push_back(std::move(cc));
    }
    return cert;
}

}  // namespace cell24
