#include "cell24/handles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cell24 {

namespace {

struct WalkState {
    Ridge face;
    SideIndex acted;
    bool operator==(const WalkState&) const = default;
};

// One step of the ridge walk: act on `acted` by its transformation, carry the
// other side to its k-image, which is acted on next.
WalkState walk_step(const PairingScheme& scheme, const WalkState& s,
                    PairingLetter* step_out) {
    const PairingLetter step = scheme.transformation_from(s.acted);
    const SideIndex carried = s.face.other(s.acted);
    const SideIndex mapped = scheme.apply_to_side(step, s.acted);
    const SideIndex carried_img = scheme.apply_to_side(step, carried);
    if (step_out) *step_out = step;
    return {Ridge(mapped, carried_img), carried_img};
}

// Walk up to max_steps, recording faces/steps. Returns the step count at
// which the walk first returned to its start state, or 0 if it never did.
int walk_ridge(const PairingScheme& scheme, Ridge start, SideIndex first_acted,
               int max_steps, HandleCycle* out) {
    WalkState state{start, first_acted};
    const WalkState initial = state;
    if (out) {
        out->faces.clear();
        out->steps.clear();
        out->acted.clear();
        out->closed = false;
    }
    for (int n = 1; n <= max_steps; ++n) {
        PairingLetter step;
        const WalkState next = walk_step(scheme, state, &step);
        if (out) {
            out->faces.push_back(state.face);
            out->steps.push_back(step);
            out->acted.push_back(state.acted);
        }
        state = next;
        if (state == initial) {
            if (out) out->closed = true;
            return n;
        }
    }
    return 0;
}

}  // namespace

std::vector<SideIndex> HandleCycle::participating_sides() const {
    std::set<SideIndex> s;
    for (const Ridge& r : faces) {
        s.insert(r.a);
        s.insert(r.b);
    }
    return {s.begin(), s.end()};
}

std::string HandleCycle::to_string(const PairingScheme& scheme) const {
    std::string out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        out += labeled_face(scheme, faces[i]);
        out += " --" + steps[i].to_string() + "--> ";
    }
    if (!faces.empty()) out += labeled_face(scheme, faces[0]);
    return out;
}

std::string FaceOrbit::to_string(const PairingScheme& scheme) const {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += " --" + chain_steps[i - 1].to_string() + "--> ";
        out += labeled_face(scheme, chain[i]);
    }
    return out;
}

std::string labeled_face(const PairingScheme& scheme, const Ridge& r) {
    return scheme.label(r.a) + "∩" + scheme.label(r.b);
}

std::string labeled_face(const PairingScheme& scheme, const Codim3Face& f) {
    return scheme.label(f.v[0]) + "∩" + scheme.label(f.v[1]) + "∩" +
           scheme.label(f.v[2]);
}

std::string ValidityFailure::to_string(const PairingScheme& scheme) const {
    switch (kind) {
        case Kind::RidgeCycleNotClosed:
            return "ridge cycle at " + labeled_face(scheme, ridge) +
                   (length ? " closes after " + std::to_string(length) + " steps"
                           : " does not close");
        case Kind::RidgeCycleDegenerate:
            return "ridge cycle at " + labeled_face(scheme, ridge) +
                   " revisits a face";
        case Kind::RidgeClassOverlap:
            return "ridge classes overlap at " + labeled_face(scheme, ridge);
        case Kind::Codim3OrbitSize:
            return "codim-3 orbit of " + labeled_face(scheme, face) + " has " +
                   std::to_string(size) + " members";
    }
    return "unknown failure";
}

std::vector<std::pair<SideIndex, SideIndex>> codim1_classes(const PairingScheme& scheme) {
    std::vector<std::pair<SideIndex, SideIndex>> out;
    out.reserve(kNumLetters);
    for (LetterIndex l = 0; l < kNumLetters; ++l)
        out.emplace_back(scheme.domain(l), scheme.image(l));
    return out;
}

HandleCycle ridge_cycle(const PairingScheme& scheme, Ridge start, SideIndex first_acted) {
    HandleCycle cycle;
    const int closed_at = walk_ridge(scheme, start, first_acted, 4, &cycle);
    if (closed_at != 4) {
        const int len = closed_at ? closed_at
                                  : walk_ridge(scheme, start, first_acted, 192, nullptr);
        throw CycleNotClosed(len, "cycle at " + labeled_face(scheme, start) +
                                      " closes after " + std::to_string(len) +
                                      " steps, expected 4");
    }
    return cycle;
}

HandleCycle canonical_ridge_cycle(const PairingScheme& scheme, Ridge start) {
    // Find the smallest face of the class first.
    HandleCycle probe = ridge_cycle(scheme, start, start.a);
    const Ridge base = *std::min_element(probe.faces.begin(), probe.faces.end());
    // The two walks out of the base face are the two directions around the
    // class; keep the one whose second face is smaller, tie broken toward
    // acting on the smaller side.
    HandleCycle fwd = ridge_cycle(scheme, base, base.a);
    HandleCycle rev = ridge_cycle(scheme, base, base.b);
    return rev.faces[1] < fwd.faces[1] ? rev : fwd;
}

std::vector<HandleCycle> codim2_classes(const PairingScheme& scheme) {
    std::vector<HandleCycle> classes;
    std::map<Ridge, int> assigned;
    for (const Ridge& r : all_ridges()) {
        if (assigned.count(r)) continue;
        HandleCycle cycle = canonical_ridge_cycle(scheme, r);
        std::set<Ridge> distinct(cycle.faces.begin(), cycle.faces.end());
        if (distinct.size() != cycle.faces.size())
            throw Error("ridge cycle at " + labeled_face(scheme, r) +
                        " revisits a face");
        const int id = static_cast<int>(classes.size());
        for (const Ridge& f : cycle.faces) {
            auto [it, inserted] = assigned.emplace(f, id);
            if (!inserted)
                throw Error("ridge classes overlap at " + labeled_face(scheme, f));
        }
        classes.push_back(std::move(cycle));
    }
    return classes;
}

namespace {

Codim3Face act_on_face(const PairingScheme& scheme, const Codim3Face& f,
                       SideIndex acted) {
    const PairingLetter step = scheme.transformation_from(acted);
    std::array<SideIndex, 3> img{};
    for (int i = 0; i < 3; ++i) img[i] = scheme.apply_to_side(step, f.v[i]);
    return {img[0], img[1], img[2]};
}

// Look for a path visiting every orbit member once, the shape the printed
// tables use. The orbit graph is tiny (8 nodes, degree 3).
bool hamiltonian_path(const PairingScheme& scheme,
                      const std::vector<Codim3Face>& members, FaceOrbit* orbit) {
    std::vector<Codim3Face> chain{members.front()};
    std::vector<PairingLetter> steps;
    std::vector<SideIndex> acted;
    std::set<Codim3Face> seen{members.front()};

    std::function<bool()> extend = [&]() -> bool {
        if (chain.size() == members.size()) return true;
        const Codim3Face cur = chain.back();
        for (SideIndex s : cur.v) {
            const Codim3Face next = act_on_face(scheme, cur, s);
            if (seen.count(next)) continue;
            chain.push_back(next);
            steps.push_back(scheme.transformation_from(s));
            acted.push_back(s);
            seen.insert(next);
            if (extend()) return true;
            seen.erase(next);
            chain.pop_back();
            steps.pop_back();
            acted.pop_back();
        }
        return false;
    };
    if (!extend()) return false;
    orbit->chain = std::move(chain);
    orbit->chain_steps = std::move(steps);
    orbit->chain_acted = std::move(acted);
    return true;
}

}  // namespace

FaceOrbit codim3_orbit(const PairingScheme& scheme, Codim3Face start) {
    // Breadth-first closure under the three applicable transformations.
    std::set<Codim3Face> seen{start};
    std::vector<Codim3Face> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Codim3Face cur = queue[i];  // queue may reallocate below
        for (SideIndex s : cur.v) {
            const Codim3Face next = act_on_face(scheme, cur, s);
            if (seen.insert(next).second) queue.push_back(next);
        }
        if (seen.size() > 8) break;
    }
    if (seen.size() != 8)
        throw OrbitSizeMismatch(static_cast<int>(seen.size()),
                                "codim-3 orbit of " + labeled_face(scheme, start) +
                                    " has " + std::to_string(seen.size()) +
                                    " members, expected 8");
    FaceOrbit orbit;
    orbit.members.assign(seen.begin(), seen.end());
    if (!hamiltonian_path(scheme, orbit.members, &orbit)) {
        orbit.chain = queue;  // breadth-first order as fallback display
    }
    return orbit;
}

std::vector<FaceOrbit> codim3_classes(const PairingScheme& scheme) {
    std::vector<FaceOrbit> classes;
    std::set<Codim3Face> assigned;
    for (const Codim3Face& f : all_codim3_faces()) {
        if (assigned.count(f)) continue;
        FaceOrbit orbit = codim3_orbit(scheme, f);
        for (const Codim3Face& m : orbit.members) {
            if (!assigned.insert(m).second)
                throw Error("codim-3 classes overlap at " + labeled_face(scheme, m));
        }
        classes.push_back(std::move(orbit));
    }
    return classes;
}

HandleSummary summary(const PairingScheme& scheme) {
    HandleSummary s;
    s.h0 = 1;
    s.h1 = static_cast<int>(codim1_classes(scheme).size());
    s.h2 = static_cast<int>(codim2_classes(scheme).size());
    s.h3 = static_cast<int>(codim3_classes(scheme).size());
    s.h4 = 0;  // every vertex is ideal
    s.euler = s.h0 - s.h1 + s.h2 - s.h3 + s.h4;
    s.orientable = scheme.orientable();
    return s;
}

ValidityReport validate(const PairingScheme& scheme) {
    ValidityReport report;

    // Ridge walks: closure after exactly 4 steps through distinct faces.
    std::map<Ridge, int> assigned;
    std::vector<std::set<Ridge>> class_faces;
    for (const Ridge& r : all_ridges()) {
        HandleCycle cycle;
        const int closed_at = walk_ridge(scheme, r, r.a, 4, &cycle);
        if (closed_at != 4) {
            const int len =
                closed_at ? closed_at : walk_ridge(scheme, r, r.a, 192, nullptr);
            report.failures.push_back({ValidityFailure::Kind::RidgeCycleNotClosed,
                                       r, {}, len, 0});
            break;
        }
        std::set<Ridge> faces(cycle.faces.begin(), cycle.faces.end());
        if (faces.size() != 4) {
            report.failures.push_back(
                {ValidityFailure::Kind::RidgeCycleDegenerate, r, {}, 4, 0});
            break;
        }
        // Partition check: a ridge may only appear in one class.
        int found = -1;
        for (const Ridge& f : cycle.faces) {
            auto it = assigned.find(f);
            if (it == assigned.end()) continue;
            if (found == -1) found = it->second;
            if (it->second != found || class_faces[it->second] != faces) {
                report.failures.push_back(
                    {ValidityFailure::Kind::RidgeClassOverlap, f, {}, 0, 0});
                found = -2;
                break;
            }
        }
        if (found == -2) break;
        if (found == -1) {
            const int id = static_cast<int>(class_faces.size());
            class_faces.push_back(faces);
            for (const Ridge& f : faces) assigned.emplace(f, id);
        }
    }

    // Codimension-3 orbits of size 8.
    if (report.failures.empty()) {
        for (const Codim3Face& f : all_codim3_faces()) {
            try {
                codim3_orbit(scheme, f);
            } catch (const OrbitSizeMismatch& e) {
                report.failures.push_back(
                    {ValidityFailure::Kind::Codim3OrbitSize, {}, f, 0, e.size});
                break;
            }
        }
    }

    report.valid = report.failures.empty();
    return report;
}

}  // namespace cell24
