#ifndef CELL24_HANDLES_HPP
#define CELL24_HANDLES_HPP

#include <string>
#include <vector>

#include "cell24/pairing.hpp"

namespace cell24 {

/// An ordered ridge cycle: the equivalence class of a codimension-2 face laid
/// out as the closed walk around it. faces[i] --steps[i]--> faces[i+1 mod n],
/// where steps[i] acts on acted[i] (a member side of faces[i]) and the walk
/// carries the other side along by its k-image.
///
/// For a scheme passing validation the walk closes after exactly 4 steps and
/// the four faces are distinct.
struct HandleCycle {
    std::vector<Ridge> faces;
    std::vector<PairingLetter> steps;
    std::vector<SideIndex> acted;
    bool closed = false;

    std::size_t length() const { return faces.size(); }

    /// Sides participating anywhere in the cycle.
    std::vector<SideIndex> participating_sides() const;

    /// "A∩C --a--> A'∩D --d--> ..." with labels from the scheme.
    std::string to_string(const PairingScheme& scheme) const;
};

/// A codimension-3 equivalence class: its 8 member faces (sorted) plus a
/// spanning traversal for display, preferring a single chain through all
/// members like the printed tables; entry i of the traversal reaches
/// chain[i+1] from chain[i] by step[i].
struct FaceOrbit {
    std::vector<Codim3Face> members;        // sorted, size 8 for valid schemes
    std::vector<Codim3Face> chain;          // traversal order
    std::vector<PairingLetter> chain_steps; // size chain.size()-1
    std::vector<SideIndex> chain_acted;

    std::string to_string(const PairingScheme& scheme) const;
};

struct HandleSummary {
    int h0 = 1, h1 = 0, h2 = 0, h3 = 0, h4 = 0;
    int euler = 0;
    bool orientable = false;
};

struct ValidityFailure {
    enum class Kind {
        RidgeCycleNotClosed,   // walk around `ridge` first closes after `length` != 4 steps
        RidgeCycleDegenerate,  // walk closed at 4 but revisited a face
        RidgeClassOverlap,     // two walk classes share a ridge without coinciding
        Codim3OrbitSize,       // orbit of `face` has `size` != 8
    };
    Kind kind;
    Ridge ridge{};
    Codim3Face face{};
    int length = 0;
    int size = 0;

    std::string to_string(const PairingScheme& scheme) const;
};

struct ValidityReport {
    bool valid = true;
    std::vector<ValidityFailure> failures;  // first failure found, per check
};

std::string labeled_face(const PairingScheme& scheme, const Ridge& r);
std::string labeled_face(const PairingScheme& scheme, const Codim3Face& f);

/// The 12 codimension-1 classes, the (domain, image) pairs in letter order.
std::vector<std::pair<SideIndex, SideIndex>> codim1_classes(const PairingScheme& scheme);

/// Walk around a ridge. At each step the side `acted` maps to its partner and
/// the carried side t to k(t), which becomes the side acted on next. Throws
/// CycleNotClosed when the walk does not return to its start state in exactly
/// 4 steps.
HandleCycle ridge_cycle(const PairingScheme& scheme, Ridge start, SideIndex first_acted);

/// The canonical form of the cycle through `start`: based at the smallest
/// face of its class, running in the direction that makes the second face
/// smaller.
HandleCycle canonical_ridge_cycle(const PairingScheme& scheme, Ridge start);

/// All 24 codimension-2 classes as canonical cycles, ordered by their base
/// face. Throws (CycleNotClosed / Error) on schemes failing the class-size or
/// partition conditions.
std::vector<HandleCycle> codim2_classes(const PairingScheme& scheme);

/// Orbit of one codimension-3 face under the applicable transformations.
/// Throws OrbitSizeMismatch when the orbit size is not 8.
FaceOrbit codim3_orbit(const PairingScheme& scheme, Codim3Face start);

/// All 12 codimension-3 classes, ordered by smallest member.
std::vector<FaceOrbit> codim3_classes(const PairingScheme& scheme);

/// Handle counts (1, 12, 24, 12, 0), Euler characteristic and orientability.
/// Propagates validity failures from the class computations.
HandleSummary summary(const PairingScheme& scheme);

/// Checks the combinatorial validity conditions: every ridge walk closes
/// after exactly 4 steps through 4 distinct faces, the walk classes partition
/// the 96 ridges, and every codimension-3 orbit has exactly 8 members. These
/// are necessary conditions for the code to present a manifold; the report
/// carries the first failure per condition.
ValidityReport validate(const PairingScheme& scheme);

}  // namespace cell24

#endif
