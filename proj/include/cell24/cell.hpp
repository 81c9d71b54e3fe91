#ifndef CELL24_CELL_HPP
#define CELL24_CELL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cell24/exact.hpp"

namespace cell24 {

/// One of the 24 sides of the right-angled ideal hyperbolic 24-cell, named by
/// the centre of its defining unit sphere: a sign 4-tuple with exactly two
/// nonzero entries.
///
/// Sides carry a total order, fixed once and for all: first by the (unordered)
/// pair of nonzero positions in the order
///   {0,1} < {0,2} < {1,2} < {0,3} < {1,3} < {2,3}
/// (six groups of four, two pairing letters per group), then within a group by
/// (+1,+1) < (+1,-1) < (-1,+1) < (-1,-1) on the nonzero entries. SideIndex is
/// the rank 0..23 in this order; all fast paths work on indices.
struct SideVector {
    std::array<int8_t, 4> s{};

    bool operator==(const SideVector& o) const { return s == o.s; }
    bool operator!=(const SideVector& o) const { return !(*this == o); }
};

using SideIndex = uint8_t;
inline constexpr int kNumSides = 24;
inline constexpr int kNumGroups = 6;

/// Nonzero coordinate positions of each group, in group order.
inline constexpr std::array<std::array<int, 2>, kNumGroups> kGroupSupport = {{
    {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
}};

const SideVector& side_vector(SideIndex i);
SideIndex side_index(const SideVector& v);
inline int side_group(SideIndex i) { return i / 4; }

/// "S(+1,0,-1,0)"-style rendering.
std::string side_to_string(const SideVector& v);
std::string side_to_string(SideIndex i);

/// An ideal vertex of the 24-cell: one of 8 unit-axis points or 16 points
/// with all coordinates +-1/2.
struct IdealVertex {
    Vec4E coords;
};

const std::vector<IdealVertex>& all_vertices();

/// A codimension-2 face (ridge): an unordered pair of intersecting sides,
/// stored sorted.
struct Ridge {
    SideIndex a, b;

    Ridge() : a(0), b(0) {}
    Ridge(SideIndex x, SideIndex y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool contains(SideIndex i) const { return a == i || b == i; }
    SideIndex other(SideIndex i) const { return a == i ? b : a; }

    auto operator<=>(const Ridge&) const = default;
};

/// A codimension-3 face: three pairwise-intersecting sides, stored sorted.
struct Codim3Face {
    std::array<SideIndex, 3> v{};

    Codim3Face() = default;
    Codim3Face(SideIndex x, SideIndex y, SideIndex z);

    bool contains(SideIndex i) const { return v[0] == i || v[1] == i || v[2] == i; }

    auto operator<=>(const Codim3Face&) const = default;
};

/// Two sides intersect iff their centre tuples agree at one common nonzero
/// position and their remaining nonzero entries sit at different positions.
bool sides_intersect(SideIndex s, SideIndex t);
bool sides_intersect(const SideVector& s, const SideVector& t);

/// Axis vertex: on the side iff the side matches its sign at the vertex's
/// nonzero position. Half vertex: on the side iff both nonzero side entries
/// match the vertex's signs there.
bool vertex_on_side(const IdealVertex& v, const SideVector& s);

/// All 96 ridges, sorted.
const std::vector<Ridge>& all_ridges();

/// All 96 codimension-3 faces, sorted.
const std::vector<Codim3Face>& all_codim3_faces();

}  // namespace cell24

#endif
