#include "cell24/cell.hpp"

#include <algorithm>
#include <stdexcept>

namespace cell24 {

namespace {

constexpr std::array<std::array<int8_t, 2>, 4> kSignOrder = {{
    {+1, +1}, {+1, -1}, {-1, +1}, {-1, -1},
}};

std::array<SideVector, kNumSides> make_sides() {
    std::array<SideVector, kNumSides> sides{};
    int idx = 0;
    for (const auto& support : kGroupSupport) {
        for (const auto& signs : kSignOrder) {
            SideVector v;
            v.s[support[0]] = signs[0];
            v.s[support[1]] = signs[1];
            sides[idx++] = v;
        }
    }
    return sides;
}

const std::array<SideVector, kNumSides>& side_table() {
    static const auto table = make_sides();
    return table;
}

}  // namespace

const SideVector& side_vector(SideIndex i) { return side_table()[i]; }

SideIndex side_index(const SideVector& v) {
    const auto& table = side_table();
    for (int i = 0; i < kNumSides; ++i)
        if (table[i] == v) return static_cast<SideIndex>(i);
    throw std::invalid_argument("not a side vector: " + side_to_string(v));
}

std::string side_to_string(const SideVector& v) {
    std::string out = "S(";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ',';
        if (v.s[i] == 0)
            out += '0';
        else
            out += v.s[i] > 0 ? "+1" : "-1";
    }
    out += ')';
    return out;
}

std::string side_to_string(SideIndex i) { return side_to_string(side_vector(i)); }

Codim3Face::Codim3Face(SideIndex x, SideIndex y, SideIndex z) : v{x, y, z} {
    std::sort(v.begin(), v.end());
}

bool sides_intersect(const SideVector& s, const SideVector& t) {
    int common = -1, common_count = 0;
    for (int p = 0; p < 4; ++p) {
        if (s.s[p] != 0 && t.s[p] != 0) {
            ++common_count;
            common = p;
        }
    }
    // Sharing both nonzero positions means the remaining entries coincide in
    // position, so only a single shared position can give a ridge.
    return common_count == 1 && s.s[common] == t.s[common];
}

bool sides_intersect(SideIndex s, SideIndex t) {
    static const auto table = [] {
        std::array<std::array<bool, kNumSides>, kNumSides> m{};
        for (int i = 0; i < kNumSides; ++i)
            for (int j = 0; j < kNumSides; ++j)
                m[i][j] = sides_intersect(side_vector(i), side_vector(j));
        return m;
    }();
    return table[s][t];
}

bool vertex_on_side(const IdealVertex& v, const SideVector& s) {
    // Axis vertices have one nonzero coordinate +-1, half vertices four +-1/2.
    int nonzero = 0, axis_pos = -1;
    for (int p = 0; p < 4; ++p) {
        if (!v.coords[p].is_zero()) {
            ++nonzero;
            axis_pos = p;
        }
    }
    if (nonzero == 1) {
        return s.s[axis_pos] != 0 && s.s[axis_pos] == v.coords[axis_pos].sign();
    }
    for (int p = 0; p < 4; ++p) {
        if (s.s[p] != 0 && s.s[p] != v.coords[p].sign()) return false;
    }
    return true;
}

const std::vector<IdealVertex>& all_vertices() {
    static const std::vector<IdealVertex> verts = [] {
        std::vector<IdealVertex> out;
        for (int p = 0; p < 4; ++p) {
            for (int sign : {+1, -1}) {
                IdealVertex v;
                v.coords[p] = QSqrt2(sign);
                out.push_back(v);
            }
        }
        const Rational half(1, 2);
        for (int mask = 0; mask < 16; ++mask) {
            IdealVertex v;
            for (int p = 0; p < 4; ++p)
                v.coords[p] = QSqrt2((mask >> p) & 1 ? -half : half);
            out.push_back(v);
        }
        return out;
    }();
    return verts;
}

const std::vector<Ridge>& all_ridges() {
    static const std::vector<Ridge> ridges = [] {
        std::vector<Ridge> out;
        for (SideIndex i = 0; i < kNumSides; ++i)
            for (SideIndex j = i + 1; j < kNumSides; ++j)
                if (sides_intersect(i, j)) out.emplace_back(i, j);
        std::sort(out.begin(), out.end());
        return out;
    }();
    return ridges;
}

const std::vector<Codim3Face>& all_codim3_faces() {
    static const std::vector<Codim3Face> faces = [] {
        std::vector<Codim3Face> out;
        for (SideIndex i = 0; i < kNumSides; ++i)
            for (SideIndex j = i + 1; j < kNumSides; ++j) {
                if (!sides_intersect(i, j)) continue;
                for (SideIndex k = j + 1; k < kNumSides; ++k)
                    if (sides_intersect(i, k) && sides_intersect(j, k))
                        out.emplace_back(i, j, k);
            }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return faces;
}

}  // namespace cell24
