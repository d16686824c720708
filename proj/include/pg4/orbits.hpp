#pragma once

#include "pg4/group.hpp"
#include "pg4/hopf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pg4 {

struct Orbit {
    Vec4 base{1, 0, 0, 0};
    std::vector<Vec4> points;
};

// normalize(0.9, 0.31, 0.23, 0.17)
Vec4 default_start();

// Distinct images of v, merged at 1e-7.
Orbit orbit(const PointGroup& g, const Vec4& v);

using Mat3 = std::array<std::array<double, 3>, 3>;

// The action of a tubical group on the circles of its invariant Hopf
// bundle, as a 3D point group.
struct InducedGroup {
    std::vector<Mat3> elements;
    bool contains_minus_identity = false;
    bool chiral = true;
    std::string name;  // "+I", "±I", "+O", "±O", "TO", "+T", "±T", or "?"
};

InducedGroup induced_group(const PointGroup& g);

enum class CenterKind { Five, Four, ThreeI, ThreeII, Two };

CenterKind parse_center_kind(const std::string& s);  // "5", "4", "3I", "3II", "2"
const char* center_kind_name(CenterKind c);

// A rotation center p of the induced group with the requested rotation
// order, closest to the representative axis of its kind: 5-fold (0,1,φ),
// 4-fold (1,0,0), 3-fold type I −(1,1,1) and type II (1,1,1), 2-fold (0,1,1).
Vec3 rotation_center(const PointGroup& g, CenterKind c);

// The circle over p in the invariant bundle.
GreatCircle orbit_circle(const PointGroup& g, const Vec3& p);

// Number of orbit points on the circle over the center, by restricting the
// orbit of a point of that circle.
long long orbit_circle_polygon(const PointGroup& g, CenterKind c);

// Fractions of 2π by which the elements that advance one step along the
// orbit circle rotate the orthogonal circle, sorted, in [0,1).
std::vector<Rational> screw_angles(const PointGroup& g, CenterKind c);

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;  // counter-clockwise seen from outside
    std::size_t edge_count() const;
    bool operator==(const Mesh&) const = default;
};

// {x : ⟨x,at⟩ = 1, ⟨x,u⟩ ≤ 1 for all u in the orbit}, in an orthonormal
// basis of the tangent hyperplane at `at`.
Mesh polar_cell(const Orbit& o, const Vec4& at);
// Same cell with vertices in R⁴.
std::vector<Vec4> polar_cell_vertices4(const Orbit& o, const Vec4& at);
// All vertices of the polar orbit polytope, projected to S³.
std::vector<Vec4> polar_polytope_vertices(const PointGroup& g, const Vec4& v);

// Orbit class index of every point; classes numbered by first occurrence.
std::vector<int> color_orbits(const PointGroup& g, const std::vector<Vec4>& points);

enum class MeshFormat { Off, Obj };
void export_mesh(const Mesh& m, MeshFormat f, std::ostream& out);
std::string export_mesh(const Mesh& m, MeshFormat f);
Mesh parse_mesh(const std::string& text, MeshFormat f);

}  // namespace pg4
