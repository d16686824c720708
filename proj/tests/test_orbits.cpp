#include "doctest.h"

#include "pg4/catalog.hpp"
#include "pg4/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

using namespace pg4;

namespace {

PointGroup tub(const std::string& family, long long n) {
    return build(GroupSpec::parse("tub:" + family + ":n=" + std::to_string(n)));
}

double dist4(const Vec4& a, const Vec4& b) {
    double s = 0;
    for (int c = 0; c < 4; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return std::sqrt(s);
}

double dist3(const Vec3& a, const Vec3& b) {
    return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

bool contains(const std::vector<Vec4>& pts, const Vec4& x) {
    return std::any_of(pts.begin(), pts.end(), [&](const Vec4& p) { return dist4(p, x) < 1e-7; });
}

std::map<std::size_t, int> face_sizes(const Mesh& m) {
    std::map<std::size_t, int> out;
    for (const auto& f : m.faces) ++out[f.size()];
    return out;
}

std::vector<int> class_sizes(const std::vector<int>& colors) {
    std::vector<int> sizes(*std::max_element(colors.begin(), colors.end()) + 1, 0);
    for (int c : colors) ++sizes[c];
    return sizes;
}

const Vec4 kOne{1, 0, 0, 0};

}  // namespace

TEST_CASE("orbit examples") {
    Orbit o = orbit(tub("+-[TxC]", 1), kOne);
    CHECK(o.points.size() == 24);
    CHECK(orbit(tub("+-[OxC]", 2), default_start()).points.size() == 96);
    Orbit one = orbit(generate({}), default_start());
    REQUIRE(one.points.size() == 1);
    CHECK(dist4(one.points[0], default_start()) < 1e-12);
}

TEST_CASE("orbits are closed and their sizes divide the order") {
    for (const std::string s : {"tub:+-[IxC]:n=3", "tub:+-1/3[TxC]:n=2", "tor:X/c2mm:m=3,n=5", "tor:*/p4gmU:n=3",
                                "poly:+-1/3[TxT]", "axial:prism:+-O"}) {
        PointGroup g = build(GroupSpec::parse(s));
        for (const Vec4& v : {default_start(), kOne, normalize4({1, 1, 0, 0})}) {
            Orbit o = orbit(g, v);
            CAPTURE(s);
            CHECK(g.order() % o.points.size() == 0);
            for (const auto& t : g.generators())
                for (const auto& x : o.points) CHECK(contains(o.points, pg4::apply(t, x)));
        }
        CHECK(orbit(g, default_start()).points.size() == g.order());
    }
}

TEST_CASE("orbits of points on one circle of the invariant bundle are congruent") {
    PointGroup g = tub("+-1/2[OxC]", 3);
    Vec4 v = default_start();
    for (double th : {0.1, 0.7, 2.0}) {
        Vec4 e{std::cos(th), std::sin(th), 0, 0};
        Orbit a = orbit(g, v), b = orbit(g, qmul(v, e));
        REQUIRE(a.points.size() == b.points.size());
        for (const auto& x : a.points) CHECK(contains(b.points, qmul(x, e)));
    }
}

TEST_CASE("induced groups") {
    InducedGroup a = induced_group(tub("+-[IxC]", 5));
    CHECK(a.name == "+I");
    CHECK(a.elements.size() == 60);
    CHECK(induced_group(tub("+-[TxD]", 4)).name == "±T");
    CHECK(induced_group(tub("+-1/2[OxC]", 1)).name == "+O");
    for (const auto& family : tubical_families())
        for (long long n = 2; n <= 4; ++n) {
            PointGroup g = tub(family, n);
            CAPTURE(family);
            CHECK(induced_group(g).elements.size() * 2 * n == g.order());
        }
    CHECK_THROWS(induced_group(build(GroupSpec::parse("tor:1:m=2,n=5,s=1"))));
}

TEST_CASE("orbit circle polygons") {
    for (long long n = 1; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(orbit_circle_polygon(tub("+-[IxC]", n), CenterKind::Five) == std::lcm(2 * n, 10LL));
        CHECK(orbit_circle_polygon(tub("+-1/2[OxC]", n), CenterKind::Four) == 8 * n / std::gcd(n - 2, 4LL));
        PointGroup t = tub("+-1/3[TxC]", n);
        CHECK(orbit_circle_polygon(t, CenterKind::ThreeI) == 6 * n / std::gcd(n - 1, 3LL));
        CHECK(orbit_circle_polygon(t, CenterKind::ThreeII) == 6 * n / std::gcd(n - 2, 3LL));
    }
    CHECK(orbit_circle_polygon(tub("+-[IxC]", 7), CenterKind::Five) == 70);
    CHECK(orbit_circle_polygon(tub("+-1/2[OxC]", 6), CenterKind::Four) == 12);
    CHECK(orbit_circle_polygon(tub("+-1/3[TxC]", 4), CenterKind::ThreeI) == 8);
}

TEST_CASE("rotation centers") {
    CHECK(parse_center_kind("3II") == CenterKind::ThreeII);
    CHECK(std::string(center_kind_name(CenterKind::ThreeI)) == "3I");
    CHECK_THROWS_AS(parse_center_kind("7"), std::invalid_argument);
    Vec3 p = rotation_center(tub("+-[OxC]", 2), CenterKind::Four);
    CHECK(dist3(p, {1, 0, 0}) < 1e-9);
    CHECK_THROWS(rotation_center(tub("+-[TxC]", 2), CenterKind::Five));
}

TEST_CASE("screw angles") {
    CHECK(screw_angles(tub("+-[IxC]", 12), CenterKind::Five) == std::vector<Rational>{Rational(2, 5) + Rational(1, 120)});
    std::vector<Rational> want;
    for (int k = 0; k < 5; ++k) want.push_back(Rational(k, 5) + Rational(1, 50));
    CHECK(screw_angles(tub("+-[IxC]", 25), CenterKind::Five) == want);
    CHECK(screw_angles(tub("+-1/2[OxC]", 3), CenterKind::Four) == std::vector<Rational>{Rational(3, 4) + Rational(1, 24)});
}

TEST_CASE("polar cells") {
    Mesh d = polar_cell(orbit(tub("+-[IxC]", 1), kOne), kOne);
    CHECK(d.vertices.size() == 20);
    CHECK(d.faces.size() == 12);
    CHECK(d.edge_count() == 30);
    CHECK(face_sizes(d) == std::map<std::size_t, int>{{5, 12}});
    double edge = -1;
    for (const auto& f : d.faces)
        for (std::size_t k = 0; k < f.size(); ++k) {
            double e = dist3(d.vertices[f[k]], d.vertices[f[(k + 1) % f.size()]]);
            if (edge < 0) edge = e;
            CHECK(std::abs(e - edge) < 1e-6);
        }

    Mesh tc = polar_cell(orbit(tub("+-[OxC]", 1), kOne), kOne);
    CHECK(face_sizes(tc) == std::map<std::size_t, int>{{3, 8}, {8, 6}});
    CHECK(tc.vertices.size() == 24);

    Mesh oc = polar_cell(orbit(tub("+-[TxC]", 1), kOne), kOne);
    CHECK(face_sizes(oc) == std::map<std::size_t, int>{{3, 8}});
    CHECK(oc.vertices.size() == 6);
}

TEST_CASE("generic cells are closed convex polyhedra") {
    for (const std::string s : {"tub:+-[IxC]:n=4", "tub:+-1/2[OxD]:n=3", "tor:+/p2gg:m=2,n=3", "poly:+-[TxT]"}) {
        Orbit o = orbit(build(GroupSpec::parse(s)), default_start());
        for (std::size_t k = 0; k < o.points.size(); k += std::max<std::size_t>(1, o.points.size() / 4)) {
            Mesh m = polar_cell(o, o.points[k]);
            CAPTURE(s);
            CHECK(static_cast<long long>(m.vertices.size()) - static_cast<long long>(m.edge_count()) +
                      static_cast<long long>(m.faces.size()) == 2);
            // all vertices on or behind every face plane
            for (const auto& f : m.faces) {
                Vec3 a = m.vertices[f[0]], b = m.vertices[f[1]], c = m.vertices[f[2]];
                Vec3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
                Vec3 nrm{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
                for (const auto& v : m.vertices)
                    CHECK(dot3(nrm, {v[0] - a[0], v[1] - a[1], v[2] - a[2]}) < 1e-6);
                for (int vi : f) {
                    const Vec3& v = m.vertices[vi];
                    CHECK(std::abs(dot3(normalize3(nrm), {v[0] - a[0], v[1] - a[1], v[2] - a[2]})) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("cell errors") {
    Orbit single = orbit(generate({}), kOne);
    CHECK_THROWS_WITH(polar_cell(single, kOne), doctest::Contains("degenerate orbit"));
    Orbit o = orbit(tub("+-[TxC]", 1), kOne);
    CHECK_THROWS_WITH(polar_cell(o, default_start()), doctest::Contains("not in the orbit"));
}

TEST_CASE("orbit colorings") {
    PointGroup gi = tub("+-[IxC]", 1);
    auto pts = polar_polytope_vertices(gi, kOne);
    REQUIRE(pts.size() == 600);
    CHECK(class_sizes(color_orbits(gi, pts)) == std::vector<int>(5, 120));

    PointGroup go = tub("+-[OxC]", 1);
    auto p48 = polar_polytope_vertices(go, kOne);
    REQUIRE(p48.size() == 288);
    CHECK(class_sizes(color_orbits(go, p48)) == std::vector<int>(6, 48));

    Orbit o = orbit(gi, default_start());
    CHECK(class_sizes(color_orbits(gi, o.points)) == std::vector<int>{120});
}

TEST_CASE("mesh export") {
    Mesh tet;
    tet.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    tet.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    std::string off = export_mesh(tet, MeshFormat::Off);
    CHECK(off.rfind("OFF\n4 4 6\n", 0) == 0);
    CHECK(parse_mesh(off, MeshFormat::Off) == tet);
    CHECK(parse_mesh(export_mesh(tet, MeshFormat::Obj), MeshFormat::Obj) == tet);

    Mesh d = polar_cell(orbit(tub("+-[IxC]", 1), kOne), kOne);
    std::string doff = export_mesh(d, MeshFormat::Off);
    CHECK(doff.rfind("OFF\n20 12 30\n", 0) == 0);
    CHECK(parse_mesh(doff, MeshFormat::Off) == d);
    CHECK(export_mesh(polar_cell(orbit(tub("+-[IxC]", 1), kOne), kOne), MeshFormat::Off) == doff);
    CHECK_THROWS(parse_mesh("OFF\n3 1 0\n0 0 0\n", MeshFormat::Off));
}
