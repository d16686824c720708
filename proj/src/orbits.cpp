#include "pg4/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pg4 {

namespace {

constexpr double kMerge = 1e-7;

// Points of R⁴ merged within kMerge (max norm), via a grid of that size.
class PointIndex {
public:
    using Key = std::array<long long, 4>;

    int find(const Vec4& x) const {
        Key k = key(x);
        for (int d = 0; d < 81; ++d) {
            Key n = k;
            int code = d;
            for (int c = 0; c < 4; ++c) {
                n[c] += code % 3 - 1;
                code /= 3;
            }
            auto it = cells_.find(n);
            if (it == cells_.end()) continue;
            for (int idx : it->second)
                if (close(points_[idx], x)) return idx;
        }
        return -1;
    }

    // Index of x, inserting it if new.
    int insert(const Vec4& x) {
        int idx = find(x);
        if (idx >= 0) return idx;
        points_.push_back(x);
        cells_[key(x)].push_back(static_cast<int>(points_.size() - 1));
        return static_cast<int>(points_.size() - 1);
    }

    const std::vector<Vec4>& points() const { return points_; }

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 0;
            for (long long v : k) h = h * 1000003u ^ std::hash<long long>()(v);
            return h;
        }
    };

    static Key key(const Vec4& x) {
        return {std::llround(x[0] / kMerge), std::llround(x[1] / kMerge), std::llround(x[2] / kMerge),
                std::llround(x[3] / kMerge)};
    }
    static bool close(const Vec4& a, const Vec4& b) {
        for (int c = 0; c < 4; ++c)
            if (std::abs(a[c] - b[c]) > kMerge) return false;
        return true;
    }

    std::vector<Vec4> points_;
    std::unordered_map<Key, std::vector<int>, KeyHash> cells_;
};

Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

Mat3 rotation_matrix(const Vec4& a) {
    // columns are images of i, j, k under v ↦ ā v a
    Mat3 m{};
    for (int c = 0; c < 3; ++c) {
        Vec3 e{0, 0, 0};
        e[c] = 1;
        Vec3 img = vector_part(qmul(qmul(qconj(a), pure(e)), a));
        for (int r = 0; r < 3; ++r) m[r][c] = img[r];
    }
    return m;
}

double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Which factor carries the polyhedral group; the other one preserves i.
bool left_is_polyhedral(const PointGroup& g) {
    LeftRight lr = left_right_groups(g);
    bool lp = lr.left_type.polyhedral(), rp = lr.right_type.polyhedral();
    if (lp == rp) throw std::domain_error("not a tubical group");
    return lp;
}

// Factor of [l,r] acting on the bundle base, and the one acting along circles.
struct Sides {
    const Quat* base;
    const Quat* fiber;
};
Sides sides(const Transform4& t, bool left) { return left ? Sides{&t.l(), &t.r()} : Sides{&t.r(), &t.l()}; }

// Whether a factor of the circle side maps i to −i (has a j component).
bool flips_fiber(const Quat& q) {
    if (q.is_cyclo()) return q.as_cyclo().j;
    Vec4 v = q.to_double();
    return std::abs(v[0]) + std::abs(v[1]) < 0.5;
}

// Rotation order of v ↦ ā v a.
long long rotation_order(const Vec4& a) {
    double t = std::acos(std::clamp(std::abs(a[0]), 0.0, 1.0)) / std::numbers::pi;  // half-angle / π
    for (long long m = 1; m <= 1000; ++m)
        if (std::abs(m * t - std::round(m * t)) < 1e-7) return m;
    throw std::logic_error("rotation of infinite order");
}

struct Plane {
    Vec3 n;
    double d;
};

// Incremental convex hull; returns outward triangles.
std::vector<std::array<int, 3>> convex_hull(const std::vector<Vec3>& pts) {
    const double eps = 1e-9;
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw std::domain_error("degenerate orbit");
    int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
    double best = 0;
    for (int i = 0; i < n; ++i)
        if (double d = norm3(sub3(pts[i], pts[i0])); d > best) best = d, i1 = i;
    if (best < eps) throw std::domain_error("degenerate orbit");
    best = 0;
    for (int i = 0; i < n; ++i)
        if (double d = norm3(cross3(sub3(pts[i1], pts[i0]), sub3(pts[i], pts[i0]))); d > best) best = d, i2 = i;
    if (best < eps) throw std::domain_error("degenerate orbit");
    Vec3 nrm = cross3(sub3(pts[i1], pts[i0]), sub3(pts[i2], pts[i0]));
    best = 0;
    for (int i = 0; i < n; ++i)
        if (double d = std::abs(dot3(nrm, sub3(pts[i], pts[i0]))); d > best) best = d, i3 = i;
    if (best < eps) throw std::domain_error("degenerate orbit");

    Vec3 inside{0, 0, 0};
    for (int i : {i0, i1, i2, i3})
        for (int c = 0; c < 3; ++c) inside[c] += pts[i][c] / 4;

    struct Face {
        std::array<int, 3> v;
        Plane pl;
        bool alive;
    };
    std::vector<Face> faces;
    auto add_face = [&](int a, int b, int c) {
        Vec3 nn = cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a]));
        double len = norm3(nn);
        nn = {nn[0] / len, nn[1] / len, nn[2] / len};
        Face f{{a, b, c}, {nn, dot3(nn, pts[a])}, true};
        if (dot3(nn, inside) - f.pl.d > 0) {
            std::swap(f.v[1], f.v[2]);
            f.pl = {{-nn[0], -nn[1], -nn[2]}, -f.pl.d};
        }
        faces.push_back(f);
    };
    add_face(i0, i1, i2);
    add_face(i0, i1, i3);
    add_face(i0, i2, i3);
    add_face(i1, i2, i3);

    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (faces[f].alive && dot3(faces[f].pl.n, pts[p]) - faces[f].pl.d > eps) visible.push_back(f);
        if (visible.empty()) continue;
        std::set<std::pair<int, int>> edges;
        for (auto f : visible)
            for (int e = 0; e < 3; ++e) edges.insert({faces[f].v[e], faces[f].v[(e + 1) % 3]});
        for (auto f : visible) faces[f].alive = false;
        for (const auto& [a, b] : edges)
            if (!edges.count({b, a})) {
                Vec3 nn = cross3(sub3(pts[b], pts[a]), sub3(pts[p], pts[a]));
                double len = norm3(nn);
                nn = {nn[0] / len, nn[1] / len, nn[2] / len};
                faces.push_back({{a, b, p}, {nn, dot3(nn, pts[a])}, true});
            }
    }
    std::vector<std::array<int, 3>> out;
    for (const auto& f : faces)
        if (f.alive) out.push_back(f.v);
    return out;
}

std::array<Vec4, 3> tangent_basis(const Vec4& at) {
    std::array<Vec4, 3> basis;
    int found = 0;
    std::vector<Vec4> cand;
    for (int c = 0; c < 4; ++c) {
        Vec4 e{0, 0, 0, 0};
        e[c] = 1;
        cand.push_back(e);
    }
    for (const auto& e : cand) {
        if (found == 3) break;
        Vec4 u = e;
        double d = dot4(u, at);
        for (int c = 0; c < 4; ++c) u[c] -= d * at[c];
        for (int b = 0; b < found; ++b) {
            double db = dot4(u, basis[b]);
            for (int c = 0; c < 4; ++c) u[c] -= db * basis[b][c];
        }
        if (dot4(u, u) < 1e-6) continue;
        basis[found++] = normalize4(u);
    }
    return basis;
}

struct CellData {
    Mesh mesh;
    std::vector<Vec4> vertices4;
};

CellData compute_cell(const Orbit& o, const Vec4& at_in) {
    Vec4 at = normalize4(at_in);
    auto basis = tangent_basis(at);
    // Halfspaces ⟨y, a⟩ ≤ b with a the tangent part of u and b = 1 − ⟨at,u⟩.
    std::vector<Vec3> dual;
    bool at_found = false;
    for (const auto& u : o.points) {
        double b = 1 - dot4(at, u);
        if (b < 1e-9) {
            at_found = true;
            continue;
        }
        Vec3 a{dot4(u, basis[0]), dot4(u, basis[1]), dot4(u, basis[2])};
        dual.push_back({a[0] / b, a[1] / b, a[2] / b});
    }
    if (!at_found) throw std::domain_error("point is not in the orbit");
    auto tris = convex_hull(dual);

    std::vector<Plane> planes;
    std::vector<int> plane_of(tris.size());
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& v = tris[t];
        Vec3 nn = cross3(sub3(dual[v[1]], dual[v[0]]), sub3(dual[v[2]], dual[v[0]]));
        double len = norm3(nn);
        nn = {nn[0] / len, nn[1] / len, nn[2] / len};
        double d = dot3(nn, dual[v[0]]);
        if (d < 1e-9) throw std::domain_error("unbounded cell");
        int found = -1;
        for (std::size_t q = 0; q < planes.size(); ++q)
            if (norm3(sub3(planes[q].n, nn)) < 1e-6 && std::abs(planes[q].d - d) < 1e-6) {
                found = static_cast<int>(q);
                break;
            }
        if (found < 0) {
            planes.push_back({nn, d});
            found = static_cast<int>(planes.size() - 1);
        }
        plane_of[t] = found;
    }
    std::vector<Vec3> verts;
    for (const auto& pl : planes) verts.push_back({pl.n[0] / pl.d, pl.n[1] / pl.d, pl.n[2] / pl.d});

    // Deterministic vertex order.
    std::vector<int> order(verts.size());
    std::iota(order.begin(), order.end(), 0);
    auto rounded = [&](int i) {
        return std::array<long long, 3>{std::llround(verts[i][0] * 1e6), std::llround(verts[i][1] * 1e6),
                                        std::llround(verts[i][2] * 1e6)};
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rounded(a) < rounded(b); });
    std::vector<int> rank(verts.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);

    std::map<int, std::set<int>> incident;  // dual point -> planes
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int v : tris[t]) incident[v].insert(plane_of[t]);

    CellData out;
    for (int i : order) out.mesh.vertices.push_back(verts[i]);
    for (const auto& [dp, pls] : incident) {
        if (pls.size() < 3) continue;
        Vec3 nrm = dual[dp];
        double len = norm3(nrm);
        nrm = {nrm[0] / len, nrm[1] / len, nrm[2] / len};
        Vec3 cen{0, 0, 0};
        for (int q : pls)
            for (int c = 0; c < 3; ++c) cen[c] += verts[q][c] / static_cast<double>(pls.size());
        Vec3 e1 = sub3(verts[*pls.begin()], cen);
        e1 = normalize3(sub3(e1, {nrm[0] * dot3(e1, nrm), nrm[1] * dot3(e1, nrm), nrm[2] * dot3(e1, nrm)}));
        Vec3 e2 = cross3(nrm, e1);
        std::vector<std::pair<double, int>> ang;
        for (int q : pls) {
            Vec3 w = sub3(verts[q], cen);
            ang.push_back({std::atan2(dot3(w, e2), dot3(w, e1)), rank[q]});
        }
        std::sort(ang.begin(), ang.end());
        std::vector<int> face;
        for (const auto& a : ang) face.push_back(a.second);
        std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
        out.mesh.faces.push_back(face);
    }
    std::sort(out.mesh.faces.begin(), out.mesh.faces.end());
    for (const auto& y : out.mesh.vertices) {
        Vec4 x = at;
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 4; ++c) x[c] += y[b] * basis[b][c];
        out.vertices4.push_back(x);
    }
    return out;
}

}  // namespace

Vec4 default_start() { return normalize4({0.9, 0.31, 0.23, 0.17}); }

Orbit orbit(const PointGroup& g, const Vec4& v) {
    PointIndex idx;
    Vec4 base = normalize4(v);
    idx.insert(base);
    for (const auto& t : g.elements()) idx.insert(pg4::apply(t, base));
    return {base, idx.points()};
}

InducedGroup induced_group(const PointGroup& g) {
    bool left = left_is_polyhedral(g);
    InducedGroup out;
    std::set<std::array<long long, 9>> seen;
    for (const auto& t : g.elements()) {
        if (t.reversing()) throw std::domain_error("not a tubical group");
        Sides s = sides(t, left);
        Mat3 m = rotation_matrix(s.base->to_double());
        if (flips_fiber(*s.fiber))
            for (auto& row : m)
                for (double& x : row) x = -x;
        std::array<long long, 9> key;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) key[3 * r + c] = std::llround(m[r][c] * 1e6);
        if (!seen.insert(key).second) continue;
        out.elements.push_back(m);
        if (det3(m) < 0) out.chiral = false;
        bool minus_id = true;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (std::abs(m[r][c] + (r == c ? 1.0 : 0.0)) > 1e-9) minus_id = false;
        if (minus_id) out.contains_minus_identity = true;
    }
    std::size_t n = out.elements.size();
    bool pm = out.contains_minus_identity;
    if (n == 60) out.name = "+I";
    else if (n == 120) out.name = "±I";
    else if (n == 48) out.name = "±O";
    else if (n == 12) out.name = "+T";
    else if (n == 24) out.name = out.chiral ? "+O" : (pm ? "±T" : "TO");
    else out.name = "?";
    return out;
}

CenterKind parse_center_kind(const std::string& s) {
    if (s == "5") return CenterKind::Five;
    if (s == "4") return CenterKind::Four;
    if (s == "3I") return CenterKind::ThreeI;
    if (s == "3II") return CenterKind::ThreeII;
    if (s == "2") return CenterKind::Two;
    throw std::invalid_argument("unknown center kind '" + s + "' (expected 5, 4, 3I, 3II or 2)");
}

const char* center_kind_name(CenterKind c) {
    switch (c) {
        case CenterKind::Five: return "5";
        case CenterKind::Four: return "4";
        case CenterKind::ThreeI: return "3I";
        case CenterKind::ThreeII: return "3II";
        case CenterKind::Two: return "2";
    }
    return "?";
}

Vec3 rotation_center(const PointGroup& g, CenterKind c) {
    bool left = left_is_polyhedral(g);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    long long want = 0;
    Vec3 pref{};
    switch (c) {
        case CenterKind::Five: want = 5, pref = {0, 1, phi}; break;
        case CenterKind::Four: want = 4, pref = {1, 0, 0}; break;
        case CenterKind::ThreeI: want = 3, pref = {-1, -1, -1}; break;
        case CenterKind::ThreeII: want = 3, pref = {1, 1, 1}; break;
        case CenterKind::Two: want = 2, pref = {0, 1, 1}; break;
    }
    pref = normalize3(pref);
    // Maximal rotation order about each axis direction.
    std::map<std::array<long long, 3>, std::pair<Vec3, long long>> axes;
    for (const auto& t : g.elements()) {
        Vec4 a = sides(t, left).base->to_double();
        long long ro = rotation_order(a);
        if (ro == 1) continue;
        Vec3 u = normalize3(vector_part(a));
        for (Vec3 p : {u, Vec3{-u[0], -u[1], -u[2]}}) {
            std::array<long long, 3> key{std::llround(p[0] * 1e6), std::llround(p[1] * 1e6), std::llround(p[2] * 1e6)};
            auto& slot = axes[key];
            slot.first = p;
            slot.second = std::max(slot.second, ro);
        }
    }
    const Vec3* best = nullptr;
    double best_dot = -2;
    for (const auto& [key, val] : axes) {
        if (val.second != want) continue;
        double d = dot3(val.first, pref);
        if (d > best_dot + 1e-9) best_dot = d, best = &val.first;
    }
    if (!best) throw std::domain_error(std::string("no ") + center_kind_name(c) + "-fold rotation center");
    return *best;
}

GreatCircle orbit_circle(const PointGroup& g, const Vec3& p) {
    bool left = left_is_polyhedral(g);
    return left ? GreatCircle::make(p, {1, 0, 0}, true) : GreatCircle::make({1, 0, 0}, p, true);
}

long long orbit_circle_polygon(const PointGroup& g, CenterKind c) {
    Vec3 p = rotation_center(g, c);
    GreatCircle k = orbit_circle(g, p);
    Orbit o = orbit(g, circle_sample(k, 0.3));
    long long count = 0;
    for (const auto& x : o.points)
        if (circle_residual(k, x) < kMerge) ++count;
    return count;
}

std::vector<Rational> screw_angles(const PointGroup& g, CenterKind c) {
    bool left = left_is_polyhedral(g);
    Vec3 p = rotation_center(g, c);
    long long polygon = orbit_circle_polygon(g, c);
    const Rational step(1, polygon);
    std::set<Rational> out;
    for (const auto& t : g.elements()) {
        Sides s = sides(t, left);
        if (!s.fiber->is_cyclo() || s.fiber->as_cyclo().j) continue;
        Vec4 a = s.base->to_double();
        Vec3 u = vector_part(a);
        double along = dot3(u, p);
        if (norm3(sub3(u, {along * p[0], along * p[1], along * p[2]})) > 1e-9) continue;
        // base factor is exp(p·φπ), fiber factor exp(i·θπ)
        Rational phi = angle_of(*s.base);
        if (along < 0) phi = -phi;
        Rational theta = s.fiber->as_cyclo().t;
        // On the circle over p the element advances by (θ−φ)π, and it turns
        // the absolutely orthogonal circle over −p by (θ+φ)π.
        Rational advance = ((theta - phi) / Rational(2)).mod(1);
        if (!left) advance = ((phi - theta) / Rational(2)).mod(1);
        if (!(advance == step)) continue;
        out.insert(((theta + phi) / Rational(2)).mod(1));
    }
    return {out.begin(), out.end()};
}

std::size_t Mesh::edge_count() const {
    std::size_t half = 0;
    for (const auto& f : faces) half += f.size();
    return half / 2;
}

Mesh polar_cell(const Orbit& o, const Vec4& at) { return compute_cell(o, at).mesh; }

std::vector<Vec4> polar_cell_vertices4(const Orbit& o, const Vec4& at) { return compute_cell(o, at).vertices4; }

std::vector<Vec4> polar_polytope_vertices(const PointGroup& g, const Vec4& v) {
    Orbit o = orbit(g, v);
    PointIndex idx;
    for (const auto& x : polar_cell_vertices4(o, o.base)) {
        Vec4 y = normalize4(x);
        idx.insert(y);
        for (const auto& t : g.elements()) idx.insert(pg4::apply(t, y));
    }
    return idx.points();
}

std::vector<int> color_orbits(const PointGroup& g, const std::vector<Vec4>& points) {
    PointIndex idx;
    for (const auto& x : points)
        if (idx.insert(x) != static_cast<int>(idx.points().size()) - 1)
            throw std::domain_error("duplicate point in coloring input");
    std::vector<int> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < points.size(); ++i)
        for (const auto& t : g.generators()) {
            int j = idx.find(pg4::apply(t, points[i]));
            if (j < 0) throw std::domain_error("points are not closed under the group");
            int a = root(static_cast<int>(i)), b = root(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> color(points.size());
    std::map<int, int> number;
    for (std::size_t i = 0; i < points.size(); ++i) {
        int r = root(static_cast<int>(i));
        auto it = number.try_emplace(r, static_cast<int>(number.size())).first;
        color[i] = it->second;
    }
    return color;
}

void export_mesh(const Mesh& m, MeshFormat f, std::ostream& out) {
    char buf[96];
    if (f == MeshFormat::Off) out << "OFF\n" << m.vertices.size() << " " << m.faces.size() << " " << m.edge_count() << "\n";
    for (const auto& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g", v[0], v[1], v[2]);
        out << (f == MeshFormat::Obj ? "v " : "") << buf << "\n";
    }
    for (const auto& face : m.faces) {
        if (f == MeshFormat::Off) {
            out << face.size();
            for (int i : face) out << " " << i;
        } else {
            out << "f";
            for (int i : face) out << " " << i + 1;
        }
        out << "\n";
    }
}

std::string export_mesh(const Mesh& m, MeshFormat f) {
    std::ostringstream o;
    export_mesh(m, f, o);
    return o.str();
}

Mesh parse_mesh(const std::string& text, MeshFormat f) {
    Mesh m;
    std::istringstream in(text);
    auto bad = [](const std::string& why) { return std::invalid_argument("malformed mesh: " + why); };
    if (f == MeshFormat::Off) {
        std::string head;
        std::size_t nv = 0, nf = 0, ne = 0;
        if (!(in >> head) || head != "OFF") throw bad("missing OFF header");
        if (!(in >> nv >> nf >> ne)) throw bad("missing counts");
        for (std::size_t i = 0; i < nv; ++i) {
            Vec3 v;
            if (!(in >> v[0] >> v[1] >> v[2])) throw bad("vertex " + std::to_string(i));
            m.vertices.push_back(v);
        }
        for (std::size_t i = 0; i < nf; ++i) {
            std::size_t k = 0;
            if (!(in >> k)) throw bad("face " + std::to_string(i));
            std::vector<int> face(k);
            for (auto& x : face)
                if (!(in >> x) || x < 0 || static_cast<std::size_t>(x) >= nv) throw bad("face " + std::to_string(i));
            m.faces.push_back(face);
        }
        return m;
    }
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v[0] >> v[1] >> v[2])) throw bad("vertex record");
            m.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> face;
            std::string tok;
            while (ls >> tok) face.push_back(std::stoi(tok.substr(0, tok.find('/'))) - 1);
            m.faces.push_back(face);
        }
    }
    for (const auto& face : m.faces)
        for (int i : face)
            if (i < 0 || static_cast<std::size_t>(i) >= m.vertices.size()) throw bad("face index");
    return m;
}

}  // namespace pg4
