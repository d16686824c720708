#include "pg4/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pg4 {

namespace {

Vec3 neg(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

bool close3(const Vec3& a, const Vec3& b, double tol) {
    return std::abs(a[0] - b[0]) < tol && std::abs(a[1] - b[1]) < tol && std::abs(a[2] - b[2]) < tol;
}

// Rotation v ↦ a v ā on pure quaternions.
Vec3 rotate(const Vec4& a, const Vec3& v) { return vector_part(qmul(qmul(a, pure(v)), qconj(a))); }

Vec4 exp_pure(const Vec3& u, double t) { return {std::cos(t), u[0] * std::sin(t), u[1] * std::sin(t), u[2] * std::sin(t)}; }

}  // namespace

Vec3 normalize3(const Vec3& v) {
    double n = std::sqrt(dot3(v, v));
    if (n < 1e-300) throw std::domain_error("zero vector");
    return {v[0] / n, v[1] / n, v[2] / n};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec4 pure(const Vec3& v) { return {0, v[0], v[1], v[2]}; }
Vec3 vector_part(const Vec4& x) { return {x[1], x[2], x[3]}; }
double dot4(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Vec4 normalize4(const Vec4& v) {
    double n = std::sqrt(dot4(v, v));
    if (n < 1e-300) throw std::domain_error("zero vector");
    return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
}

GreatCircle GreatCircle::make(const Vec3& p, const Vec3& q, bool oriented) {
    GreatCircle k;
    k.p = normalize3(p);
    k.q = normalize3(q);
    k.oriented = oriented;
    if (!oriented) {
        for (double c : k.p) {
            if (std::abs(c) < 1e-12) continue;
            if (c < 0) {
                k.p = neg(k.p);
                k.q = neg(k.q);
            }
            break;
        }
    }
    return k;
}

bool GreatCircle::same(const GreatCircle& o, double tol) const {
    if (close3(p, o.p, tol) && close3(q, o.q, tol)) return true;
    if (oriented && o.oriented) return false;
    return close3(p, neg(o.p), tol) && close3(q, neg(o.q), tol);
}

Vec4 circle_base_point(const GreatCircle& k) {
    Vec3 s{k.p[0] + k.q[0], k.p[1] + k.q[1], k.p[2] + k.q[2]};
    if (dot3(s, s) > 1e-12) return pure(normalize3(s));
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 e{0, 0, 0};
        e[axis] = 1;
        double d = dot3(e, k.p);
        Vec3 u{e[0] - d * k.p[0], e[1] - d * k.p[1], e[2] - d * k.p[2]};
        if (dot3(u, u) > 1e-6) return pure(normalize3(u));
    }
    throw std::logic_error("no base point");
}

Vec4 circle_sample(const GreatCircle& k, double theta) { return qmul(circle_base_point(k), exp_pure(k.q, theta)); }

double circle_residual(const GreatCircle& k, const Vec4& x) {
    Vec4 y = qmul(qmul(qconj(pure(k.p)), x), pure(k.q));
    double s = 0;
    for (int c = 0; c < 4; ++c) s += (y[c] - x[c]) * (y[c] - x[c]);
    return std::sqrt(s);
}

Vec3 hopf_map(const Vec4& x, const Vec3& q0) { return rotate(x, q0); }

GreatCircle transform_circle(const Transform4& g, const GreatCircle& k) {
    Vec4 l = g.l().to_double(), r = g.r().to_double();
    Vec3 p = k.p, q = k.q;
    if (g.reversing()) {
        // x ↦ x̄ takes the oriented circle K_p^q to K_{−q}^{−p}.
        p = neg(k.q);
        q = neg(k.p);
    }
    return GreatCircle::make(rotate(qconj(l), p), rotate(qconj(r), q), k.oriented);
}

double circle_distance(const GreatCircle& a, const GreatCircle& b) {
    auto dist = [](const Vec3& u, const Vec3& v) { return std::acos(std::clamp(dot3(u, v), -1.0, 1.0)) / 2; };
    const double tol = 1e-9;
    if (close3(a.q, b.q, tol)) return dist(a.p, b.p);
    if (close3(a.q, neg(b.q), tol)) return dist(a.p, neg(b.p));
    if (close3(a.p, b.p, tol)) return dist(a.q, b.q);
    if (close3(a.p, neg(b.p), tol)) return dist(a.q, neg(b.q));
    throw std::domain_error("circles are not in a common Hopf bundle");
}

double point_circle_distance(const Vec4& x, const GreatCircle& k) {
    Vec4 u = circle_sample(k, 0), w = circle_sample(k, std::numbers::pi / 2);
    double a = dot4(x, u), b = dot4(x, w);
    // atan2 of the orthogonal and in-plane parts stays accurate near 0.
    double s = 0;
    for (int c = 0; c < 4; ++c) {
        double e = x[c] - a * u[c] - b * w[c];
        s += e * e;
    }
    return std::atan2(std::sqrt(s), std::sqrt(a * a + b * b));
}

double torus_distance(const Vec4& x, const CliffordTorus& t) {
    return std::abs(point_circle_distance(x, GreatCircle::make(t.p, t.q)) - std::numbers::pi / 4);
}

double stabilizer_rotation_angle(double phi, double theta) { return theta - phi; }

std::array<double, 2> tangential_slice_map(const Vec3& v) {
    if (std::abs(1 + v[0]) < 1e-12) throw std::domain_error("tangential slice map undefined at (-1,0,0)");
    return {v[1] / (1 + v[0]), v[2] / (1 + v[0])};
}

}  // namespace pg4
