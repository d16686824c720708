#pragma once

#include "pg4/transform.hpp"

#include <array>

namespace pg4 {

// Pure unit quaternion xi + yj + zk.
using Vec3 = std::array<double, 3>;

Vec3 normalize3(const Vec3& v);
double dot3(const Vec3& a, const Vec3& b);
Vec4 pure(const Vec3& v);
Vec3 vector_part(const Vec4& x);
double dot4(const Vec4& a, const Vec4& b);
Vec4 normalize4(const Vec4& v);

// K_p^q = {x : [p,q]x = x}. Unoriented circles are stored with the sign of
// (p,q) chosen so that the first non-zero coordinate of p is positive.
struct GreatCircle {
    Vec3 p{1, 0, 0}, q{1, 0, 0};
    bool oriented = false;

    static GreatCircle make(const Vec3& p, const Vec3& q, bool oriented = false);
    // Same circle; orientation is compared only if both are oriented.
    bool same(const GreatCircle& o, double tol = 1e-9) const;
};

// T_p^q: points at distance π/4 from K_p^q.
struct CliffordTorus {
    Vec3 p{1, 0, 0}, q{1, 0, 0};
};

// x₀ is the half-turn about unit(p+q); for p = −q a half-turn about the
// first coordinate axis not parallel to p, projected orthogonally to p.
Vec4 circle_base_point(const GreatCircle& k);
// x₀ exp(qθ)
Vec4 circle_sample(const GreatCircle& k, double theta);
// |[p,q]x − x|
double circle_residual(const GreatCircle& k, const Vec4& x);

// x q0 x̄
Vec3 hopf_map(const Vec4& x, const Vec3& q0);

GreatCircle transform_circle(const Transform4& g, const GreatCircle& k);

// Circles of one left bundle (same q) or one right bundle (same p).
double circle_distance(const GreatCircle& a, const GreatCircle& b);
// Distance from x to the point set K.
double point_circle_distance(const Vec4& x, const GreatCircle& k);
// |dist(x, K_p^q) − π/4|
double torus_distance(const Vec4& x, const CliffordTorus& t);

// Rotation angle of [exp pφ, exp qθ] along the oriented circle K_p^q.
double stabilizer_rotation_angle(double phi, double theta);

// (x, y, z) ↦ (y/(1+x), z/(1+x)) in the tangent plane at (1,0,0).
std::array<double, 2> tangential_slice_map(const Vec3& v);

}  // namespace pg4
