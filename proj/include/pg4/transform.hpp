#pragma once

#include "pg4/quat.hpp"

#include <array>
#include <string>

namespace pg4 {

// [l,r]: x ↦ l̄ x r, or *[l,r]: x ↦ l̄ x̄ r when reversing.
// The sign of the pair is canonical: of (l,r) and (−l,−r) the one with the
// smaller encoding of l (then r) is stored.
class Transform4 {
public:
    Transform4() = default;
    Transform4(bool reversing, const Quat& l, const Quat& r);

    static Transform4 identity() { return {}; }
    static Transform4 pair(const Quat& l, const Quat& r) { return Transform4(false, l, r); }
    static Transform4 star(const Quat& l, const Quat& r) { return Transform4(true, l, r); }

    bool reversing() const { return rev_; }
    const Quat& l() const { return l_; }
    const Quat& r() const { return r_; }

    bool operator==(const Transform4& o) const { return rev_ == o.rev_ && l_ == o.l_ && r_ == o.r_; }
    std::strong_ordering operator<=>(const Transform4& o) const;
    std::size_t hash() const;
    std::string str() const;

private:
    bool rev_ = false;
    Quat l_, r_;
};

// Apply g first, then h.
Transform4 compose(const Transform4& g, const Transform4& h);
Transform4 inverse(const Transform4& g);
Transform4 conjugate(const Transform4& g, const Transform4& h);  // h⁻¹ g h

Vec4 apply(const Transform4& g, const Vec4& x);
using Mat4 = std::array<std::array<double, 4>, 4>;
Mat4 to_matrix(const Transform4& g);

// Geometric type of one element.
// Rotations: the unsigned angles (a,b) of l and r, normalized so that a<b or
// a=b≤1/2. Reversing elements: c with the element of type R̄_{(1−c)π}.
struct ElementCode {
    bool reversing = false;
    Rational a, b;
    Rational c;
    auto operator<=>(const ElementCode& o) const {
        if (reversing != o.reversing) return reversing ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!reversing) {
            if (auto x = a <=> o.a; x != 0) return x;
            return b <=> o.b;
        }
        return c <=> o.c;
    }
    bool operator==(const ElementCode& o) const { return (*this <=> o) == 0; }
    std::string str() const;
};

ElementCode element_code(const Transform4& g);

nlohmann::json transform_to_json(const Transform4& g);
Transform4 transform_from_json(const nlohmann::json& j);

}  // namespace pg4

template <>
struct std::hash<pg4::Transform4> {
    std::size_t operator()(const pg4::Transform4& g) const { return g.hash(); }
};
