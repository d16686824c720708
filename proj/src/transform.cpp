#include "pg4/transform.hpp"

#include <numeric>
#include <stdexcept>

namespace pg4 {

Transform4::Transform4(bool reversing, const Quat& l, const Quat& r) : rev_(reversing), l_(l), r_(r) {
    Quat nl = -l_;
    if (nl.encoding_cmp(l_) < 0) {
        l_ = std::move(nl);
        r_ = -r_;
    }
}

std::strong_ordering Transform4::operator<=>(const Transform4& o) const {
    if (rev_ != o.rev_) return rev_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = l_.encoding_cmp(o.l_); c != 0) return c;
    return r_.encoding_cmp(o.r_);
}

std::size_t Transform4::hash() const {
    return (l_.hash() * 0x100000001b3ull) ^ (r_.hash() + 0x9e3779b9u) ^ (rev_ ? 0x5bd1e995u : 0u);
}

std::string Transform4::str() const {
    return std::string(rev_ ? "*" : "") + "[" + l_.str() + ", " + r_.str() + "]";
}

Transform4 compose(const Transform4& g, const Transform4& h) {
    if (!g.reversing() && !h.reversing()) return Transform4(false, g.l() * h.l(), g.r() * h.r());
    if (!g.reversing() && h.reversing()) return Transform4(true, g.r() * h.l(), g.l() * h.r());
    if (g.reversing() && !h.reversing()) return Transform4(true, g.l() * h.l(), g.r() * h.r());
    return Transform4(false, g.r() * h.l(), g.l() * h.r());
}

Transform4 inverse(const Transform4& g) {
    if (!g.reversing()) return Transform4(false, conj(g.l()), conj(g.r()));
    return Transform4(true, conj(g.r()), conj(g.l()));
}

Transform4 conjugate(const Transform4& g, const Transform4& h) { return compose(compose(inverse(h), g), h); }

Vec4 apply(const Transform4& g, const Vec4& x) {
    Vec4 l = g.l().to_double();
    Vec4 r = g.r().to_double();
    Vec4 y = g.reversing() ? qconj(x) : x;
    return qmul(qmul(qconj(l), y), r);
}

Mat4 to_matrix(const Transform4& g) {
    Mat4 m{};
    for (int c = 0; c < 4; ++c) {
        Vec4 e{0, 0, 0, 0};
        e[c] = 1;
        Vec4 col = pg4::apply(g, e);
        for (int r = 0; r < 4; ++r) m[r][c] = col[r];
    }
    return m;
}

ElementCode element_code(const Transform4& g) {
    ElementCode code;
    code.reversing = g.reversing();
    if (g.reversing()) {
        // trace(x ↦ l̄x̄r) = −2 Re(lr), so the rotation angle α of the normal
        // form satisfies cos α = −cos(cπ) with c = angle_of(lr).
        code.c = angle_of(g.l() * g.r());
        return code;
    }
    Rational a = angle_of(g.l());
    Rational b = angle_of(g.r());
    if (a > b || (a == b && a > Rational(1, 2))) {
        a = Rational(1) - a;
        b = Rational(1) - b;
    }
    code.a = a;
    code.b = b;
    return code;
}

std::string ElementCode::str() const {
    if (reversing) return "*" + c.str();
    BigInt d = lcm(a.den(), b.den());
    std::string s = BigInt(a.num() * (d / a.den())).str() + "|" + BigInt(b.num() * (d / b.den())).str();
    if (d != 1) s += "/" + d.str();
    return s;
}

nlohmann::json transform_to_json(const Transform4& g) {
    return {{"star", g.reversing()}, {"l", quat_to_json(g.l())}, {"r", quat_to_json(g.r())}};
}

Transform4 transform_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("l") || !j.contains("r"))
        throw std::invalid_argument("transformation needs 'l' and 'r'");
    return Transform4(j.value("star", false), quat_from_json(j.at("l")), quat_from_json(j.at("r")));
}

}  // namespace pg4
