#include "pg4/quat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pg4 {

namespace {

const FieldElem& half_sqrt2() {
    static const FieldElem v = FieldElem::sqrt2() * FieldElem(Rational(1, 2));
    return v;
}

// cos and sin of kπ/4.
std::pair<FieldElem, FieldElem> eighth_root(int k) {
    const FieldElem& h = half_sqrt2();
    switch (k & 7) {
        case 0: return {1, 0};
        case 1: return {h, h};
        case 2: return {0, 1};
        case 3: return {-h, h};
        case 4: return {-1, 0};
        case 5: return {-h, -h};
        case 6: return {0, -1};
        default: return {h, -h};
    }
}

int match_eighth_root(const FieldElem& c, const FieldElem& s) {
    for (int k = 0; k < 8; ++k) {
        auto [ck, sk] = eighth_root(k);
        if (ck == c && sk == s) return k;
    }
    return -1;
}

struct AngleEntry {
    FieldElem cosine;
    Rational angle;
};

const std::vector<AngleEntry>& angle_table() {
    static const std::vector<AngleEntry> table = [] {
        FieldElem q(Rational(1, 4));
        FieldElem s5 = FieldElem::sqrt5();
        FieldElem gold = (s5 + FieldElem(1)) * q;   // cos(π/5)
        FieldElem gold2 = (s5 - FieldElem(1)) * q;  // cos(2π/5)
        return std::vector<AngleEntry>{
            {FieldElem(1), Rational(0)},
            {FieldElem(-1), Rational(1)},
            {FieldElem(0), Rational(1, 2)},
            {FieldElem(Rational(1, 2)), Rational(1, 3)},
            {FieldElem(Rational(-1, 2)), Rational(2, 3)},
            {half_sqrt2(), Rational(1, 4)},
            {-half_sqrt2(), Rational(3, 4)},
            {gold, Rational(1, 5)},
            {-gold, Rational(4, 5)},
            {gold2, Rational(2, 5)},
            {-gold2, Rational(3, 5)},
        };
    }();
    return table;
}

AlgQuat alg_mul(const AlgQuat& a, const AlgQuat& b) {
    return AlgQuat{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                   a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                   a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                   a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

}  // namespace

AngleFraction angle_mod2(const Rational& t) {
    if (t.sign() >= 0 && t < Rational(2)) return t;
    return t.mod(2);
}

Quat Quat::cyclo(const Rational& t, bool j) {
    Quat q;
    q.v_ = CycloQuat{angle_mod2(t), j};
    return q;
}

Quat Quat::alg(const FieldElem& w, const FieldElem& x, const FieldElem& y, const FieldElem& z) {
    if (y.is_zero() && z.is_zero()) {
        int k = match_eighth_root(w, x);
        if (k >= 0) return cyclo(Rational(k, 4), false);
    } else if (w.is_zero() && x.is_zero()) {
        int k = match_eighth_root(y, z);
        if (k >= 0) return cyclo(Rational(k, 4), true);
    }
    Quat q;
    q.v_ = AlgQuat{w, x, y, z};
    return q;
}

bool Quat::promotable() const {
    if (!is_cyclo()) return true;
    const BigInt& d = as_cyclo().t.den();
    return d == 1 || d == 2 || d == 4;
}

AlgQuat Quat::to_alg() const {
    if (!is_cyclo()) return as_alg();
    if (!promotable())
        throw std::domain_error("cannot promote exp(" + as_cyclo().t.str() + "·πi) to algebraic form");
    const CycloQuat& c = as_cyclo();
    int k = (c.t * Rational(4)).num().convert_to<int>();
    auto [co, si] = eighth_root(k);
    if (c.j) return AlgQuat{0, 0, co, si};
    return AlgQuat{co, si, 0, 0};
}

Vec4 Quat::to_double() const {
    if (!is_cyclo()) {
        const AlgQuat& a = as_alg();
        return {a.w.to_double(), a.x.to_double(), a.y.to_double(), a.z.to_double()};
    }
    const CycloQuat& c = as_cyclo();
    double th = c.t.to_double() * std::numbers::pi;
    if (c.j) return {0, 0, std::cos(th), std::sin(th)};
    return {std::cos(th), std::sin(th), 0, 0};
}

std::string Quat::str() const {
    if (is_cyclo()) {
        const CycloQuat& c = as_cyclo();
        std::string s = "e(" + c.t.str() + ")";
        return c.j ? s + "j" : s;
    }
    const AlgQuat& a = as_alg();
    return "(" + a.w.str() + ", " + a.x.str() + ", " + a.y.str() + ", " + a.z.str() + ")";
}

std::strong_ordering Quat::encoding_cmp(const Quat& o) const {
    if (is_cyclo() != o.is_cyclo()) return is_cyclo() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_cyclo()) {
        const CycloQuat& a = as_cyclo();
        const CycloQuat& b = o.as_cyclo();
        if (a.j != b.j) return a.j ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.t <=> b.t;
    }
    const AlgQuat& a = as_alg();
    const AlgQuat& b = o.as_alg();
    if (auto c = a.w.encoding_cmp(b.w); c != 0) return c;
    if (auto c = a.x.encoding_cmp(b.x); c != 0) return c;
    if (auto c = a.y.encoding_cmp(b.y); c != 0) return c;
    return a.z.encoding_cmp(b.z);
}

std::size_t Quat::hash() const {
    if (is_cyclo()) {
        const CycloQuat& c = as_cyclo();
        return (hash_value(c.t.num()) * 31u + hash_value(c.t.den())) * 2u + (c.j ? 1u : 0u);
    }
    const AlgQuat& a = as_alg();
    std::size_t h = a.w.hash();
    h = h * 1000003u ^ a.x.hash();
    h = h * 1000003u ^ a.y.hash();
    h = h * 1000003u ^ a.z.hash();
    return h ^ 0x9e3779b97f4a7c15ull;
}

Quat operator*(const Quat& a, const Quat& b) {
    if (a.is_cyclo() && b.is_cyclo()) {
        const CycloQuat& x = a.as_cyclo();
        const CycloQuat& y = b.as_cyclo();
        if (!x.j && !y.j) return Quat::cyclo(x.t + y.t, false);
        if (!x.j && y.j) return Quat::cyclo(x.t + y.t, true);
        if (x.j && !y.j) return Quat::cyclo(x.t - y.t, true);
        return Quat::cyclo(x.t - y.t + Rational(1), false);
    }
    if (!a.promotable() || !b.promotable())
        throw std::domain_error("mixed quaternion representations: " + a.str() + " * " + b.str());
    AlgQuat p = alg_mul(a.to_alg(), b.to_alg());
    return Quat::alg(p.w, p.x, p.y, p.z);
}

Quat operator-(const Quat& a) {
    if (a.is_cyclo()) return Quat::cyclo(a.as_cyclo().t + Rational(1), a.as_cyclo().j);
    const AlgQuat& q = a.as_alg();
    return Quat::alg(-q.w, -q.x, -q.y, -q.z);
}

Quat conj(const Quat& a) {
    if (a.is_cyclo()) {
        const CycloQuat& c = a.as_cyclo();
        if (c.j) return Quat::cyclo(c.t + Rational(1), true);
        return Quat::cyclo(-c.t, false);
    }
    const AlgQuat& q = a.as_alg();
    return Quat::alg(q.w, -q.x, -q.y, -q.z);
}

FieldElem quat_real(const Quat& a) {
    if (a.is_cyclo() && a.as_cyclo().j) return FieldElem(0);
    return a.to_alg().w;
}

FieldElem quat_norm2(const Quat& a) {
    if (a.is_cyclo()) return FieldElem(1);
    const AlgQuat& q = a.as_alg();
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

AngleFraction angle_of(const Quat& q) {
    if (q.is_cyclo()) {
        const CycloQuat& c = q.as_cyclo();
        if (c.j) return Rational(1, 2);
        return c.t <= Rational(1) ? c.t : Rational(2) - c.t;
    }
    const FieldElem& w = q.as_alg().w;
    for (const auto& e : angle_table())
        if (e.cosine == w) return e.angle;
    throw std::domain_error("real part " + w.str() + " is not in the angle table");
}

nlohmann::json quat_to_json(const Quat& q) {
    if (q.is_cyclo()) {
        const CycloQuat& c = q.as_cyclo();
        return {{"cyc", {{"t", c.t.str()}, {"j", c.j}}}};
    }
    const AlgQuat& a = q.as_alg();
    nlohmann::json arr = nlohmann::json::array();
    for (const FieldElem* f : {&a.w, &a.x, &a.y, &a.z}) {
        nlohmann::json comp = nlohmann::json::array();
        for (int k = 0; k < 4; ++k) comp.push_back(f->coeff(k).str());
        arr.push_back(comp);
    }
    return {{"alg", arr}};
}

Quat quat_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("quaternion must be a JSON object");
    if (j.contains("cyc")) {
        const auto& c = j.at("cyc");
        return Quat::cyclo(Rational::parse(c.at("t").get<std::string>()), c.value("j", false));
    }
    if (j.contains("alg")) {
        const auto& a = j.at("alg");
        if (!a.is_array() || a.size() != 4) throw std::invalid_argument("alg quaternion needs 4 components");
        FieldElem f[4];
        for (int c = 0; c < 4; ++c) {
            const auto& comp = a.at(c);
            if (!comp.is_array() || comp.size() != 4)
                throw std::invalid_argument("field element needs 4 coefficients");
            Rational r[4];
            for (int k = 0; k < 4; ++k) {
                const auto& v = comp.at(k);
                r[k] = v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long long>());
            }
            f[c] = FieldElem(r[0], r[1], r[2], r[3]);
        }
        return Quat::alg(f[0], f[1], f[2], f[3]);
    }
    throw std::invalid_argument("quaternion object needs 'alg' or 'cyc'");
}

Vec4 qmul(const Vec4& a, const Vec4& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Vec4 qconj(const Vec4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

}  // namespace pg4
