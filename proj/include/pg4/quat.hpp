#pragma once

#include "pg4/field.hpp"

#include <array>
#include <compare>
#include <string>
#include <variant>

#include "json.hpp"

namespace pg4 {

// An angle t·π stored as the rational t, kept in [0,2).
using AngleFraction = Rational;
AngleFraction angle_mod2(const Rational& t);

struct AlgQuat {
    FieldElem w, x, y, z;
    bool operator==(const AlgQuat&) const = default;
};

// exp(tπ i), or exp(tπ i)·j when j is set.
struct CycloQuat {
    AngleFraction t;
    bool j = false;
    bool operator==(const CycloQuat&) const = default;
};

using Vec4 = std::array<double, 4>;

class Quat {
public:
    Quat() : v_(CycloQuat{Rational(0), false}) {}
    static Quat cyclo(const Rational& t, bool j = false);
    // Algebraic form. Demoted to cyclotomic form when the value has one of the
    // shapes w + x i or y j + z k with an angle in the promotion table, so
    // that each value has exactly one stored representation.
    static Quat alg(const FieldElem& w, const FieldElem& x, const FieldElem& y, const FieldElem& z);

    static Quat one() { return cyclo(0); }
    static Quat minus_one() { return cyclo(1); }
    static Quat i() { return cyclo(Rational(1, 2)); }
    static Quat j() { return cyclo(0, true); }
    static Quat k() { return cyclo(Rational(1, 2), true); }

    bool is_cyclo() const { return std::holds_alternative<CycloQuat>(v_); }
    const CycloQuat& as_cyclo() const { return std::get<CycloQuat>(v_); }
    const AlgQuat& as_alg() const { return std::get<AlgQuat>(v_); }

    // Cyclotomic values whose cos and sin lie in Q(√2,√5).
    bool promotable() const;
    AlgQuat to_alg() const;

    Vec4 to_double() const;
    std::string str() const;

    bool operator==(const Quat& o) const { return v_ == o.v_; }
    std::strong_ordering encoding_cmp(const Quat& o) const;
    std::size_t hash() const;

private:
    std::variant<CycloQuat, AlgQuat> v_;
};

Quat operator*(const Quat& a, const Quat& b);
Quat operator-(const Quat& a);
Quat conj(const Quat& a);
FieldElem quat_real(const Quat& a);
FieldElem quat_norm2(const Quat& a);
AngleFraction angle_of(const Quat& q);

nlohmann::json quat_to_json(const Quat& q);
Quat quat_from_json(const nlohmann::json& j);

// Floating-point Hamilton product, used by geometry and as a test oracle.
Vec4 qmul(const Vec4& a, const Vec4& b);
Vec4 qconj(const Vec4& a);

}  // namespace pg4

template <>
struct std::hash<pg4::Quat> {
    std::size_t operator()(const pg4::Quat& q) const { return q.hash(); }
};
