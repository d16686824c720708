#pragma once

#include "pg4/rational.hpp"

#include <array>
#include <string>

namespace pg4 {

// Element a + b·√2 + c·√5 + d·√10 of Q(√2,√5).
// Stored as four integer numerators over one shared positive denominator,
// reduced so that the five integers have gcd 1.
class FieldElem {
public:
    FieldElem() : c_{0, 0, 0, 0}, den_(1) {}
    FieldElem(long long v) : c_{v, 0, 0, 0}, den_(1) {}  // NOLINT implicit
    FieldElem(const Rational& v) : c_{v.num(), 0, 0, 0}, den_(v.den()) {}  // NOLINT implicit
    FieldElem(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    static FieldElem sqrt2() { return FieldElem(0, 1, 0, 0); }
    static FieldElem sqrt5() { return FieldElem(0, 0, 1, 0); }
    static FieldElem sqrt10() { return FieldElem(0, 0, 0, 1); }

    // Coefficient k in basis order {1, √2, √5, √10}.
    Rational coeff(int k) const { return Rational(c_[k], den_); }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    double to_double() const;
    std::string str() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const { return den_ == o.den_ && c_ == o.c_; }

    // Lexicographic order on (den, numerators); arbitrary but total.
    std::strong_ordering encoding_cmp(const FieldElem& o) const;
    std::size_t hash() const;

private:
    FieldElem(std::array<BigInt, 4> c, BigInt den);
    void reduce();

    std::array<BigInt, 4> c_;
    BigInt den_;
};

}  // namespace pg4
