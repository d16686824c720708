#include "pg4/field.hpp"

#include <cmath>
#include <stdexcept>

namespace pg4 {

namespace {

const double kRoots[4] = {1.0, std::sqrt(2.0), std::sqrt(5.0), std::sqrt(10.0)};

// Galois conjugate flipping the sign of √2 (sign2) and/or √5 (sign5).
std::array<BigInt, 4> galois(const std::array<BigInt, 4>& c, bool flip2, bool flip5) {
    std::array<BigInt, 4> r = c;
    if (flip2) {
        r[1] = -r[1];
        r[3] = -r[3];
    }
    if (flip5) {
        r[2] = -r[2];
        r[3] = -r[3];
    }
    return r;
}

}  // namespace

FieldElem::FieldElem(std::array<BigInt, 4> c, BigInt den) : c_(std::move(c)), den_(std::move(den)) {
    reduce();
}

FieldElem::FieldElem(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    BigInt L = lcm(lcm(a.den(), b.den()), lcm(c.den(), d.den()));
    c_ = {a.num() * (L / a.den()), b.num() * (L / b.den()), c.num() * (L / c.den()),
          d.num() * (L / d.den())};
    den_ = L;
    reduce();
}

void FieldElem::reduce() {
    if (den_ == 0) throw std::domain_error("field element with zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : c_) v = -v;
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) return;
    BigInt g = den_;
    for (const auto& v : c_) {
        if (v != 0) g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    for (auto& v : c_) v /= g;
    den_ /= g;
}

double FieldElem::to_double() const {
    double s = 0;
    double d = den_.convert_to<double>();
    for (int k = 0; k < 4; ++k)
        if (c_[k] != 0) s += c_[k].convert_to<double>() / d * kRoots[k];
    return s;
}

std::string FieldElem::str() const {
    static const char* names[4] = {"", "*sqrt2", "*sqrt5", "*sqrt10"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rational q(c_[k], den_);
        std::string t = q.str() + names[k];
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out.empty() ? "0" : out;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (den_ == o.den_)
        return FieldElem({c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]}, den_);
    return FieldElem({c_[0] * o.den_ + o.c_[0] * den_, c_[1] * o.den_ + o.c_[1] * den_,
                      c_[2] * o.den_ + o.c_[2] * den_, c_[3] * o.den_ + o.c_[3] * den_},
                     den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const auto& a = c_;
    const auto& b = o.c_;
    if (is_rational()) return FieldElem({a[0] * b[0], a[0] * b[1], a[0] * b[2], a[0] * b[3]}, den_ * o.den_);
    if (o.is_rational()) return FieldElem({a[0] * b[0], a[1] * b[0], a[2] * b[0], a[3] * b[0]}, den_ * o.den_);
    return FieldElem({a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3],
                      a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]),
                      a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]),
                      a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]},
                     den_ * o.den_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // x · σ2(x) · σ5(x) · σ2σ5(x) is rational.
    FieldElem g1(galois(c_, true, false), den_);
    FieldElem g2(galois(c_, false, true), den_);
    FieldElem g3(galois(c_, true, true), den_);
    FieldElem others = g1 * g2 * g3;
    FieldElem norm = *this * others;
    if (!norm.is_rational()) throw std::logic_error("field norm not rational");
    Rational n(norm.c_[0], norm.den_);
    return others * FieldElem(Rational(1) / n);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

std::strong_ordering FieldElem::encoding_cmp(const FieldElem& o) const {
    if (den_ != o.den_) return den_ < o.den_ ? std::strong_ordering::less : std::strong_ordering::greater;
    for (int k = 0; k < 4; ++k)
        if (c_[k] != o.c_[k]) return c_[k] < o.c_[k] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t FieldElem::hash() const {
    std::size_t h = hash_value(den_);
    for (const auto& v : c_) h = h * 1000003u ^ hash_value(v);
    return h;
}

}  // namespace pg4
