#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace pg4 {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always reduced, denominator positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT implicit
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    double to_double() const;
    std::string str() const;

    // Accepts "p", "p/q", with optional leading sign.
    static Rational parse(const std::string& s);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // Integer floor of the value.
    BigInt floor() const;
    // Value reduced into [0, m) for a positive integer m.
    Rational mod(long long m) const;

private:
    BigInt num_;
    BigInt den_;
};

BigInt lcm(const BigInt& a, const BigInt& b);
std::size_t hash_value(const BigInt& v);

}  // namespace pg4
