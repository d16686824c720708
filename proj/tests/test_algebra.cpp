#include "doctest.h"

#include "pg4/constants.hpp"
#include "pg4/group.hpp"
#include "pg4/quat.hpp"

#include <cmath>
#include <random>

using namespace pg4;

namespace {

FieldElem fe(long long a, long long b, long long c, long long d, long long den = 1) {
    return FieldElem(Rational(a, den), Rational(b, den), Rational(c, den), Rational(d, den));
}

FieldElem random_fe(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    return FieldElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                     Rational(num(rng), den(rng)));
}

// All elements of 2I ∪ 2O ∪ 2T (2T ⊂ 2O; 2T ⊂ 2I).
std::vector<Quat> polyhedral_quats() {
    auto i2 = generate_quats({qc::i_I(), qc::omega()});
    auto o2 = generate_quats({qc::i_O(), qc::omega()});
    std::vector<Quat> all = i2;
    all.insert(all.end(), o2.begin(), o2.end());
    return all;
}

}  // namespace

TEST_CASE("field defining relations") {
    FieldElem s2 = FieldElem::sqrt2(), s5 = FieldElem::sqrt5();
    CHECK(s2 * s2 == FieldElem(2));
    CHECK(s2 * s5 == FieldElem::sqrt10());
    FieldElem a = (FieldElem(1) + s5) * FieldElem(Rational(1, 4));
    FieldElem b = (FieldElem(-1) + s5) * FieldElem(Rational(1, 4));
    CHECK(a * b == FieldElem(Rational(1, 4)));
    CHECK(fe(0, 1, 0, 0) / fe(0, 1, 0, 0) == FieldElem(1));
    CHECK_THROWS(FieldElem(1) / FieldElem(0));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = random_fe(rng), b = random_fe(rng), c = random_fe(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
    }
}

TEST_CASE("quaternion products") {
    CHECK(Quat::i() * Quat::j() == Quat::k());
    Quat a = Quat::cyclo(Rational(1, 3), true);
    CHECK(a * a == Quat::minus_one());
    // float oracle for the same product
    Vec4 fa = a.to_double();
    Vec4 p = qmul(fa, fa);
    CHECK(std::abs(p[0] + 1) < 1e-12);
    Quat w = qc::omega();
    CHECK(w * w * w == Quat::one());
}

TEST_CASE("conjugate, real part and angles") {
    CHECK(conj(Quat::i()) == -Quat::i());
    CHECK(conj(Quat::cyclo(Rational(1, 4))) == Quat::cyclo(Rational(7, 4)));
    CHECK(quat_real(qc::omega()) == FieldElem(Rational(-1, 2)));
    CHECK(quat_real(Quat::cyclo(Rational(1, 3), true)) == FieldElem(0));
    CHECK(angle_of(Quat::minus_one()) == Rational(1));
    CHECK(angle_of(qc::omega()) == Rational(2, 3));
    CHECK(angle_of(qc::i_I()) == Rational(1, 2));
}

TEST_CASE("representation canonical form") {
    // (√2/2)(1 + i) demotes to exp(πi/4)
    FieldElem h = FieldElem::sqrt2() * FieldElem(Rational(1, 2));
    CHECK(Quat::alg(h, h, 0, 0) == Quat::cyclo(Rational(1, 4)));
    CHECK(Quat::alg(0, 0, 0, 1) == Quat::k());
    CHECK(qc::i_O() == Quat::cyclo(Rational(1, 4), true));
    CHECK_FALSE(qc::omega().is_cyclo());
    CHECK_THROWS(Quat::cyclo(Rational(1, 5)) * qc::omega());
    CHECK_NOTHROW(Quat::cyclo(Rational(1, 4)) * qc::omega());
}

TEST_CASE("products agree with float oracle on promotable pairs") {
    auto all = polyhedral_quats();
    for (int k = 0; k < 8; ++k) all.push_back(Quat::cyclo(Rational(k, 4), k % 2 == 1));
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Quat& a = all[pick(rng)];
        const Quat& b = all[pick(rng)];
        Vec4 exact = (a * b).to_double();
        Vec4 approx = qmul(a.to_double(), b.to_double());
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(exact[c] - approx[c]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("polyhedral quaternions are unit with defined angles") {
    for (const auto& q : polyhedral_quats()) {
        CHECK(quat_norm2(q) == FieldElem(1));
        CHECK_NOTHROW(angle_of(q));
        if (!(q == Quat::one() || q == Quat::minus_one())) CHECK(angle_of(q) + angle_of(-q) == Rational(1));
    }
}

TEST_CASE("quaternion JSON round trip") {
    for (const Quat& q : {qc::omega(), qc::i_I(), Quat::cyclo(Rational(3, 7), true), qc::i_I_prime()}) {
        CHECK(quat_from_json(quat_to_json(q)) == q);
    }
    CHECK(quat_to_json(Quat::cyclo(Rational(1, 3))).dump() == R"({"cyc":{"j":false,"t":"1/3"}})");
}

TEST_CASE("quaternion group orders") {
    CHECK(generate_quats({qc::i_I(), qc::omega()}).size() == 120);
    CHECK(generate_quats({qc::i_O(), qc::omega()}).size() == 48);
    CHECK(generate_quats({Quat::i(), qc::omega()}).size() == 24);
    for (long long n = 1; n <= 12; ++n) {
        CHECK(generate_quats({qc::e(n)}).size() == static_cast<std::size_t>(2 * n));
        CHECK(generate_quats({qc::e(n), Quat::j()}).size() == static_cast<std::size_t>(4 * n));
    }
    auto t = classify_quat_group(generate_quats({Quat::i(), qc::omega()}));
    CHECK(t.kind == 'T');
    CHECK(classify_quat_group(generate_quats({qc::e(6), Quat::j()})).str() == "2D12");
}
