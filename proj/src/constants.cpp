#include "pg4/constants.hpp"

#include <stdexcept>

namespace pg4::qc {

namespace {
FieldElem r(long long p, long long q = 1) { return FieldElem(Rational(p, q)); }
const FieldElem& s5() {
    static const FieldElem v = FieldElem::sqrt5();
    return v;
}
}  // namespace

Quat omega() { return Quat::alg(r(-1, 2), r(1, 2), r(1, 2), r(1, 2)); }

Quat omega_bar() { return Quat::alg(r(-1, 2), r(-1, 2), r(-1, 2), r(-1, 2)); }

Quat i_O() {
    FieldElem h = FieldElem::sqrt2() * r(1, 2);
    return Quat::alg(0, 0, h, h);
}

Quat i_I() { return Quat::alg(0, r(1, 2), (s5() - r(1)) * r(1, 4), (s5() + r(1)) * r(1, 4)); }

Quat i_I_dag() { return Quat::alg(0, r(1, 2), (-s5() - r(1)) * r(1, 4), (-s5() + r(1)) * r(1, 4)); }

Quat i_I_prime() { return Quat::alg(0, -(s5() - r(1)) * r(1, 4), -(s5() + r(1)) * r(1, 4), r(1, 2)); }

Quat e(long long n) { return Quat::cyclo(Rational(1, n)); }

Quat e(long long p, long long n) { return Quat::cyclo(Rational(p, n)); }

Quat by_name(const std::string& name) {
    if (name == "omega") return omega();
    if (name == "omegabar") return omega_bar();
    if (name == "iO") return i_O();
    if (name == "iI") return i_I();
    if (name == "iIdag") return i_I_dag();
    if (name == "iIprime") return i_I_prime();
    if (name == "i") return Quat::i();
    if (name == "j") return Quat::j();
    if (name == "k") return Quat::k();
    if (name == "1") return Quat::one();
    if (name == "-1") return Quat::minus_one();
    if (name.size() > 1 && name[0] == 'e') return e(std::stoll(name.substr(1)));
    throw std::invalid_argument("unknown quaternion constant '" + name + "'");
}

}  // namespace pg4::qc
