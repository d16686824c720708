#include "pg4/catalog.hpp"

#include "pg4/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pg4 {

namespace {

Transform4 P(const Quat& l, const Quat& r) { return Transform4::pair(l, r); }
Transform4 S(const Quat& l, const Quat& r) { return Transform4::star(l, r); }
Quat c(const Rational& t) { return Quat::cyclo(t); }
Quat c(long long p, long long q) { return Quat::cyclo(Rational(p, q)); }
const Quat one = Quat::one();

// Tubical family table. Order per unit n and smallest n.
struct TubFamily {
    std::string id;
    long long order_per_n;
    long long min_n;
};

const std::vector<TubFamily>& tub_table() {
    static const std::vector<TubFamily> t = {
        {"+-[IxC]", 120, 1},      {"+-[OxC]", 48, 1},     {"+-1/2[OxC]", 48, 1}, {"+-[TxC]", 24, 1},
        {"+-1/3[TxC]", 24, 1},    {"+-[IxD]", 240, 2},    {"+-[OxD]", 96, 2},    {"+-1/2[OxDbar]", 96, 2},
        {"+-1/2[OxD]", 48, 2},    {"+-1/6[OxD]", 48, 1},  {"+-[TxD]", 48, 2},
    };
    return t;
}

const TubFamily& tub_family(const std::string& id) {
    for (const auto& f : tub_table())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown tubical family '" + id + "'");
}

// "+-1/2[OxDbar]" -> "+-1/2[DbarxO]"
std::string swap_factors(const std::string& id) {
    auto lb = id.find('['), x = id.find('x', lb), rb = id.find(']', lb);
    if (lb == std::string::npos || x == std::string::npos || rb == std::string::npos) return id;
    return id.substr(0, lb + 1) + id.substr(x + 1, rb - x - 1) + "x" + id.substr(lb + 1, x - lb - 1) + id.substr(rb);
}

std::vector<Transform4> tubical_left_gens(const std::string& id, long long n) {
    Quat iI = qc::i_I(), iO = qc::i_O(), w = qc::omega(), i = Quat::i(), j = Quat::j();
    Quat en = c(1, n), e2n = c(1, 2 * n), e3n = c(1, 3 * n);
    if (id == "+-[IxC]") return {P(iI, one), P(w, one), P(one, en)};
    if (id == "+-[OxC]") return {P(iO, one), P(w, one), P(one, en)};
    if (id == "+-1/2[OxC]") return {P(i, one), P(w, one), P(one, en), P(iO, e2n)};
    if (id == "+-[TxC]") return {P(i, one), P(w, one), P(one, en)};
    if (id == "+-1/3[TxC]") return {P(i, one), P(one, en), P(w, e3n)};
    if (id == "+-[IxD]") return {P(iI, one), P(w, one), P(one, en), P(one, j)};
    if (id == "+-[OxD]") return {P(iO, one), P(w, one), P(one, en), P(one, j)};
    if (id == "+-1/2[OxDbar]") return {P(i, one), P(w, one), P(one, en), P(one, j), P(iO, e2n)};
    if (id == "+-1/2[OxD]") return {P(i, one), P(w, one), P(one, en), P(iO, j)};
    if (id == "+-1/6[OxD]") return {P(i, one), P(one, en), P(iO, j), P(w, e3n)};
    if (id == "+-[TxD]") return {P(i, one), P(w, one), P(one, en), P(one, j)};
    throw std::invalid_argument("unknown tubical family '" + id + "'");
}

std::vector<Transform4> toroidal_gens(const GroupSpec& sp) {
    const long long m = sp.m, n = sp.n;
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    const std::string& f = sp.family;
    const std::string& t = sp.sub;
    auto translations_mn = [&] { return std::vector<Transform4>{P(c(1, m), c(1, m)), P(c(1, n), c(-1, n))}; };
    auto translations_lr = [&] { return std::vector<Transform4>{P(c(1, m), one), P(one, c(1, n))}; };
    auto translations_cm = [&] {
        return std::vector<Transform4>{P(c(2, m), one), P(one, c(2, n)), P(c(1, m), c(1, n))};
    };
    auto add = [](std::vector<Transform4> v, std::initializer_list<Transform4> more) {
        v.insert(v.end(), more);
        return v;
    };
    if (f == "1" || f == ".") {
        std::vector<Transform4> g{P(c(-2, m), one), P(c(Rational(-(m + 2 * sp.s), m * n)), c(1, n))};
        if (f == ".") g.push_back(P(j, j));
        return g;
    }
    if (f == "|") {
        if (t == "pm") return add(translations_mn(), {S(i, i)});
        if (t == "pg") return add(translations_mn(), {compose(S(i, i), P(c(1, 2 * m), c(1, 2 * m)))});
        if (t == "cm")
            return add(translations_mn(),
                       {P(c(Rational(1, 2 * m) + Rational(1, 2 * n)), c(Rational(1, 2 * m) - Rational(1, 2 * n))),
                        S(i, i)});
    }
    if (f == "\\" || f == "/") {
        Transform4 swap = f == "/" ? P(i, k) : P(-k, i);
        if (t == "pm") return add(translations_lr(), {swap});
        if (t == "pg") {
            Transform4 glide = f == "/" ? P(c(1, 2 * m), one) : P(one, c(1, 2 * n));
            return add(translations_lr(), {compose(glide, swap)});
        }
        if (t == "cm") return add(translations_cm(), {swap});
    }
    if (f == "X") {
        Transform4 s1 = P(i, k), s2 = P(-k, i);
        if (t == "c2mm") return add(translations_cm(), {s1, s2});
        Transform4 pre = Transform4::identity();
        if (t == "p2mg") pre = P(one, c(1, 2 * n));
        else if (t == "p2gm") pre = P(c(1, 2 * m), one);
        else if (t == "p2gg") pre = P(c(1, 2 * m), c(1, 2 * n));
        else if (t != "p2mm") throw std::invalid_argument("unknown X subtype '" + t + "'");
        return add(translations_lr(), {compose(pre, s1), compose(pre, s2)});
    }
    if (f == "+") {
        Transform4 g = P(c(Rational(1, 2 * m) + Rational(1, 2 * n)), c(Rational(1, 2 * m) - Rational(1, 2 * n)));
        if (t == "p2mm") return add(translations_mn(), {S(i, i), S(k, k)});
        if (t == "p2mg") {
            Transform4 h = P(c(1, 2 * n), c(-1, 2 * n));
            return add(translations_mn(), {compose(S(i, i), h), compose(S(k, k), h)});
        }
        if (t == "p2gg") return add(translations_mn(), {compose(S(i, i), g), compose(S(k, k), g)});
        if (t == "c2mm") return add(translations_mn(), {g, S(i, i), S(k, k)});
    }
    if (f == "L") {
        long long N = sp.a * sp.a + sp.b * sp.b;
        return {P(c(-(sp.a + sp.b), N), c(sp.a - sp.b, N)), P(c(sp.a - sp.b, N), c(sp.a + sp.b, N)), S(-j, one)};
    }
    if (f == "*") {
        if (t == "p4mmU") return {P(c(1, n), c(1, n)), P(c(1, n), c(-1, n)), P(i, k), S(i, i)};
        if (t == "p4gmU")
            return {P(c(1, n), c(1, n)), P(c(1, n), c(-1, n)), compose(P(i, k), P(c(1, n), one)),
                    compose(S(i, i), P(c(1, n), one))};
        if (t == "p4mmS") return {P(c(1, n), one), P(one, c(1, n)), P(i, k), S(i, i)};
        if (t == "p4gmS") {
            Transform4 h = P(c(1, 2 * n), c(1, 2 * n));
            return {P(c(1, n), one), P(one, c(1, n)), compose(P(i, k), h), compose(S(i, i), h)};
        }
    }
    throw std::invalid_argument("unknown toroidal family '" + f + (t.empty() ? "" : "/" + t) + "'");
}

std::vector<Quat> qgens(char g) {
    if (g == 'I') return {qc::i_I(), qc::omega()};
    if (g == 'O') return {qc::i_O(), qc::omega()};
    return {Quat::i(), qc::omega()};
}

std::vector<Transform4> full_product(char L, char R) {
    std::vector<Transform4> g;
    for (const auto& q : qgens(L)) g.push_back(P(q, one));
    for (const auto& q : qgens(R)) g.push_back(P(one, q));
    return g;
}

std::vector<Transform4> polyhedral_gens(const std::string& name) {
    const Quat i = Quat::i(), j = Quat::j(), w = qc::omega();
    const Transform4 star = S(one, one);
    const Transform4 minus_star = S(one, Quat::minus_one());
    std::string base = name, ext;
    if (auto dot = name.find("]."); dot != std::string::npos) {
        base = name.substr(0, dot + 1);
        ext = name.substr(dot + 2);
    }
    std::vector<Transform4> g;
    if (base.size() == 7 && base.rfind("+-[", 0) == 0 && base[4] == 'x') {
        g = full_product(base[3], base[5]);
    } else if (base == "+-1/2[OxO]") {
        g = {P(i, one), P(w, one), P(one, i), P(one, w), P(qc::i_O(), qc::i_O())};
    } else if (base == "+-1/60[IxIbar]" || base == "+1/60[IxIbar]") {
        g = {P(w, w), P(qc::i_I(), qc::i_I_prime())};
        if (base[1] == '-') g.push_back(P(one, Quat::minus_one()));
    } else if (base == "+-1/6[OxO]") {
        g = {P(i, one), P(j, one), P(one, i), P(one, j), P(w, w), P(qc::i_O(), qc::i_O())};
    } else if (base == "+-1/3[TxT]") {
        g = {P(i, one), P(j, one), P(one, i), P(one, j), P(w, w)};
    } else if (base == "+-1/3[TxTbar]") {
        g = {P(i, one), P(j, one), P(one, i), P(one, j), P(w, qc::omega_bar())};
    } else {
        throw std::invalid_argument("unknown polyhedral group '" + name + "'");
    }
    if (ext.empty()) return g;
    if (ext == "2") g.push_back(star);
    else if (ext == "2bar") g.push_back(S(one, qc::i_O()));
    else if (ext == "2_1") g.push_back(star);
    else if (ext == "2_3") g.push_back(minus_star);
    else throw std::invalid_argument("unknown extension '." + ext + "'");
    return g;
}

// 3D groups acting on span{i,j,k}: rotations [l,l], rotoinversions *[l,l].
std::vector<Transform4> group3d_gens(const std::string& g3) {
    const Quat w = qc::omega();
    if (g3 == "+I") return {P(qc::i_I(), qc::i_I()), P(w, w)};
    if (g3 == "+-I") return {P(qc::i_I(), qc::i_I()), P(w, w), S(one, one)};
    if (g3 == "+O") return {P(qc::i_O(), qc::i_O()), P(w, w)};
    if (g3 == "+-O") return {P(qc::i_O(), qc::i_O()), P(w, w), S(one, one)};
    if (g3 == "TO") return {P(Quat::i(), Quat::i()), P(w, w), S(qc::i_O(), qc::i_O())};
    if (g3 == "+T") return {P(Quat::i(), Quat::i()), P(w, w)};
    if (g3 == "+-T") return {P(Quat::i(), Quat::i()), P(w, w), S(one, one)};
    throw std::invalid_argument("unknown 3D group '" + g3 + "'");
}

long long group3d_order(const std::string& g3) {
    if (g3 == "+I") return 60;
    if (g3 == "+-I") return 120;
    if (g3 == "+O" || g3 == "TO" || g3 == "+-T") return 24;
    if (g3 == "+-O") return 48;
    if (g3 == "+T") return 12;
    throw std::invalid_argument("unknown 3D group '" + g3 + "'");
}

PointGroup build_axial(const GroupSpec& sp) {
    const Transform4 minus_star = S(one, Quat::minus_one());
    if (sp.family == "pyr") return generate(group3d_gens(sp.sub));
    if (sp.family == "prism") {
        auto g = group3d_gens(sp.sub);
        g.push_back(minus_star);
        return generate(g);
    }
    if (sp.family == "hyb") {
        auto slash = sp.sub.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("hybrid axial group needs H/G3");
        PointGroup h = generate(group3d_gens(sp.sub.substr(0, slash)));
        PointGroup g3 = generate(group3d_gens(sp.sub.substr(slash + 1)));
        if (g3.order() != 2 * h.order()) throw std::invalid_argument("H must have index 2 in G3");
        std::vector<Transform4> elems;
        for (const auto& x : g3.elements()) {
            if (h.contains(x)) elems.push_back(x);
            else elems.push_back(compose(x, minus_star));
        }
        std::vector<Transform4> gens;
        for (const auto& x : g3.generators()) gens.push_back(h.contains(x) ? x : compose(x, minus_star));
        return PointGroup(std::move(elems), std::move(gens));
    }
    throw std::invalid_argument("unknown axial kind '" + sp.family + "'");
}

long long polyhedral_order(const std::string& name) {
    static const std::vector<std::pair<std::string, long long>> t = {
        {"+-[IxI]", 7200},         {"+-[IxO]", 2880},           {"+-[OxI]", 2880},
        {"+-[IxT]", 1440},         {"+-[TxI]", 1440},           {"+-[OxO]", 1152},
        {"+-1/2[OxO]", 576},       {"+-[OxT]", 576},            {"+-[TxO]", 576},
        {"+-[TxT]", 288},          {"+-1/60[IxIbar]", 120},     {"+1/60[IxIbar]", 60},
        {"+-1/6[OxO]", 192},       {"+-1/3[TxT]", 96},          {"+-[IxI].2", 14400},
        {"+-[OxO].2", 2304},       {"+-1/2[OxO].2", 1152},      {"+-1/2[OxO].2bar", 1152},
        {"+-[TxT].2", 576},        {"+-1/6[OxO].2", 384},       {"+-1/3[TxT].2", 192},
        {"+-1/3[TxTbar].2", 192},  {"+-1/60[IxIbar].2", 240},   {"+1/60[IxIbar].2_1", 120},
        {"+1/60[IxIbar].2_3", 120},
    };
    for (const auto& [k, v] : t)
        if (k == name) return v;
    throw std::invalid_argument("unknown polyhedral group '" + name + "'");
}

long long axial_order(const GroupSpec& sp) {
    if (sp.family == "pyr") return group3d_order(sp.sub);
    if (sp.family == "prism") return 2 * group3d_order(sp.sub);
    if (sp.family == "hyb") return group3d_order(sp.sub.substr(sp.sub.find('/') + 1));
    throw std::invalid_argument("unknown axial kind '" + sp.family + "'");
}

bool toroidal_uses_s(const std::string& f) { return f == "1" || f == "."; }

long long parse_ll(const std::string& v, const std::string& text) {
    if (v.empty()) throw std::invalid_argument("missing value in '" + text + "'");
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer '" + v + "' in '" + text + "'");
    }
    if (pos != v.size()) throw std::invalid_argument("invalid integer '" + v + "' in '" + text + "'");
    return x;
}

}  // namespace

Transform4 torus_translation(const Rational& a1, const Rational& a2) {
    Rational half(1, 2);
    return P(c(-(a1 + a2) * half), c((a1 - a2) * half));
}

std::string GroupSpec::str() const {
    std::ostringstream o;
    switch (kind) {
        case Kind::Tubical: o << "tub:" << (right ? swap_factors(family) : family) << ":n=" << n; break;
        case Kind::Toroidal:
            o << "tor:" << family;
            if (!sub.empty()) o << "/" << sub;
            o << ":";
            if (toroidal_uses_s(family)) o << "m=" << m << ",n=" << n << ",s=" << s;
            else if (family == "L") o << "a=" << a << ",b=" << b;
            else if (family == "*") o << "n=" << n;
            else o << "m=" << m << ",n=" << n;
            break;
        case Kind::Polyhedral: o << "poly:" << family; break;
        case Kind::Axial: o << "axial:" << family << ":" << sub; break;
    }
    return o.str();
}

bool GroupSpec::operator==(const GroupSpec& o) const { return str() == o.str(); }

GroupSpec GroupSpec::parse(const std::string& text) {
    auto bad = [&](const std::string& why) { return std::invalid_argument("bad spec '" + text + "': " + why); };
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad("missing kind prefix");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    GroupSpec sp;
    auto read_params = [&](const std::string& plist, std::initializer_list<std::pair<const char*, long long*>> keys) {
        std::vector<bool> seen(keys.size(), false);
        std::stringstream ss(plist);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw bad("parameter '" + item + "' needs '='");
            std::string key = item.substr(0, eq);
            std::size_t idx = 0;
            bool found = false;
            for (const auto& [name, ptr] : keys) {
                if (key == name) {
                    *ptr = parse_ll(item.substr(eq + 1), text);
                    seen[idx] = true;
                    found = true;
                }
                ++idx;
            }
            if (!found) throw bad("unknown parameter '" + key + "'");
        }
        for (bool s : seen)
            if (!s) throw bad("missing parameter");
    };
    if (kind == "tub") {
        sp.kind = Kind::Tubical;
        auto c2 = rest.rfind(':');
        if (c2 == std::string::npos) throw bad("missing ':n='");
        std::string id = rest.substr(0, c2);
        bool found = false;
        for (const auto& f : tub_table()) {
            if (f.id == id) {
                sp.family = id;
                found = true;
            } else if (swap_factors(f.id) == id) {
                sp.family = f.id;
                sp.right = true;
                found = true;
            }
        }
        if (!found) throw bad("unknown tubical family '" + id + "'");
        read_params(rest.substr(c2 + 1), {{"n", &sp.n}});
        return sp;
    }
    if (kind == "tor") {
        sp.kind = Kind::Toroidal;
        if (rest.empty()) throw bad("missing family");
        sp.family = rest.substr(0, 1);
        std::size_t pos = 1;
        if (pos < rest.size() && rest[pos] == '/') {
            auto c2 = rest.find(':', pos);
            if (c2 == std::string::npos) throw bad("missing parameters");
            sp.sub = rest.substr(pos + 1, c2 - pos - 1);
            pos = c2;
        }
        if (pos >= rest.size() || rest[pos] != ':') throw bad("missing parameters");
        std::string plist = rest.substr(pos + 1);
        const std::string& f = sp.family;
        if (f == "1" || f == ".") {
            if (!sp.sub.empty()) throw bad("family takes no subtype");
            read_params(plist, {{"m", &sp.m}, {"n", &sp.n}, {"s", &sp.s}});
        } else if (f == "L") {
            if (!sp.sub.empty()) throw bad("family takes no subtype");
            read_params(plist, {{"a", &sp.a}, {"b", &sp.b}});
        } else if (f == "*") {
            read_params(plist, {{"n", &sp.n}});
        } else if (f == "|" || f == "\\" || f == "/" || f == "X" || f == "+") {
            read_params(plist, {{"m", &sp.m}, {"n", &sp.n}});
        } else {
            throw bad("unknown toroidal family '" + f + "'");
        }
        if (!toroidal_uses_s(f) && f != "L") {
            auto subs = toroidal_subtypes(f);
            if (std::find(subs.begin(), subs.end(), sp.sub) == subs.end()) throw bad("unknown subtype '" + sp.sub + "'");
        }
        return sp;
    }
    if (kind == "poly") {
        sp.kind = Kind::Polyhedral;
        sp.family = rest;
        const auto& names = polyhedral_names();
        if (std::find(names.begin(), names.end(), rest) == names.end()) throw bad("unknown polyhedral group");
        return sp;
    }
    if (kind == "axial") {
        sp.kind = Kind::Axial;
        const auto& names = axial_names();
        if (std::find(names.begin(), names.end(), rest) == names.end()) throw bad("unknown axial group");
        auto c2 = rest.find(':');
        sp.family = rest.substr(0, c2);
        sp.sub = rest.substr(c2 + 1);
        return sp;
    }
    throw bad("unknown kind '" + kind + "'");
}

std::vector<std::string> toroidal_subtypes(const std::string& f) {
    if (f == "|" || f == "\\" || f == "/") return {"pm", "pg", "cm"};
    if (f == "X") return {"p2mm", "p2mg", "p2gm", "p2gg", "c2mm"};
    if (f == "+") return {"p2mm", "p2mg", "p2gg", "c2mm"};
    if (f == "*") return {"p4mmU", "p4gmU", "p4mmS", "p4gmS"};
    return {""};
}

bool is_valid(const GroupSpec& sp) {
    switch (sp.kind) {
        case Kind::Tubical: return sp.n >= 1;
        case Kind::Polyhedral:
        case Kind::Axial: return true;
        case Kind::Toroidal: break;
    }
    const std::string& f = sp.family;
    if (f == "L") return sp.a >= 0 && sp.b >= 0 && (sp.a > 0 || sp.b > 0);
    if (f == "*") return sp.n >= 1;
    if (sp.m < 1 || sp.n < 1) return false;
    if (sp.sub == "cm" || sp.sub == "c2mm") {
        if (f != "|" && f != "+" && (sp.m - sp.n) % 2 != 0) return false;
    }
    return true;
}

bool in_range(const GroupSpec& sp) {
    if (!is_valid(sp)) return false;
    const long long m = sp.m, n = sp.n;
    switch (sp.kind) {
        case Kind::Tubical: return sp.n >= tub_family(sp.family).min_n;
        case Kind::Polyhedral:
        case Kind::Axial: return true;
        case Kind::Toroidal: break;
    }
    const std::string& f = sp.family;
    const std::string& t = sp.sub;
    if (f == "1" || f == ".") {
        if (2 * sp.s < -m || 2 * sp.s > n - m) return false;
        if (f == "." && ((m == 1 && n == 1) || (m == 2 && n == 1))) return false;
        return true;
    }
    if (f == "\\") {
        if (t == "pm") return m >= 2 && n >= 2;
        if (t == "pg") return m >= 2 && n >= 1;
        return m >= 3 && n >= 2 && (m - n) % 2 == 0;
    }
    if (f == "/") {
        if (t == "pm") return m >= 2 && n >= 2;
        if (t == "pg") return m >= 1 && n >= 2;
        return m >= 2 && n >= 3 && (m - n) % 2 == 0;
    }
    if (f == "X") {
        if (t == "c2mm") return m >= 3 && n >= 3 && (m - n) % 2 == 0;
        return m >= 2 && n >= 2;
    }
    if (f == "|") return true;
    if (f == "+") {
        if (m == 1 && n == 1) return false;
        if (t == "p2mg") return true;
        return m >= n;
    }
    if (f == "L") return sp.a >= sp.b && sp.a >= 2 && !(sp.a == 2 && sp.b == 0);
    if (f == "*") return (t == "p4mmU" || t == "p4gmU") ? n >= 3 : n >= 2;
    return false;
}

long long spec_order(const GroupSpec& sp) {
    const long long m = sp.m, n = sp.n;
    switch (sp.kind) {
        case Kind::Tubical: return tub_family(sp.family).order_per_n * n;
        case Kind::Polyhedral: return polyhedral_order(sp.family);
        case Kind::Axial: return axial_order(sp);
        case Kind::Toroidal: break;
    }
    const std::string& f = sp.family;
    const std::string& t = sp.sub;
    if (f == "1") return m * n;
    if (f == ".") return 2 * m * n;
    if (f == "\\" || f == "/") return t == "cm" ? 2 * m * n : 4 * m * n;
    if (f == "X") return t == "c2mm" ? 4 * m * n : 8 * m * n;
    if (f == "|") return t == "cm" ? 4 * m * n : 2 * m * n;
    if (f == "+") return t == "c2mm" ? 8 * m * n : 4 * m * n;
    if (f == "L") return 4 * (sp.a * sp.a + sp.b * sp.b);
    if (f == "*") return (t == "p4mmU" || t == "p4gmU") ? 8 * n * n : 16 * n * n;
    throw std::invalid_argument("unknown toroidal family '" + f + "'");
}

std::vector<Transform4> generators(const GroupSpec& sp) {
    if (!is_valid(sp)) throw std::domain_error("parameters out of range for " + sp.str());
    switch (sp.kind) {
        case Kind::Tubical: {
            auto g = tubical_left_gens(sp.family, sp.n);
            if (sp.right)
                for (auto& x : g) x = Transform4(x.reversing(), x.r(), x.l());
            return g;
        }
        case Kind::Toroidal: return toroidal_gens(sp);
        case Kind::Polyhedral: return polyhedral_gens(sp.family);
        case Kind::Axial: return build_axial(sp).generators();
    }
    return {};
}

PointGroup build(const GroupSpec& sp) {
    if (!is_valid(sp)) throw std::domain_error("parameters out of range for " + sp.str());
    if (sp.kind == Kind::Axial) return build_axial(sp);
    return generate(generators(sp));
}

bool spec_is_chiral(const GroupSpec& sp) {
    switch (sp.kind) {
        case Kind::Tubical: return true;
        case Kind::Polyhedral: return sp.family.find("].") == std::string::npos;
        case Kind::Toroidal: {
            const std::string& f = sp.family;
            return f == "1" || f == "." || f == "\\" || f == "/" || f == "X";
        }
        case Kind::Axial: break;
    }
    static std::mutex mu;
    static std::map<std::string, bool> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = sp.str();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    bool chiral = build_axial(sp).is_chiral();
    cache[key] = chiral;
    return chiral;
}

TubicalInfo tubical_info(const std::string& family) {
    const auto& f = tub_family(family);
    return {f.order_per_n, f.min_n, f.id[f.id.find('[') + 1]};
}

GroupSpec right_variant(const GroupSpec& sp) {
    if (sp.kind != Kind::Tubical) throw std::invalid_argument("right_variant needs a tubical spec");
    GroupSpec r = sp;
    r.right = !sp.right;
    return r;
}

std::string cs_name_type1(long long mp, long long n, long long sp) {
    long long g = std::gcd(2 * n, mp + 2 * sp);
    long long m = mp * n / g;
    std::ostringstream o;
    if (mp % 2 == 0) {
        long long f = 2 * m / mp;
        Rational s = Rational(f) - Rational(m + f * sp, n);
        o << "+-1/" << f << "[C" << m << "^(" << s.str() << ")xC" << n << "]";
    } else {
        long long f = m / mp;
        Rational s = Rational(2 * f) - Rational(m + 2 * f * sp, n);
        o << "+1/" << f << "[C" << m << "^(" << s.str() << ")xC" << n << "]";
    }
    return o.str();
}

const std::vector<std::string>& tubical_families() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> out;
        for (const auto& f : tub_table()) out.push_back(f.id);
        return out;
    }();
    return v;
}

const std::vector<std::string>& polyhedral_names() {
    static const std::vector<std::string> v = {
        "+-[IxI]",          "+-[IxO]",          "+-[OxI]",           "+-[IxT]",          "+-[TxI]",
        "+-[OxO]",          "+-1/2[OxO]",       "+-[OxT]",           "+-[TxO]",          "+-[TxT]",
        "+-1/60[IxIbar]",   "+1/60[IxIbar]",    "+-1/6[OxO]",        "+-1/3[TxT]",       "+-[IxI].2",
        "+-[OxO].2",        "+-1/2[OxO].2",     "+-1/2[OxO].2bar",   "+-[TxT].2",        "+-1/6[OxO].2",
        "+-1/3[TxT].2",     "+-1/3[TxTbar].2",  "+-1/60[IxIbar].2",  "+1/60[IxIbar].2_1", "+1/60[IxIbar].2_3",
    };
    return v;
}

const std::vector<std::string>& axial_names() {
    static const std::vector<std::string> v = {
        "pyr:+-I",   "pyr:+I",    "pyr:+-O",    "pyr:+O",    "pyr:TO",    "pyr:+-T",   "pyr:+T",
        "prism:+-I", "prism:+I",  "prism:+-O",  "prism:+O",  "prism:TO",  "prism:+-T", "prism:+T",
        "hyb:+I/+-I", "hyb:+-T/+-O", "hyb:+O/+-O", "hyb:TO/+-O", "hyb:+T/+-T", "hyb:+T/+O", "hyb:+T/TO",
    };
    return v;
}

std::vector<GroupSpec> toroidal_specs_of_order(const std::string& f, const std::string& t, long long order,
                                               bool include_out_of_range) {
    std::vector<GroupSpec> out;
    auto keep = [&](GroupSpec sp) {
        if (!is_valid(sp)) return;
        if (spec_order(sp) != order) return;
        if (include_out_of_range || in_range(sp)) out.push_back(sp);
    };
    GroupSpec base;
    base.kind = Kind::Toroidal;
    base.family = f;
    base.sub = t;
    if (f == "L") {
        if (order % 4 != 0) return out;
        long long N = order / 4;
        for (long long a = 0; a * a <= N; ++a)
            for (long long b = 0; b * b <= N - a * a; ++b)
                if (a * a + b * b == N) {
                    GroupSpec sp = base;
                    sp.a = a;
                    sp.b = b;
                    keep(sp);
                }
        return out;
    }
    if (f == "*") {
        for (long long n = 1; 8 * n * n <= order; ++n) {
            GroupSpec sp = base;
            sp.n = n;
            keep(sp);
        }
        return out;
    }
    for (long long m = 1; m <= order; ++m) {
        for (long long n = 1; m * n <= order; ++n) {
            GroupSpec sp = base;
            sp.m = m;
            sp.n = n;
            if (toroidal_uses_s(f)) {
                if (spec_order(sp) != order) continue;
                for (long long s = -m; 2 * s <= n - m; ++s) {
                    if (2 * s < -m) continue;
                    sp.s = s;
                    keep(sp);
                }
            } else {
                keep(sp);
            }
        }
    }
    return out;
}

std::vector<GroupSpec> specs_of_order(long long order) {
    std::vector<GroupSpec> out;
    for (const auto& f : tub_table()) {
        if (order % f.order_per_n != 0) continue;
        long long n = order / f.order_per_n;
        if (n < f.min_n) continue;
        for (bool right : {false, true}) {
            GroupSpec sp;
            sp.kind = Kind::Tubical;
            sp.family = f.id;
            sp.n = n;
            sp.right = right;
            out.push_back(sp);
        }
    }
    for (const std::string f : {"1", ".", "\\", "/", "X", "|", "+", "L", "*"})
        for (const auto& t : toroidal_subtypes(f)) {
            auto v = toroidal_specs_of_order(f, t, order, false);
            out.insert(out.end(), v.begin(), v.end());
        }
    for (const auto& name : polyhedral_names())
        if (polyhedral_order(name) == order) {
            GroupSpec sp;
            sp.kind = Kind::Polyhedral;
            sp.family = name;
            out.push_back(sp);
        }
    for (const auto& name : axial_names()) {
        GroupSpec sp = GroupSpec::parse("axial:" + name);
        if (axial_order(sp) == order) out.push_back(sp);
    }
    return out;
}

std::vector<GroupSpec> list_catalog(long long max_order) {
    std::vector<GroupSpec> out;
    for (long long N = 1; N <= max_order; ++N) {
        auto v = specs_of_order(N);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace pg4
