#include "pg4/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace pg4 {

PointGroup::PointGroup(std::vector<Transform4> elements, std::vector<Transform4> generators)
    : elems_(std::move(elements)), gens_(std::move(generators)) {
    set_.reserve(elems_.size() * 2);
    for (const auto& e : elems_) set_.insert(e);
}

bool PointGroup::is_chiral() const {
    return std::none_of(elems_.begin(), elems_.end(), [](const Transform4& g) { return g.reversing(); });
}

PointGroup generate(const std::vector<Transform4>& gens, std::size_t cap) {
    std::vector<Transform4> elems{Transform4::identity()};
    std::unordered_set<Transform4> seen{Transform4::identity()};
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        for (const auto& g : gens) {
            Transform4 x = compose(elems[idx], g);
            if (seen.insert(x).second) {
                if (elems.size() >= cap) throw std::runtime_error("group not closed within cap");
                elems.push_back(std::move(x));
            }
        }
    }
    return PointGroup(std::move(elems), gens);
}

std::vector<Quat> generate_quats(const std::vector<Quat>& gens, std::size_t cap) {
    std::vector<Quat> elems{Quat::one()};
    std::unordered_set<Quat> seen{Quat::one()};
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        for (const auto& g : gens) {
            Quat x = elems[idx] * g;
            if (seen.insert(x).second) {
                if (elems.size() >= cap) throw std::runtime_error("quaternion group not closed within cap");
                elems.push_back(std::move(x));
            }
        }
    }
    return elems;
}

long long quat_order(const Quat& q) {
    Rational half = angle_of(q) / Rational(2);
    return half.den().convert_to<long long>();
}

std::string QuatGroupType::str() const {
    switch (kind) {
        case 'T': return "2T";
        case 'O': return "2O";
        case 'I': return "2I";
        case 'D': return "2D" + std::to_string(2 * n);
        default: return n == 0 ? "1" : "2C" + std::to_string(n);
    }
}

QuatGroupType classify_quat_group(const std::vector<Quat>& group) {
    QuatGroupType t;
    t.order = group.size();
    long long maxord = 1;
    for (const auto& q : group) maxord = std::max(maxord, quat_order(q));
    auto N = static_cast<long long>(group.size());
    if (N == 1) return t;
    if (maxord == N) {
        if (N % 2 != 0) throw std::logic_error("quaternion group of odd order without -1");
        t.kind = 'C';
        t.n = N / 2;
        return t;
    }
    if (N == 24 && maxord == 6) t.kind = 'T';
    else if (N == 48 && maxord == 8) t.kind = 'O';
    else if (N == 120 && maxord == 10) t.kind = 'I';
    else if (N % 4 == 0 && maxord == N / 2) {
        t.kind = 'D';
        t.n = N / 4;
    } else {
        throw std::logic_error("unclassifiable quaternion group of order " + std::to_string(N));
    }
    return t;
}

LeftRight left_right_groups(const PointGroup& g) {
    LeftRight lr;
    std::unordered_set<Quat> ls, rs;
    for (const auto& e : g.elements()) {
        if (e.reversing()) continue;
        for (const Quat& q : {e.l(), -e.l()})
            if (ls.insert(q).second) lr.left.push_back(q);
        for (const Quat& q : {e.r(), -e.r()})
            if (rs.insert(q).second) lr.right.push_back(q);
    }
    lr.left_type = classify_quat_group(lr.left);
    lr.right_type = classify_quat_group(lr.right);
    return lr;
}

std::string Fingerprint::str() const {
    std::string s;
    for (const auto& [code, m] : counts) {
        if (!s.empty()) s += ' ';
        s += code.str() + ":" + std::to_string(m);
    }
    return s;
}

Fingerprint fingerprint(const PointGroup& g) {
    Fingerprint f;
    for (const auto& e : g.elements()) f.counts[element_code(e)] += 2;
    return f;
}

PointGroup conjugate(const PointGroup& g, const Transform4& h) {
    Transform4 hi = inverse(h);
    auto conj_one = [&](const Transform4& x) { return compose(compose(hi, x), h); };
    std::vector<Transform4> elems, gens;
    elems.reserve(g.order());
    for (const auto& e : g.elements()) elems.push_back(conj_one(e));
    for (const auto& e : g.generators()) gens.push_back(conj_one(e));
    return PointGroup(std::move(elems), std::move(gens));
}

bool equals(const PointGroup& a, const PointGroup& b) {
    if (a.order() != b.order()) return false;
    return std::all_of(a.elements().begin(), a.elements().end(),
                       [&](const Transform4& x) { return b.contains(x); });
}

PointGroup extend_achiral(const PointGroup& g, const Transform4& e) {
    if (!e.reversing()) throw std::invalid_argument("extending element must be orientation-reversing");
    if (!g.is_chiral()) throw std::invalid_argument("group to extend must be chiral");
    Transform4 ei = inverse(e);
    const auto& gens = g.generators().empty() ? g.elements() : g.generators();
    for (const auto& x : gens)
        if (!g.contains(compose(compose(ei, x), e)))
            throw std::invalid_argument("extending element does not normalize the group");
    if (!g.contains(compose(e, e))) throw std::invalid_argument("square of extending element not in group");
    std::vector<Transform4> elems = g.elements();
    elems.reserve(2 * g.order());
    for (const auto& x : g.elements()) elems.push_back(compose(x, e));
    std::vector<Transform4> ngens = g.generators();
    ngens.push_back(e);
    return PointGroup(std::move(elems), std::move(ngens));
}

PointGroup goursat_group(const GoursatData& d) {
    std::unordered_set<Quat> l0(d.L0.begin(), d.L0.end());
    std::unordered_set<Quat> r0(d.R0.begin(), d.R0.end());
    if (d.L.size() * d.R0.size() != d.R.size() * d.L0.size())
        throw std::invalid_argument("quotients L/L0 and R/R0 differ in size");
    if (d.pairing.size() * d.L0.size() != d.L.size())
        throw std::invalid_argument("pairing does not cover L/L0");
    auto coset_of = [&](const Quat& l) -> std::size_t {
        for (std::size_t k = 0; k < d.pairing.size(); ++k)
            if (l0.count(conj(d.pairing[k].first) * l)) return k;
        throw std::invalid_argument("element outside the pairing's cosets");
    };
    auto in_rcoset = [&](std::size_t k, const Quat& r) { return r0.count(conj(d.pairing[k].second) * r) != 0; };
    // Φ must be a homomorphism on representatives.
    for (std::size_t a = 0; a < d.pairing.size(); ++a)
        for (std::size_t b = 0; b < d.pairing.size(); ++b) {
            std::size_t c = coset_of(d.pairing[a].first * d.pairing[b].first);
            if (!in_rcoset(c, d.pairing[a].second * d.pairing[b].second))
                throw std::invalid_argument("pairing is not a homomorphism");
        }
    std::vector<Transform4> elems;
    std::unordered_set<Transform4> seen;
    for (const auto& l : d.L) {
        std::size_t k = coset_of(l);
        for (const auto& r : d.R)
            if (in_rcoset(k, r)) {
                Transform4 t = Transform4::pair(l, r);
                if (seen.insert(t).second) elems.push_back(t);
            }
    }
    return PointGroup(std::move(elems), {});
}

}  // namespace pg4
