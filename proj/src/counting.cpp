#include "pg4/counting.hpp"

#include "pg4/classify.hpp"
#include "pg4/toroidal.hpp"

#include <set>

namespace pg4 {

namespace {

const std::vector<std::string> kChiralFamilies = {"1", ".", "\\", "/", "X"};
const std::vector<std::string> kAchiralFamilies = {"|", "+", "L", "*"};

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// #{s : −m ≤ 2s ≤ n − m}
long long s_choices(long long m, long long n) { return floor_div(n - m, 2) - floor_div(-m + 1, 2) + 1; }

long long sum_over_factorizations(long long M) {
    long long total = 0;
    for (long long m = 1; m <= M; ++m)
        if (M % m == 0) total += s_choices(m, M / m);
    return total;
}

long long num_divisors(long long M) {
    long long c = 0;
    for (long long d = 1; d * d <= M; ++d)
        if (M % d == 0) c += (d * d == M) ? 1 : 2;
    return c;
}

// Rectangular and rhombic lattices of index M that are symmetric under the
// torus swap, plus square-type lattices {a ≥ b ≥ 0 : a² + b² = M}, minus the
// lattices counted twice.
long long symmetric_lattices(long long M) {
    long long rect = (num_divisors(M) + 1) / 2;
    if (M % 2 == 0) rect += (num_divisors(M / 2) + 1) / 2;
    long long circle = 0, overlap = 0;
    for (long long b = 0; 2 * b * b <= M; ++b)
        for (long long a = b; a * a + b * b <= M; ++a)
            if (a * a + b * b == M) {
                ++circle;
                if (b == 0 || a == b) ++overlap;
            }
    return rect + circle - overlap;
}

void finish(OrderCensus& c) {
    c.chiral_toroidal = c.achiral_toroidal = 0;
    for (const auto& f : kChiralFamilies) c.chiral_toroidal += c.families[f];
    for (const auto& f : kAchiralFamilies) c.achiral_toroidal += c.families[f];
    c.tubical = c.families["tubical"];
    c.polyhedral = c.families["polyhedral"];
    c.axial = c.families["axial"];
    c.total = c.chiral_toroidal + c.achiral_toroidal + c.tubical + c.polyhedral + c.axial;
}

void add_finite(OrderCensus& c, const GroupSpec& sp) {
    std::string key = sp.kind == Kind::Tubical ? "tubical" : sp.kind == Kind::Polyhedral ? "polyhedral" : "axial";
    ++c.families[key];
    if (sp.kind == Kind::Tubical) return;
    if (spec_is_chiral(sp)) ++c.chiral;
    else ++c.achiral;
}

}  // namespace

OrderCensus count_order(long long N) {
    if (N < 1) throw std::invalid_argument("order must be positive");
    OrderCensus c;
    c.order = N;
    for (const auto& f : kChiralFamilies) c.families[f] = 0;
    for (const auto& f : kAchiralFamilies) c.families[f] = 0;
    for (const std::string k : {"tubical", "polyhedral", "axial"}) c.families[k] = 0;

    c.families["1"] = sum_over_factorizations(N);
    if (N % 2 == 0) {
        long long M = N / 2;
        long long v = sum_over_factorizations(M);
        if (M == 1) v -= s_choices(1, 1);
        if (M == 2) v -= s_choices(2, 1);
        c.families["."] = v;
    }
    for (const std::string f : {"\\", "/", "X", "|", "+", "L", "*"})
        for (const auto& t : toroidal_subtypes(f))
            c.families[f] += static_cast<long long>(toroidal_specs_of_order(f, t, N, false).size());

    for (const auto& sp : specs_of_order(N))
        if (sp.kind != Kind::Toroidal) add_finite(c, sp);
    finish(c);
    c.chiral += c.chiral_toroidal + c.tubical;
    c.achiral += c.achiral_toroidal;
    return c;
}

SelfMirrorCount count_self_mirror(long long N) {
    SelfMirrorCount r;
    r.plain = symmetric_lattices(N);
    if (N % 2 == 0) {
        long long M = N / 2;
        // ._{1,1} and ._{2,1} are excluded from the catalog; both are self-mirror.
        r.dot = symmetric_lattices(M) - (M <= 2 ? 1 : 0);
    }
    // ⊙X: c2mm with m = n (4m² = N), p2mm and p2gg with m = n (8m² = N).
    for (long long m = 1; 4 * m * m <= N; ++m) {
        if (4 * m * m == N && m >= 3) ++r.cross;
        if (8 * m * m == N && m >= 2) r.cross += 2;
    }
    return r;
}

OrderCensus brute_force_census(long long N) {
    std::set<std::string> seen;
    OrderCensus c;
    c.order = N;
    for (const auto& f : kChiralFamilies) c.families[f] = 0;
    for (const auto& f : kAchiralFamilies) c.families[f] = 0;
    for (const std::string k : {"tubical", "polyhedral", "axial"}) c.families[k] = 0;

    std::vector<GroupSpec> specs = specs_of_order(N);
    for (const std::string f : {"1", ".", "\\", "/", "X", "|", "+", "L", "*"})
        for (const auto& t : toroidal_subtypes(f))
            for (const auto& sp : toroidal_specs_of_order(f, t, N, true))
                if (!in_range(sp)) specs.push_back(sp);

    for (const auto& sp : specs) {
        GroupSpec canon = classify(build(sp));
        if (!seen.insert(canon.str()).second) continue;
        if (canon.kind == Kind::Toroidal) {
            ++c.families[canon.family];
        } else {
            add_finite(c, canon);
        }
    }
    finish(c);
    c.chiral += c.chiral_toroidal + c.tubical;
    c.achiral += c.achiral_toroidal;
    return c;
}

SelfMirrorCount brute_force_self_mirror(long long N) {
    SelfMirrorCount r;
    const Transform4 mirror = Transform4::star(Quat::one(), Quat::one());
    for (const auto& f : kChiralFamilies)
        for (const auto& t : toroidal_subtypes(f))
            for (const auto& sp : toroidal_specs_of_order(f, t, N, false)) {
                if (!(classify_toroidal(conjugate(build(sp), mirror)) == sp)) continue;
                if (f == "1") ++r.plain;
                else if (f == ".") ++r.dot;
                else if (f == "X") ++r.cross;
                else throw std::logic_error("unexpected self-mirror group " + sp.str());
            }
    return r;
}

nlohmann::json census_to_json(const OrderCensus& c, bool breakdown) {
    nlohmann::json j;
    j["schema"] = "pg4/1";
    j["order"] = c.order;
    j["total"] = c.total;
    j["chiral"] = c.chiral;
    j["achiral"] = c.achiral;
    j["chiral_toroidal"] = c.chiral_toroidal;
    j["achiral_toroidal"] = c.achiral_toroidal;
    j["tubical"] = c.tubical;
    j["polyhedral"] = c.polyhedral;
    j["axial"] = c.axial;
    if (breakdown) j["families"] = c.families;
    return j;
}

}  // namespace pg4
