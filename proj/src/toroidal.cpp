#include "pg4/toroidal.hpp"

#include "pg4/constants.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pg4 {

namespace {

constexpr std::array<Dir, 8> kAllDirs = {Dir::Id,   Dir::Bar,       Dir::Dash, Dir::Dot,
                                         Dir::Slash, Dir::Backslash, Dir::L,    Dir::R};

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Dir dir_of_matrix(const Mat2& m) {
    for (Dir d : kAllDirs)
        if (direction_matrix(d) == m) return d;
    throw std::logic_error("matrix is not in D8");
}

// Inverse of an element of D8 is its transpose.
Mat2 transpose(const Mat2& m) { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

TorusPoint reduce(const Rational& a, const Rational& b) { return {a.mod(2), b.mod(2)}; }

TorusPoint add(const TorusPoint& p, const TorusPoint& q) { return reduce(p.a1 + q.a1, p.a2 + q.a2); }
TorusPoint sub(const TorusPoint& p, const TorusPoint& q) { return reduce(p.a1 - q.a1, p.a2 - q.a2); }

TorusPoint apply_mat(const Mat2& m, const Rational& x, const Rational& y) {
    return reduce(Rational(m[0][0]) * x + Rational(m[0][1]) * y, Rational(m[1][0]) * x + Rational(m[1][1]) * y);
}

Mat2 one_minus(Dir d) {
    Mat2 m = direction_matrix(d);
    return {{{1 - m[0][0], -m[0][1]}, {-m[1][0], 1 - m[1][1]}}};
}

bool zero_mod2(const Rational& x) { return x.mod(2).is_zero(); }

// Solutions of (I−D)β ≡ v (mod 2). Each entry is a particular solution and
// an integer kernel direction (zero when the solution set is finite).
struct Solution {
    Rational b1, b2;
    int k1 = 0, k2 = 0;
};

std::vector<Solution> solve_congruence(Dir d, const TorusPoint& v) {
    Mat2 m = one_minus(d);
    std::vector<Solution> out;
    int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    auto satisfies = [&](const Rational& b1, const Rational& b2) {
        return zero_mod2(Rational(m[0][0]) * b1 + Rational(m[0][1]) * b2 - v.a1) &&
               zero_mod2(Rational(m[1][0]) * b1 + Rational(m[1][1]) * b2 - v.a2);
    };
    if (det != 0) {
        std::set<TorusPoint> seen;
        int ad = std::abs(det);
        for (int z0 = 0; z0 < ad; ++z0)
            for (int z1 = 0; z1 < ad; ++z1) {
                Rational x = v.a1 + Rational(2 * z0), y = v.a2 + Rational(2 * z1);
                Rational b1 = (Rational(m[1][1]) * x - Rational(m[0][1]) * y) / Rational(det);
                Rational b2 = (Rational(m[0][0]) * y - Rational(m[1][0]) * x) / Rational(det);
                TorusPoint p = reduce(b1, b2);
                if (seen.insert(p).second) out.push_back({p.a1, p.a2});
            }
        return out;
    }
    int row = (m[0][0] != 0 || m[0][1] != 0) ? 0 : 1;
    if (m[row][0] == 0 && m[row][1] == 0) {
        if (zero_mod2(v.a1) && zero_mod2(v.a2)) out.push_back({Rational(0), Rational(0), 1, 0});
        return out;
    }
    int col = m[row][0] != 0 ? 0 : 1;
    int coef = m[row][col];
    // rank one: the kernel is orthogonal to the nonzero row
    int k1 = -m[row][1], k2 = m[row][0];
    int g = std::gcd(std::abs(k1), std::abs(k2));
    k1 /= g;
    k2 /= g;
    const Rational& vr = row == 0 ? v.a1 : v.a2;
    for (int j = 0; j < std::abs(coef); ++j) {
        Rational bc = (vr + Rational(2 * j)) / Rational(coef);
        Rational b1 = col == 0 ? bc : Rational(0);
        Rational b2 = col == 0 ? Rational(0) : bc;
        if (satisfies(b1, b2)) out.push_back({b1, b2, k1, k2});
    }
    return out;
}

std::set<Dir> generated(const std::vector<Dir>& gens) {
    std::set<Dir> s{Dir::Id};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Dir> cur(s.begin(), s.end());
        for (Dir a : cur)
            for (Dir b : gens) {
                Dir c = dir_of_matrix(mat_mul(direction_matrix(b), direction_matrix(a)));
                if (s.insert(c).second) grew = true;
            }
    }
    return s;
}

std::vector<Dir> generating_tags(const std::set<Dir>& dirs) {
    static const std::array<Dir, 7> pref = {Dir::Slash, Dir::Backslash, Dir::L, Dir::Bar,
                                            Dir::Dash,  Dir::R,         Dir::Dot};
    std::vector<Dir> gens;
    for (Dir d : pref) {
        if (!dirs.count(d)) continue;
        if (generated(gens) == dirs) break;
        if (!generated(gens).count(d)) gens.push_back(d);
    }
    return gens;
}

// Bounded: sweeps over many orders would otherwise keep every candidate.
std::shared_ptr<const TorusData> cached_catalog_data(const GroupSpec& spec) {
    constexpr std::size_t kMaxEntries = 256;
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const TorusData>> cache;
    auto key = spec.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto data = std::make_shared<const TorusData>(torus_data(build(spec)));
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() >= kMaxEntries) cache.clear();
    cache.emplace(key, data);
    return data;
}

// Candidate specs for a directional family, in-range ones first.
std::vector<GroupSpec> family_candidates(const TorusData& d, const std::string& fam) {
    long long order = static_cast<long long>(d.order());
    if (fam == "1" || fam == ".") {
        TorusLattice lat = normalize_lattice(d.lattice);
        GroupSpec sp;
        sp.kind = Kind::Toroidal;
        sp.family = fam;
        sp.m = lat.m;
        sp.n = lat.n;
        sp.s = lat.s;
        return {sp};
    }
    std::vector<GroupSpec> cands;
    for (const auto& sub : toroidal_subtypes(fam)) {
        auto v = toroidal_specs_of_order(fam, sub, order, true);
        cands.insert(cands.end(), v.begin(), v.end());
    }
    std::stable_partition(cands.begin(), cands.end(), [](const GroupSpec& s) { return in_range(s); });
    return cands;
}

// Classification without the duplicate search: the first in-range match
// over the orientation-preserving direction conjugates, else (unless
// in_range_only) any match.
std::optional<ToroidalMatch> classify_data(const TorusData& d0, bool in_range_only) {
    for (bool in_range_pass : {true, false}) {
        if (!in_range_pass && in_range_only) break;
        for (Dir e : {Dir::Id, Dir::Dot, Dir::Slash, Dir::Backslash}) {
            TorusData d = e == Dir::Id ? d0 : conjugate_direction(d0, e);
            std::string fam = family_of_dirs(d.dirs);
            if (fam.empty()) continue;
            for (const auto& c : family_candidates(d, fam)) {
                if (in_range(c) != in_range_pass) continue;
                auto cdp = cached_catalog_data(c);
                const TorusData& cd = *cdp;
                if (cd.lattice != d.lattice || cd.dirs != d.dirs) continue;
                auto beta = match_origin(d, cd);
                if (!beta) continue;
                return ToroidalMatch{c, compose(direction_rep(e), torus_translation(beta->a1, beta->a2))};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

const char* dir_symbol(Dir d) {
    switch (d) {
        case Dir::Id: return "1";
        case Dir::Bar: return "|";
        case Dir::Dash: return "-";
        case Dir::Dot: return ".";
        case Dir::Slash: return "/";
        case Dir::Backslash: return "\\";
        case Dir::L: return "L";
        case Dir::R: return "R";
    }
    return "?";
}

Dir direction_of(const Transform4& g) {
    if (!g.l().is_cyclo() || !g.r().is_cyclo())
        throw std::domain_error("not toroidal in standard coordinates: " + g.str());
    bool jl = g.l().as_cyclo().j, jr = g.r().as_cyclo().j;
    if (!g.reversing()) {
        if (!jl && !jr) return Dir::Id;
        if (jl && jr) return Dir::Dot;
        return jr ? Dir::Slash : Dir::Backslash;
    }
    if (!jl && !jr) return Dir::Bar;
    if (jl && jr) return Dir::Dash;
    return jl ? Dir::L : Dir::R;
}

Transform4 direction_rep(Dir d) {
    const Quat one = Quat::one(), i = Quat::i(), j = Quat::j(), k = Quat::k();
    switch (d) {
        case Dir::Id: return Transform4::identity();
        case Dir::Bar: return Transform4::star(i, i);
        case Dir::Dash: return Transform4::star(k, k);
        case Dir::Dot: return Transform4::pair(j, j);
        case Dir::Slash: return Transform4::pair(i, k);
        case Dir::Backslash: return Transform4::pair(-k, i);
        case Dir::L: return Transform4::star(-j, one);
        case Dir::R: return Transform4::star(one, j);
    }
    return Transform4::identity();
}

Mat2 direction_matrix(Dir d) {
    switch (d) {
        case Dir::Id: return {{{1, 0}, {0, 1}}};
        case Dir::Bar: return {{{-1, 0}, {0, 1}}};
        case Dir::Dash: return {{{1, 0}, {0, -1}}};
        case Dir::Dot: return {{{-1, 0}, {0, -1}}};
        case Dir::Slash: return {{{0, 1}, {1, 0}}};
        case Dir::Backslash: return {{{0, -1}, {-1, 0}}};
        case Dir::L: return {{{0, -1}, {1, 0}}};
        case Dir::R: return {{{0, 1}, {-1, 0}}};
    }
    return {};
}

std::string TorusPoint::str() const { return "(" + a1.str() + "," + a2.str() + ")"; }

TorusElement torus_element(const Transform4& g) {
    Dir d = direction_of(g);
    Transform4 t = compose(inverse(direction_rep(d)), g);
    if (t.reversing() || t.l().as_cyclo().j || t.r().as_cyclo().j)
        throw std::logic_error("translation part is not a torus translation");
    const Rational& tl = t.l().as_cyclo().t;
    const Rational& tr = t.r().as_cyclo().t;
    return {d, reduce(tr - tl, -tl - tr)};
}

Transform4 from_torus_element(const TorusElement& e) {
    return compose(direction_rep(e.dir), torus_translation(e.t.a1, e.t.a2));
}

std::vector<TorusElement> to_torus_rep(const PointGroup& g) {
    std::vector<TorusElement> out;
    out.reserve(g.order());
    for (const auto& x : g.elements()) out.push_back(torus_element(x));
    return out;
}

std::size_t TorusData::order() const { return lattice.size() * dirs.size(); }

TorusData torus_data(const PointGroup& g) {
    TorusData d;
    for (const auto& e : to_torus_rep(g)) {
        d.dirs.insert(e.dir);
        d.cosets[e.dir].insert(e.t);
        if (e.dir == Dir::Id) d.lattice.insert(e.t);
    }
    return d;
}

TorusData conjugate_direction(const TorusData& d, Dir e) {
    Mat2 me = direction_matrix(e), mi = transpose(me);
    TorusData out;
    for (const auto& [dir, pts] : d.cosets) {
        Dir nd = dir_of_matrix(mat_mul(me, mat_mul(direction_matrix(dir), mi)));
        out.dirs.insert(nd);
        auto& dst = out.cosets[nd];
        for (const auto& p : pts) dst.insert(apply_mat(me, p.a1, p.a2));
    }
    out.lattice = out.cosets[Dir::Id];
    return out;
}

TorusData conjugate_translation(const TorusData& d, const TorusPoint& beta) {
    TorusData out;
    out.dirs = d.dirs;
    out.lattice = d.lattice;
    for (const auto& [dir, pts] : d.cosets) {
        TorusPoint shift = apply_mat(one_minus(dir), beta.a1, beta.a2);
        auto& dst = out.cosets[dir];
        for (const auto& p : pts) dst.insert(add(p, shift));
    }
    return out;
}

std::optional<TorusPoint> match_origin(const TorusData& a, const TorusData& b) {
    if (a.dirs != b.dirs || a.lattice != b.lattice) return std::nullopt;
    auto verify = [&](const Rational& b1, const Rational& b2) {
        for (const auto& [dir, pts] : a.cosets) {
            if (dir == Dir::Id) continue;
            TorusPoint moved = add(*pts.begin(), apply_mat(one_minus(dir), b1, b2));
            if (!b.cosets.at(dir).count(moved)) return false;
        }
        return true;
    };
    auto gens = generating_tags(a.dirs);
    if (gens.empty()) return TorusPoint{Rational(0), Rational(0)};
    const TorusPoint& rep1 = *a.cosets.at(gens[0]).begin();
    // Targets s1 differing by (1−D)ℓ, ℓ in the lattice, give solutions
    // differing by ℓ, which conjugate identically; one per class suffices.
    std::set<TorusPoint> image;
    Mat2 m1 = one_minus(gens[0]);
    for (const auto& l : a.lattice) image.insert(apply_mat(m1, l.a1, l.a2));
    std::vector<TorusPoint> tried;
    for (const auto& s1 : b.cosets.at(gens[0])) {
        if (std::any_of(tried.begin(), tried.end(), [&](const TorusPoint& t) { return image.count(sub(s1, t)) > 0; }))
            continue;
        tried.push_back(s1);
        for (const auto& sol : solve_congruence(gens[0], sub(s1, rep1))) {
            if (gens.size() == 1 || (sol.k1 == 0 && sol.k2 == 0)) {
                if (verify(sol.b1, sol.b2)) return reduce(sol.b1, sol.b2);
                continue;
            }
            Mat2 m2 = one_minus(gens[1]);
            int w1 = m2[0][0] * sol.k1 + m2[0][1] * sol.k2;
            int w2 = m2[1][0] * sol.k1 + m2[1][1] * sol.k2;
            TorusPoint base = apply_mat(m2, sol.b1, sol.b2);
            const TorusPoint& rep2 = *a.cosets.at(gens[1]).begin();
            for (const auto& s2 : b.cosets.at(gens[1])) {
                TorusPoint u = sub(sub(s2, rep2), base);
                int w = w1 != 0 ? w1 : w2;
                const Rational& ui = w1 != 0 ? u.a1 : u.a2;
                if (w == 0) {
                    if (verify(sol.b1, sol.b2)) return reduce(sol.b1, sol.b2);
                    continue;
                }
                for (int j = 0; j < std::abs(w); ++j) {
                    Rational t = (ui + Rational(2 * j)) / Rational(w);
                    Rational b1 = sol.b1 + t * Rational(sol.k1), b2 = sol.b2 + t * Rational(sol.k2);
                    if (verify(b1, b2)) return reduce(b1, b2);
                }
            }
        }
    }
    return std::nullopt;
}

TorusLattice normalize_lattice(const std::set<TorusPoint>& pts) {
    if (pts.empty() || !pts.count(TorusPoint{Rational(0), Rational(0)}))
        throw std::invalid_argument("translation set must contain the origin");
    long long m = 0;
    for (const auto& p : pts)
        if (p.a1 == p.a2) ++m;
    long long total = static_cast<long long>(pts.size());
    if (total % m != 0) throw std::invalid_argument("translation set is not a lattice");
    long long n = total / m;
    Rational step(2, n);
    std::optional<Rational> x;
    for (const auto& p : pts) {
        Rational d = p.a1 - p.a2;
        Rational k = (step - d) / Rational(2);
        if (!k.is_integer()) continue;
        x = (p.a1 + p.a2) / Rational(2) + k;
        break;
    }
    if (!x) throw std::invalid_argument("translation set is not a lattice");
    Rational period(2, m);
    Rational xr = *x - period * Rational(BigInt((*x / period).floor()), BigInt(1));
    if (xr > Rational(1, m)) xr = period - xr;
    Rational s2 = xr * Rational(m * n) - Rational(m);
    if (!(s2 / Rational(2)).is_integer()) throw std::invalid_argument("translation set is not a lattice");
    TorusLattice out;
    out.m = m;
    out.n = n;
    out.s = (s2 / Rational(2)).num().convert_to<long long>();
    return out;
}

std::string family_of_dirs(const std::set<Dir>& dirs) {
    auto is = [&](std::initializer_list<Dir> l) { return dirs == std::set<Dir>(l); };
    if (is({Dir::Id})) return "1";
    if (is({Dir::Id, Dir::Dot})) return ".";
    if (is({Dir::Id, Dir::Bar})) return "|";
    if (is({Dir::Id, Dir::Slash})) return "/";
    if (is({Dir::Id, Dir::Backslash})) return "\\";
    if (is({Dir::Id, Dir::Slash, Dir::Backslash, Dir::Dot})) return "X";
    if (is({Dir::Id, Dir::Bar, Dir::Dash, Dir::Dot})) return "+";
    if (is({Dir::Id, Dir::L, Dir::Dot, Dir::R})) return "L";
    if (dirs.size() == 8) return "*";
    return "";
}

ToroidalMatch match_toroidal(const PointGroup& g) {
    auto m = classify_data(torus_data(g), false);
    if (!m) throw std::domain_error("no toroidal catalog match");
    if (in_range(m->spec)) return *m;
    ToroidalMatch dup = canonical_duplicate(m->spec);
    return {dup.spec, compose(m->conjugator, dup.conjugator)};
}

GroupSpec classify_toroidal(const PointGroup& g) { return match_toroidal(g).spec; }

GroupSpec canonicalize_duplicates(const GroupSpec& spec) { return canonical_duplicate(spec).spec; }

ToroidalMatch canonical_duplicate(const GroupSpec& spec) {
    if (spec.kind != Kind::Toroidal || in_range(spec)) return {spec, Transform4::identity()};
    PointGroup g = build(spec);
    static const std::vector<Quat> o2 = generate_quats({qc::i_O(), qc::omega()});
    // The orientation-preserving torus symmetries first: they settle the
    // parameter swaps without a search.
    std::vector<Transform4> order;
    for (Dir d : {Dir::Id, Dir::Dot, Dir::Slash, Dir::Backslash}) order.push_back(direction_rep(d));
    for (const auto& a : o2)
        for (const auto& b : o2) order.push_back(Transform4::pair(a, b));
    std::unordered_set<Transform4> tried;
    for (const auto& h : order) {
        if (!tried.insert(h).second) continue;
        try {
            bool standard = true;
            for (const auto& x : g.generators()) {
                Transform4 y = conjugate(x, h);
                if (!y.l().is_cyclo() || !y.r().is_cyclo()) {
                    standard = false;
                    break;
                }
            }
            if (!standard) continue;
            TorusData d = torus_data(conjugate(g, h));
            if (auto m = classify_data(d, true)) return {m->spec, compose(h, m->conjugator)};
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::domain_error("no in-range representative found for " + spec.str());
}

}  // namespace pg4
