#include "doctest.h"

#include "pg4/constants.hpp"
#include "pg4/toroidal.hpp"

#include <random>

using namespace pg4;

namespace {

GroupSpec S(const std::string& s) { return GroupSpec::parse(s); }

const std::vector<Dir> kDirs = {Dir::Id, Dir::Bar, Dir::Dash, Dir::Dot, Dir::Slash, Dir::Backslash, Dir::L, Dir::R};

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

TorusPoint tp(long long p1, long long q1, long long p2, long long q2) { return {Rational(p1, q1), Rational(p2, q2)}; }

TorusPoint reduce(const Rational& a, const Rational& b) { return {a.mod(2), b.mod(2)}; }

}  // namespace

TEST_CASE("torus representation examples") {
    TorusElement neg = torus_element(Transform4::pair(Quat::one(), Quat::minus_one()));
    CHECK(neg.dir == Dir::Id);
    CHECK(neg.t == tp(1, 1, 1, 1));
    TorusElement flip = torus_element(Transform4::pair(Quat::j(), Quat::j()));
    CHECK(flip.dir == Dir::Dot);
    CHECK(flip.t == tp(0, 1, 0, 1));
    TorusElement swap = torus_element(Transform4::pair(Quat::i(), Quat::k()));
    CHECK(swap.dir == Dir::Slash);
    CHECK(swap.t == tp(0, 1, 0, 1));
    CHECK_THROWS_AS(torus_element(Transform4::pair(qc::omega(), Quat::one())), std::domain_error);
    CHECK_THROWS_AS(to_torus_rep(build(S("tub:+-[TxC]:n=1"))), std::domain_error);
}

TEST_CASE("directional representatives and matrices") {
    for (Dir d : kDirs) {
        CHECK(direction_of(direction_rep(d)) == d);
        TorusElement e = torus_element(direction_rep(d));
        CHECK(e.t == tp(0, 1, 0, 1));
        CHECK(from_torus_element(e) == direction_rep(d));
    }
    // The tags form D8 and their matrices multiply accordingly
    // (apply a first, then b: matrix M_b · M_a).
    for (Dir a : kDirs)
        for (Dir b : kDirs) {
            Dir c = direction_of(compose(direction_rep(a), direction_rep(b)));
            CHECK(direction_matrix(c) == mul(direction_matrix(b), direction_matrix(a)));
        }
}

TEST_CASE("directional part followed by a translation") {
    // direction_rep(D) then R_τ acts as φ ↦ Dφ + τ; a translation conjugated
    // by a direction is the translation by the image vector.
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> num(0, 23);
    for (int t = 0; t < 200; ++t) {
        Dir d = kDirs[t % 8];
        Rational a1(num(rng), 12), a2(num(rng), 12);
        Transform4 g = compose(direction_rep(d), torus_translation(a1, a2));
        TorusElement e = torus_element(g);
        CHECK(e.dir == d);
        CHECK(e.t == reduce(a1, a2));
        Mat2 m = direction_matrix(d);
        Transform4 lhs = compose(torus_translation(a1, a2), direction_rep(d));
        Transform4 rhs = compose(direction_rep(d), torus_translation(Rational(m[0][0]) * a1 + Rational(m[0][1]) * a2,
                                                                     Rational(m[1][0]) * a1 + Rational(m[1][1]) * a2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("torus data conjugation rules agree with exact conjugation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(0, 23);
    for (const std::string s : {"tor:|/pg:m=2,n=4", "tor:X/c2mm:m=3,n=5", "tor:*/p4gmU:n=3", "tor:L:a=3,b=1",
                                "tor:+/p2mg:m=2,n=3", "tor:\\/cm:m=3,n=1"}) {
        PointGroup g = build(S(s));
        TorusData d = torus_data(g);
        for (Dir e : {Dir::Id, Dir::Dot, Dir::Slash, Dir::Backslash, Dir::L, Dir::Bar}) {
            TorusData want = torus_data(conjugate(g, direction_rep(e)));
            TorusData got = conjugate_direction(d, e);
            CHECK(got.dirs == want.dirs);
            CHECK(got.lattice == want.lattice);
            CHECK(got.cosets == want.cosets);
        }
        for (int t = 0; t < 5; ++t) {
            TorusPoint beta{Rational(num(rng), 12), Rational(num(rng), 12)};
            TorusData want = torus_data(conjugate(g, torus_translation(beta.a1, beta.a2)));
            TorusData got = conjugate_translation(d, beta);
            CHECK(got.cosets == want.cosets);
            auto found = match_origin(d, want);
            REQUIRE(found.has_value());
            CHECK(conjugate_translation(d, *found).cosets == want.cosets);
        }
    }
}

TEST_CASE("conjugating a reflection group by a torus swap exchanges | and −") {
    PointGroup g = build(S("tor:|/pm:m=2,n=3"));
    TorusData d = torus_data(conjugate(g, direction_rep(Dir::Slash)));
    CHECK(d.dirs.count(Dir::Dash) == 1);
    CHECK(d.dirs.count(Dir::Bar) == 0);
}

TEST_CASE("translation subgroup is invariant under the directional parts") {
    for (long long N = 1; N <= 64; ++N)
        for (const auto& sp : specs_of_order(N)) {
            if (sp.kind != Kind::Toroidal) continue;
            TorusData d = torus_data(build(sp));
            for (Dir dir : d.dirs) {
                Mat2 m = direction_matrix(dir);
                for (const auto& p : d.lattice) {
                    TorusPoint q = reduce(Rational(m[0][0]) * p.a1 + Rational(m[0][1]) * p.a2,
                                          Rational(m[1][0]) * p.a1 + Rational(m[1][1]) * p.a2);
                    CHECK(d.lattice.count(q) == 1);
                }
            }
        }
}

TEST_CASE("lattice normalization") {
    CHECK(normalize_lattice(torus_data(build(S("tor:1:m=2,n=5,s=1"))).lattice) == TorusLattice{2, 5, 1});
    CHECK(normalize_lattice({tp(0, 1, 0, 1)}) == TorusLattice{1, 1, 0});
    for (long long m = 1; m <= 6; ++m)
        for (long long n = 1; n <= 6; ++n)
            for (long long s = -m; 2 * s <= n - m; ++s) {
                if (2 * s < -m) continue;
                GroupSpec a = S("tor:1:m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",s=" + std::to_string(s));
                GroupSpec b = a, c = a;
                b.s = -m - s;
                c.s = s + n;
                PointGroup ga = build(a);
                CHECK(equals(ga, build(c)));
                CHECK(normalize_lattice(torus_data(build(b)).lattice) == TorusLattice{m, n, s});
            }
}

TEST_CASE("round trip for small toroidal groups") {
    for (long long N = 1; N <= 60; ++N)
        for (const auto& sp : specs_of_order(N)) {
            if (sp.kind != Kind::Toroidal) continue;
            CAPTURE(sp.str());
            CHECK(classify_toroidal(build(sp)) == sp);
        }
}

TEST_CASE("classification examples") {
    CHECK(classify_toroidal(build(S("tor:1:m=2,n=5,s=1"))).str() == "tor:1:m=2,n=5,s=1");
    CHECK(classify_toroidal(build(S("tor:X/c2mm:m=1,n=5"))).str() == "tor:.:m=1,n=10,s=2");
    CHECK(classify_toroidal(build(S("tor:.:m=1,n=10,s=2"))).str() == "tor:.:m=1,n=10,s=2");
    CHECK(classify_toroidal(build(S("tor:L:a=4,b=3"))).str() == "tor:L:a=4,b=3");
    CHECK(classify_toroidal(build(S("tor:L:a=3,b=4"))).str() == "tor:L:a=4,b=3");
}

TEST_CASE("classification is invariant under torus-standard conjugation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(0, 47);
    const Dir es[4] = {Dir::Id, Dir::Dot, Dir::Slash, Dir::Backslash};
    for (long long N = 1; N <= 24; ++N)
        for (const auto& sp : specs_of_order(N)) {
            if (sp.kind != Kind::Toroidal) continue;
            Transform4 h = compose(torus_translation(Rational(num(rng), 24), Rational(num(rng), 24)), direction_rep(es[num(rng) % 4]));
            ToroidalMatch m = match_toroidal(conjugate(build(sp), h));
            CAPTURE(sp.str());
            CHECK(m.spec == sp);
            CHECK(equals(conjugate(conjugate(build(sp), h), m.conjugator), build(sp)));
        }
}

TEST_CASE("duplications") {
    // out-of-range member -> kept representative
    const std::vector<std::pair<std::string, std::string>> chains = {
        {"tor://cm:m=1,n=1", "tor:1:m=1,n=2,s=0"},     {"tor:\\/cm:m=1,n=1", "tor:1:m=1,n=2,s=0"},
        {"tor:.:m=1,n=1,s=0", "tor:1:m=1,n=2,s=0"},    {"tor://pm:m=1,n=1", "tor:1:m=2,n=2,s=0"},
        {"tor:\\/pm:m=1,n=1", "tor:1:m=2,n=2,s=0"},    {"tor:.:m=2,n=1,s=-1", "tor:1:m=2,n=2,s=0"},
        {"tor:X/p2gg:m=1,n=1", "tor:1:m=4,n=2,s=-2"},  {"tor://pm:m=2,n=1", "tor:1:m=4,n=2,s=-2"},
        {"tor:\\/pm:m=1,n=2", "tor:1:m=4,n=2,s=-2"},   {"tor:X/p2gm:m=1,n=1", "tor:.:m=2,n=2,s=-1"},
        {"tor://cm:m=2,n=2", "tor:.:m=2,n=2,s=-1"},    {"tor://pm:m=1,n=2", "tor:.:m=2,n=2,s=-1"},
        {"tor:X/p2mg:m=1,n=1", "tor:.:m=4,n=1,s=-2"},  {"tor:\\/cm:m=2,n=2", "tor:.:m=4,n=1,s=-2"},
        {"tor:\\/pm:m=2,n=1", "tor:.:m=4,n=1,s=-2"},   {"tor:*/p4gmU:n=1", "tor:+/p2gg:m=2,n=1"},
        {"tor:+/p2gg:m=1,n=2", "tor:+/p2gg:m=2,n=1"},  {"tor:X/c2mm:m=2,n=2", "tor:.:m=4,n=2,s=-2"},
        {"tor:X/p2mm:m=2,n=1", "tor:.:m=4,n=2,s=-2"},  {"tor:X/p2mm:m=1,n=2", "tor:.:m=4,n=2,s=-2"},
    };
    for (const auto& [from, to] : chains) {
        CAPTURE(from);
        GroupSpec sp = S(from);
        CHECK_FALSE(in_range(sp));
        ToroidalMatch m = canonical_duplicate(sp);
        CHECK(m.spec.str() == to);
        CHECK(equals(conjugate(build(sp), m.conjugator), build(m.spec)));
        CHECK(canonicalize_duplicates(sp).str() == to);
    }
    CHECK(canonicalize_duplicates(S("tor:1:m=2,n=5,s=1")).str() == "tor:1:m=2,n=5,s=1");
}

TEST_CASE("c2mm_{1,n} is a conjugate of a translation-and-flip group for odd n") {
    FieldElem h = FieldElem::sqrt2() * FieldElem(Rational(1, 2));
    Quat minus = Quat::alg(h, 0, -h, 0), plus = Quat::alg(h, 0, h, 0);
    for (long long n = 3; n <= 19; n += 2) {
        GroupSpec x = S("tor:X/c2mm:m=1,n=" + std::to_string(n));
        GroupSpec dot = S("tor:.:m=1,n=" + std::to_string(2 * n) + ",s=" + std::to_string((n - 1) / 2));
        Quat a = n % 4 == 3 ? minus : plus;
        CAPTURE(n);
        CHECK(equals(conjugate(build(dot), Transform4::pair(a, Quat::one())), build(x)));
    }
}
