#include "doctest.h"

#include "pg4/catalog.hpp"
#include "pg4/constants.hpp"

#include <algorithm>
#include <map>

using namespace pg4;

namespace {
GroupSpec S(const std::string& s) { return GroupSpec::parse(s); }
}  // namespace

TEST_CASE("build examples") {
    CHECK(build(S("tor:1:m=2,n=5,s=1")).order() == 10);
    CHECK(build(S("tub:+-[IxC]:n=2")).order() == 240);
    CHECK(build(S("tor:L:a=4,b=3")).order() == 100);
    CHECK_THROWS_AS(build(S("tor:1:m=0,n=5,s=1")), std::domain_error);
}

TEST_CASE("spec strings round trip") {
    for (const std::string s : {"tub:+-[IxC]:n=5", "tub:+-1/2[DbarxO]:n=3", "tor:1:m=2,n=5,s=1", "tor:L:a=4,b=3",
                                "tor:X/c2mm:m=5,n=5", "tor:*/p4gmS:n=2", "poly:+-[IxI]", "axial:prism:+I",
                                "axial:hyb:+T/+-T"})
        CHECK(S(s).str() == s);
    CHECK(S("tub:+-1/2[DbarxO]:n=3").right);
    CHECK_THROWS_AS(S("tor:Q:m=1,n=1"), std::invalid_argument);
    CHECK_THROWS_AS(S("poly:+-[IxQ]"), std::invalid_argument);
    CHECK_THROWS_AS(S("tub:+-[IxC]:k=1"), std::invalid_argument);
}

TEST_CASE("named constants") {
    CHECK(generate_quats({qc::i_I_dag(), qc::omega()}).size() == 120);
    CHECK(generate_quats({qc::i_I_prime(), qc::omega()}).size() == 120);
    CHECK(quat_norm2(qc::i_I_dag()) == FieldElem(1));
    CHECK(qc::by_name("e7") == Quat::cyclo(Rational(1, 7)));
    CHECK(qc::omega() * qc::omega_bar() == Quat::one());
}

TEST_CASE("orders match the closed forms") {
    for (const auto& sp : list_catalog(96)) {
        if (sp.kind == Kind::Tubical && sp.n > 2) continue;
        CAPTURE(sp.str());
        CHECK(static_cast<long long>(build(sp).order()) == spec_order(sp));
    }
    for (const auto& name : polyhedral_names()) {
        GroupSpec sp;
        sp.kind = Kind::Polyhedral;
        sp.family = name;
        if (spec_order(sp) > 2304) continue;
        CAPTURE(name);
        CHECK(static_cast<long long>(build(sp).order()) == spec_order(sp));
    }
    for (const auto& name : axial_names()) {
        GroupSpec sp = S("axial:" + name);
        CAPTURE(name);
        CHECK(static_cast<long long>(build(sp).order()) == spec_order(sp));
    }
}

TEST_CASE("tubical groups have one polyhedral factor") {
    for (const auto& f : tubical_families()) {
        GroupSpec sp;
        sp.kind = Kind::Tubical;
        sp.family = f;
        sp.n = 2;
        LeftRight lr = left_right_groups(build(sp));
        CAPTURE(f);
        CHECK(lr.left_type.polyhedral());
        CHECK_FALSE(lr.right_type.polyhedral());
        CHECK(lr.left_type.kind == tubical_info(f).polyhedral);
    }
}

TEST_CASE("achiral groups are half reversing") {
    for (const auto& sp : list_catalog(48)) {
        PointGroup g = build(sp);
        if (g.is_chiral()) continue;
        std::size_t rev = 0;
        for (const auto& x : g.elements()) rev += x.reversing();
        CHECK(2 * rev == g.order());
    }
}

TEST_CASE("right variants") {
    GroupSpec left = S("tub:+-[IxC]:n=3");
    GroupSpec right = right_variant(left);
    CHECK(right.str() == "tub:+-[CxI]:n=3");
    CHECK(right_variant(right) == left);
    PointGroup gl = build(left), gr = build(right);
    // Codes keep the order of (l, r); the mirror swaps the components.
    std::map<ElementCode, std::size_t> swapped;
    for (const auto& [code, m] : fingerprint(gl).counts)
        swapped[element_code(Transform4::pair(Quat::cyclo(code.b), Quat::cyclo(code.a)))] += m;
    CHECK(swapped == fingerprint(gr).counts);
    CHECK_FALSE(fingerprint(gl) == fingerprint(gr));
    CHECK_FALSE(equals(gl, gr));
}

TEST_CASE("Conway-Smith names of translation groups") {
    CHECK(cs_name_type1(6, 5, -2) == "+-1/5[C15^(4)xC5]");
    CHECK(cs_name_type1(3, 5, -1) == "+1/5[C15^(9)xC5]");
    CHECK(cs_name_type1(1, 1, 0) == "+1/1[C1^(1)xC1]");
}

TEST_CASE("catalog listing") {
    auto two = list_catalog(2);
    std::vector<std::string> names;
    for (const auto& sp : two) names.push_back(sp.str());
    CHECK(std::find(names.begin(), names.end(), "tor:1:m=1,n=1,s=0") != names.end());
    CHECK(std::find(names.begin(), names.end(), "tor:1:m=1,n=2,s=0") != names.end());
    CHECK(std::find(names.begin(), names.end(), "tor:1:m=2,n=1,s=-1") != names.end());
    CHECK(specs_of_order(100).size() == 192);
    for (const auto& sp : list_catalog(200)) CHECK(in_range(sp));
}

TEST_CASE("listed groups are pairwise different") {
    for (long long N = 1; N <= 32; ++N) {
        auto specs = specs_of_order(N);
        std::vector<PointGroup> groups;
        for (const auto& sp : specs) groups.push_back(build(sp));
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b) {
                CAPTURE(specs[a].str());
                CAPTURE(specs[b].str());
                CHECK_FALSE(equals(groups[a], groups[b]));
            }
    }
}
