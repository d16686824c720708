#include "doctest.h"

#include "pg4/counting.hpp"

using namespace pg4;

TEST_CASE("order 100") {
    OrderCensus c = count_order(100);
    CHECK(c.families.at("1") == 113);
    CHECK(c.families.at(".") == 48);
    CHECK(c.families.at("\\") == 3);
    CHECK(c.families.at("/") == 3);
    CHECK(c.families.at("X") == 1);
    CHECK(c.chiral_toroidal == 168);
    CHECK(c.families.at("|") == 15);
    CHECK(c.families.at("+") == 7);
    CHECK(c.families.at("L") == 2);
    CHECK(c.achiral_toroidal == 24);
    CHECK(c.tubical + c.polyhedral + c.axial == 0);
    CHECK(c.total == 192);
}

TEST_CASE("order 7200") {
    OrderCensus c = count_order(7200);
    CHECK(c.chiral_toroidal == 19319);
    CHECK(c.achiral_toroidal == 216);
    CHECK(c.tubical == 22);
    CHECK(c.polyhedral == 1);
    CHECK(c.chiral == 19342);
    CHECK(c.achiral == 216);
}

TEST_CASE("odd primes") {
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 997}) {
        CAPTURE(p);
        CHECK(count_order(p).total == (p + 3) / 2);
    }
}

TEST_CASE("totals are sums of parts") {
    for (long long N = 1; N <= 300; ++N) {
        OrderCensus c = count_order(N);
        long long fam = 0;
        for (const auto& [k, v] : c.families) fam += v;
        CHECK(fam == c.total);
        CHECK(c.chiral + c.achiral == c.total);
        CHECK(c.chiral_toroidal + c.achiral_toroidal + c.tubical + c.polyhedral + c.axial == c.total);
    }
}

TEST_CASE("growth") {
    long long sum = 0;
    double r200 = 0, r400 = 0, r800 = 0;
    for (long long N = 1; N <= 1000; ++N) {
        long long t = count_order(N).total;
        CHECK(2 * t >= N);
        sum += t;
        if (N == 200) r200 = double(sum) / (200.0 * 200.0);
        if (N == 400) r400 = double(sum) / (400.0 * 400.0);
        if (N == 800) r800 = double(sum) / (800.0 * 800.0);
    }
    double lo = std::min({r200, r400, r800}), hi = std::max({r200, r400, r800});
    CHECK(hi < 2 * lo);
}

TEST_CASE("self-mirror counts") {
    SelfMirrorCount s = count_self_mirror(100);
    CHECK(s.plain == 9);
    CHECK(s.dot == 6);
    CHECK(s.cross == 1);
    CHECK(s.total() == 16);
    CHECK(count_self_mirror(1).total() == 1);
    for (long long N = 1; N <= 24; ++N) {
        CAPTURE(N);
        SelfMirrorCount a = count_self_mirror(N), b = brute_force_self_mirror(N);
        CHECK(a.plain == b.plain);
        CHECK(a.dot == b.dot);
        CHECK(a.cross == b.cross);
    }
}

TEST_CASE("census agrees with building and classifying every group") {
    CHECK(count_order(2).total > 0);
    for (long long N = 1; N <= 16; ++N) {
        CAPTURE(N);
        CHECK(brute_force_census(N) == count_order(N));
    }
}

TEST_CASE("census json") {
    nlohmann::json j = census_to_json(count_order(100), true);
    CHECK(j["schema"] == "pg4/1");
    CHECK(j["total"] == 192);
    CHECK(j["families"]["1"] == 113);
    CHECK_FALSE(census_to_json(count_order(100), false).contains("families"));
}
