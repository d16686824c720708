#pragma once

#include "pg4/catalog.hpp"

#include <map>
#include <string>

namespace pg4 {

// Number of groups of one order. Enantiomorphic pairs count as two groups.
// Family keys are the toroidal symbols 1 . \ / X | + L * and the kinds
// "tubical", "polyhedral", "axial".
struct OrderCensus {
    long long order = 0;
    std::map<std::string, long long> families;
    long long chiral_toroidal = 0, achiral_toroidal = 0;
    long long tubical = 0, polyhedral = 0, axial = 0;
    long long chiral = 0, achiral = 0, total = 0;
    bool operator==(const OrderCensus&) const = default;
};

OrderCensus count_order(long long N);

// Chiral toroidal groups of order N that equal their mirror image.
struct SelfMirrorCount {
    long long plain = 0, dot = 0, cross = 0;  // families 1, ., X
    long long total() const { return plain + dot + cross; }
};

SelfMirrorCount count_self_mirror(long long N);

// Same census by building every catalog group of order N, including
// out-of-range toroidal parameters, and classifying each.
OrderCensus brute_force_census(long long N);

// Self-mirror count by conjugating with *[1,1] and classifying.
SelfMirrorCount brute_force_self_mirror(long long N);

nlohmann::json census_to_json(const OrderCensus& c, bool breakdown);

}  // namespace pg4
