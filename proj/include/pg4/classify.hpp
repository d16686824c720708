#pragma once

#include "pg4/catalog.hpp"

#include <string>
#include <vector>

namespace pg4 {

enum class Category { Toroidal, TubicalLeft, TubicalRight, PolyhedralOrAxial };

const char* category_name(Category c);

// From the types of the left and right quaternion groups.
Category category(const PointGroup& g);

// Catalog name of a group given in standard position. Throws
// std::domain_error("no catalog match ...") otherwise.
GroupSpec classify(const PointGroup& g);

// Catalog groups of equal order sharing a fingerprint.
struct FingerprintCollision {
    long long order = 0;
    std::string fingerprint;
    std::vector<GroupSpec> specs;
};

std::vector<FingerprintCollision> fingerprint_collisions(long long max_order);

}  // namespace pg4
