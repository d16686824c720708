#pragma once

#include "pg4/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pg4 {

enum class Kind { Tubical, Toroidal, Polyhedral, Axial };

// A catalog name with parameters.
//
//   tubical:    family is a left id such as "+-[IxC]"; right = mirror bundle; n.
//   toroidal:   family is one of 1 . | \ / X + L *; sub is pm/pg/cm,
//               p2mm/p2mg/p2gm/p2gg/c2mm or p4mmU/p4gmU/p4mmS/p4gmS; params
//               m,n,s or a,b or n.
//   polyhedral: family is the name, e.g. "+-1/2[OxO].2bar".
//   axial:      family is pyr|prism|hyb, sub is the 3D group ("+-I", "TO"),
//               and for hyb sub is "H/G3".
struct GroupSpec {
    Kind kind = Kind::Toroidal;
    std::string family;
    std::string sub;
    bool right = false;
    long long m = 0, n = 0, s = 0, a = 0, b = 0;

    std::string str() const;
    static GroupSpec parse(const std::string& text);
    bool operator==(const GroupSpec& o) const;
    bool operator<(const GroupSpec& o) const { return str() < o.str(); }
};

// Orientation-preserving translation R_{α1,α2} with α given in units of π.
Transform4 torus_translation(const Rational& a1, const Rational& a2);

// Parameter constraints of the catalog (duplicate-free representatives).
bool in_range(const GroupSpec& spec);
// Weaker constraints under which the generators still define a group.
bool is_valid(const GroupSpec& spec);
// Closed-form order in transformations.
long long spec_order(const GroupSpec& spec);

std::vector<Transform4> generators(const GroupSpec& spec);
PointGroup build(const GroupSpec& spec);

// Chirality from the catalog entry alone (axial entries are built once).
bool spec_is_chiral(const GroupSpec& spec);

struct TubicalInfo {
    long long order_per_n = 0;
    long long min_n = 1;
    char polyhedral = 'I';  // quaternion group of the polyhedral factor
};
TubicalInfo tubical_info(const std::string& family);

GroupSpec right_variant(const GroupSpec& spec);
std::string cs_name_type1(long long m, long long n, long long s);

const std::vector<std::string>& tubical_families();
const std::vector<std::string>& polyhedral_names();
const std::vector<std::string>& axial_names();  // "pyr:+I", "hyb:+T/+-T", ...

// All in-range specs of the given order (order ≤ 0 means no filter is
// applied and max_order bounds the listing instead).
std::vector<GroupSpec> specs_of_order(long long order);
std::vector<GroupSpec> list_catalog(long long max_order);

// Toroidal specs of a given family/sub with the given order; natural
// constraints only when include_out_of_range is set.
std::vector<GroupSpec> toroidal_specs_of_order(const std::string& family, const std::string& sub, long long order,
                                               bool include_out_of_range);
// Sub-types available for a toroidal family symbol.
std::vector<std::string> toroidal_subtypes(const std::string& family);

}  // namespace pg4
