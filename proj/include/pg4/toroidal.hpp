#pragma once

#include "pg4/catalog.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pg4 {

// The eight origin-fixing symmetries of the standard torus.
enum class Dir { Id, Bar, Dash, Dot, Slash, Backslash, L, R };

const char* dir_symbol(Dir d);
// Tag from (reversing, jbit l, jbit r). Throws domain_error for
// non-cyclotomic components.
Dir direction_of(const Transform4& g);
// [1,1], *[i,i], *[k,k], [j,j], [i,k], [-k,i], *[-j,1], *[1,j]
Transform4 direction_rep(Dir d);

using Mat2 = std::array<std::array<int, 2>, 2>;
// Linear action on torus coordinates (φ1, φ2).
Mat2 direction_matrix(Dir d);

// Point of the torus in units of π, both coordinates in [0,2).
struct TorusPoint {
    Rational a1, a2;
    auto operator<=>(const TorusPoint&) const = default;
    bool operator==(const TorusPoint&) const = default;
    std::string str() const;
};

// g = direction_rep(dir) followed by the translation R_{a1,a2}.
struct TorusElement {
    Dir dir = Dir::Id;
    TorusPoint t;
};

std::vector<TorusElement> to_torus_rep(const PointGroup& g);
TorusElement torus_element(const Transform4& g);
Transform4 from_torus_element(const TorusElement& e);

// The group as directional tags with their translation cosets.
struct TorusData {
    std::set<Dir> dirs;
    std::set<TorusPoint> lattice;                      // translations (tag Id)
    std::map<Dir, std::set<TorusPoint>> cosets;        // all translation parts per tag
    std::size_t order() const;
};

TorusData torus_data(const PointGroup& g);
// h⁻¹ G h for h = direction_rep(e).
TorusData conjugate_direction(const TorusData& d, Dir e);
// h⁻¹ G h for h = R_β.
TorusData conjugate_translation(const TorusData& d, const TorusPoint& beta);
// Some β with conjugate_translation(a, β) = b, if one exists.
std::optional<TorusPoint> match_origin(const TorusData& a, const TorusData& b);

struct TorusLattice {
    long long m = 1, n = 1, s = 0;
    bool operator==(const TorusLattice&) const = default;
};

// Parameters (m, n, s) of a translation lattice, s in the canonical range.
// The lattice is identified with its image under the torus swap.
TorusLattice normalize_lattice(const std::set<TorusPoint>& translations);

// Family symbol of a directional group, or "" if it is "−" or "R"-only.
std::string family_of_dirs(const std::set<Dir>& dirs);

// A catalog spec together with h such that conjugate(G, h) equals build(spec).
struct ToroidalMatch {
    GroupSpec spec;
    Transform4 conjugator;
};

ToroidalMatch match_toroidal(const PointGroup& g);
GroupSpec classify_toroidal(const PointGroup& g);

// The in-range representative of an out-of-range spec, with the conjugator
// taking build(spec) onto build(result.spec). Conjugators are searched among
// [a,b] with a, b in 2O, followed by a torus symmetry.
ToroidalMatch canonical_duplicate(const GroupSpec& spec);
GroupSpec canonicalize_duplicates(const GroupSpec& spec);

}  // namespace pg4
