#pragma once

#include "pg4/transform.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace pg4 {

constexpr std::size_t kDefaultCap = 2'000'000;

// A finite group of transformations. The order is the number of
// transformations; each is stored once in canonical sign.
class PointGroup {
public:
    PointGroup() = default;
    PointGroup(std::vector<Transform4> elements, std::vector<Transform4> generators);

    std::size_t order() const { return elems_.size(); }
    bool contains(const Transform4& g) const { return set_.count(g) != 0; }
    bool is_chiral() const;
    const std::vector<Transform4>& elements() const { return elems_; }
    const std::vector<Transform4>& generators() const { return gens_; }

private:
    std::vector<Transform4> elems_;
    std::unordered_set<Transform4> set_;
    std::vector<Transform4> gens_;
};

PointGroup generate(const std::vector<Transform4>& gens, std::size_t cap = kDefaultCap);

// Closure of a set of unit quaternions under multiplication.
std::vector<Quat> generate_quats(const std::vector<Quat>& gens, std::size_t cap = kDefaultCap);

// Element order of a unit quaternion from its angle.
long long quat_order(const Quat& q);

// Abstract type of a finite quaternion group: 2C_n (order 2n), 2D_2n
// (order 4n), 2T, 2O, 2I. The trivial group {1} is reported as "C" with
// n = 0 (order 1).
struct QuatGroupType {
    char kind = 'C';  // 'C', 'D', 'T', 'O', 'I'
    long long n = 0;
    std::size_t order = 0;
    bool polyhedral() const { return kind == 'T' || kind == 'O' || kind == 'I'; }
    std::string str() const;
    bool operator==(const QuatGroupType&) const = default;
};

QuatGroupType classify_quat_group(const std::vector<Quat>& group);

struct LeftRight {
    std::vector<Quat> left, right;
    QuatGroupType left_type, right_type;
};

// Left and right quaternion groups of the orientation-preserving part.
LeftRight left_right_groups(const PointGroup& g);

struct Fingerprint {
    std::map<ElementCode, std::size_t> counts;  // multiplicity per pair, i.e. ×2
    std::string str() const;
    bool operator==(const Fingerprint& o) const { return counts == o.counts; }
};

Fingerprint fingerprint(const PointGroup& g);

PointGroup conjugate(const PointGroup& g, const Transform4& h);
bool equals(const PointGroup& a, const PointGroup& b);

// G ∪ G·e for a reversing e that normalizes G with e² ∈ G.
PointGroup extend_achiral(const PointGroup& g, const Transform4& e);

// {[l,r] : Φ(l L0) = r R0} where Φ is given by coset representative pairs.
struct GoursatData {
    std::vector<Quat> L, R, L0, R0;
    std::vector<std::pair<Quat, Quat>> pairing;
};

PointGroup goursat_group(const GoursatData& data);

}  // namespace pg4
