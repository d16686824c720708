#include "pg4/classify.hpp"

#include "pg4/toroidal.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pg4 {

namespace {

// Built polyhedral and axial entries with their fingerprints.
struct FiniteEntry {
    GroupSpec spec;
    PointGroup group;
    Fingerprint fp;
};

const std::vector<FiniteEntry>& finite_entries_of_order(std::size_t order) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<FiniteEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    std::vector<FiniteEntry> out;
    for (const auto& sp : specs_of_order(static_cast<long long>(order))) {
        if (sp.kind != Kind::Polyhedral && sp.kind != Kind::Axial) continue;
        PointGroup g = build(sp);
        Fingerprint fp = fingerprint(g);
        out.push_back({sp, std::move(g), std::move(fp)});
    }
    return cache.emplace(order, std::move(out)).first->second;
}

GroupSpec classify_finite(const PointGroup& g) {
    const auto& entries = finite_entries_of_order(g.order());
    Fingerprint fp = fingerprint(g);
    std::vector<const FiniteEntry*> same_fp;
    for (const auto& e : entries) {
        if (equals(e.group, g)) return e.spec;
        if (e.fp == fp) same_fp.push_back(&e);
    }
    if (same_fp.size() == 1) return same_fp.front()->spec;
    if (same_fp.empty()) throw std::domain_error("no catalog match (order " + std::to_string(g.order()) + ")");
    std::string names;
    for (const auto* e : same_fp) names += " " + e->spec.str();
    throw std::domain_error("no catalog match: fingerprint shared by" + names);
}

GroupSpec classify_tubical(const PointGroup& g, bool right, char poly) {
    const long long order = static_cast<long long>(g.order());
    Fingerprint fp;
    bool have_fp = false;
    std::vector<GroupSpec> same_fp;
    for (const auto& family : tubical_families()) {
        TubicalInfo info = tubical_info(family);
        if (info.polyhedral != poly || order % info.order_per_n != 0) continue;
        GroupSpec sp;
        sp.kind = Kind::Tubical;
        sp.family = family;
        sp.n = order / info.order_per_n;
        sp.right = right;
        if (!in_range(sp)) continue;
        PointGroup cand = build(sp);
        if (equals(cand, g)) return sp;
        if (!have_fp) {
            fp = fingerprint(g);
            have_fp = true;
        }
        if (fingerprint(cand) == fp) same_fp.push_back(sp);
    }
    if (same_fp.size() == 1) return same_fp.front();
    throw std::domain_error("no catalog match (tubical, order " + std::to_string(order) + ")");
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::Toroidal: return "toroidal";
        case Category::TubicalLeft: return "tubical-left";
        case Category::TubicalRight: return "tubical-right";
        case Category::PolyhedralOrAxial: return "polyhedral-or-axial";
    }
    return "?";
}

Category category(const PointGroup& g) {
    LeftRight lr = left_right_groups(g);
    bool lp = lr.left_type.polyhedral(), rp = lr.right_type.polyhedral();
    if (lp && rp) return Category::PolyhedralOrAxial;
    if (lp) return Category::TubicalLeft;
    if (rp) return Category::TubicalRight;
    return Category::Toroidal;
}

GroupSpec classify(const PointGroup& g) {
    LeftRight lr = left_right_groups(g);
    bool lp = lr.left_type.polyhedral(), rp = lr.right_type.polyhedral();
    if (lp && rp) return classify_finite(g);
    if (lp) return classify_tubical(g, false, lr.left_type.kind);
    if (rp) return classify_tubical(g, true, lr.right_type.kind);
    return classify_toroidal(g);
}

std::vector<FingerprintCollision> fingerprint_collisions(long long max_order) {
    std::map<std::pair<long long, std::string>, std::vector<GroupSpec>> classes;
    for (const auto& sp : list_catalog(max_order)) classes[{spec_order(sp), fingerprint(build(sp)).str()}].push_back(sp);
    std::vector<FingerprintCollision> out;
    for (auto& [key, specs] : classes)
        if (specs.size() > 1) out.push_back({key.first, key.second, std::move(specs)});
    return out;
}

}  // namespace pg4
