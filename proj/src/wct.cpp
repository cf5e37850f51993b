#include "logres/wct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace logres {

const Component* WeakCombinatorialType::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const SingularPoint* WeakCombinatorialType::find_point(const std::string& id) const {
    for (const auto& p : points)
        if (p.id == id) return &p;
    return nullptr;
}

const SingularPoint* WeakCombinatorialType::point_of_branch(const std::string& branch) const {
    for (const auto& p : points)
        for (const auto& b : p.branches)
            if (b == branch) return &p;
    return nullptr;
}

long long WeakCombinatorialType::mu_of(const std::string& b1, const std::string& b2) const {
    auto it = mu.find(branch_pair_key(b1, b2));
    if (it == mu.end()) throw std::runtime_error("mu undefined on (" + b1 + "," + b2 + ")");
    return it->second;
}

std::vector<Component> WeakCombinatorialType::curve_components() const {
    std::vector<Component> out;
    for (const auto& c : components)
        if (!has_transversal_line || c.id != line_component) out.push_back(c);
    return out;
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& i : issues) os << (i.hard ? "error: " : "warning: ") << i.message << "\n";
    return os.str();
}

ValidationReport validate(const WeakCombinatorialType& w, bool partial_data) {
    ValidationReport rep;
    auto err = [&](const std::string& m) { rep.issues.push_back({true, m}); };
    auto soft = [&](const std::string& m) { rep.issues.push_back({!partial_data, m}); };

    std::set<std::string> comp_ids;
    for (const auto& c : w.components) {
        if (!comp_ids.insert(c.id).second) err("duplicate component id " + c.id);
        if (c.degree < 1) err("component " + c.id + " has non-positive degree");
        if (c.genus < 0) err("component " + c.id + " has negative genus");
        long long gmax = static_cast<long long>(c.degree - 1) * (c.degree - 2) / 2;
        if (c.genus > gmax)
            err("component " + c.id + " violates the genus bound: g = " + std::to_string(c.genus) +
                " > (d-1)(d-2)/2 = " + std::to_string(gmax));
    }
    if (w.has_transversal_line) {
        const Component* line = w.find_component(w.line_component);
        if (!line) err("declared transversal line " + w.line_component + " is not a component");
        else if (line->degree != 1) err("transversal line " + w.line_component + " has degree != 1");
    }

    // branches appear at exactly one point; the branch map is total
    std::map<std::string, int> seen;
    std::set<std::string> point_ids;
    for (const auto& p : w.points) {
        if (!point_ids.insert(p.id).second) err("duplicate point id " + p.id);
        if (p.branches.empty()) err("point " + p.id + " has no branches");
        for (const auto& b : p.branches) seen[b]++;
    }
    for (const auto& [b, n] : seen)
        if (n > 1) err("branch " + b + " appears at " + std::to_string(n) + " points");
    for (const auto& [b, n] : seen) {
        auto it = w.branch_component.find(b);
        if (it == w.branch_component.end()) err("branch " + b + " has no component assignment");
        else if (!w.find_component(it->second))
            err("branch " + b + " maps to unknown component " + it->second);
    }
    for (const auto& [b, c] : w.branch_component)
        if (!seen.count(b)) err("branch map mentions unknown branch " + b);

    // mu domain: unordered cross-component pairs at one point, all present
    for (const auto& p : w.points) {
        for (size_t i = 0; i < p.branches.size(); ++i)
            for (size_t j = i + 1; j < p.branches.size(); ++j) {
                const auto &b1 = p.branches[i], &b2 = p.branches[j];
                auto c1 = w.branch_component.find(b1);
                auto c2 = w.branch_component.find(b2);
                if (c1 == w.branch_component.end() || c2 == w.branch_component.end()) continue;
                bool cross = c1->second != c2->second;
                auto it = w.mu.find(branch_pair_key(b1, b2));
                if (cross && it == w.mu.end())
                    err("mu missing on cross-component pair (" + b1 + "," + b2 + ") at " + p.id);
                if (!cross && it != w.mu.end())
                    err("mu defined on same-component pair (" + b1 + "," + b2 + ") at " + p.id);
                if (cross && it != w.mu.end() && it->second < 1)
                    err("mu(" + b1 + "," + b2 + ") must be positive");
            }
    }
    for (const auto& [key, m] : w.mu) {
        const SingularPoint* p1 = w.point_of_branch(key.first);
        const SingularPoint* p2 = w.point_of_branch(key.second);
        if (!p1 || !p2 || p1 != p2)
            err("mu defined on branches not sharing a point: (" + key.first + "," + key.second + ")");
    }

    // Bezout per pair of distinct components
    for (size_t i = 0; i < w.components.size(); ++i)
        for (size_t j = i + 1; j < w.components.size(); ++j) {
            const auto &ci = w.components[i], &cj = w.components[j];
            long long total = 0;
            for (const auto& p : w.points)
                for (const auto& b1 : p.branches)
                    for (const auto& b2 : p.branches) {
                        if (b1 >= b2) continue;
                        auto a1 = w.branch_component.find(b1);
                        auto a2 = w.branch_component.find(b2);
                        if (a1 == w.branch_component.end() || a2 == w.branch_component.end()) continue;
                        bool match = (a1->second == ci.id && a2->second == cj.id) ||
                                     (a1->second == cj.id && a2->second == ci.id);
                        if (!match) continue;
                        auto it = w.mu.find(branch_pair_key(b1, b2));
                        if (it != w.mu.end()) total += it->second;
                    }
            long long expect = static_cast<long long>(ci.degree) * cj.degree;
            if (total != expect)
                soft("pair (" + ci.id + "," + cj.id + "): " + std::to_string(total) +
                     " != " + std::to_string(expect) + " (Bezout)");
        }

    // transversal-line shape: every point touching the line is a simple node
    if (w.has_transversal_line) {
        for (const auto& p : w.points) {
            bool on_line = false;
            for (const auto& b : p.branches) {
                auto it = w.branch_component.find(b);
                if (it != w.branch_component.end() && it->second == w.line_component) on_line = true;
            }
            if (!on_line) continue;
            if (p.branches.size() != 2)
                err("point " + p.id + " lies on the transversal line but is not a simple crossing");
            else {
                auto it = w.mu.find(branch_pair_key(p.branches[0], p.branches[1]));
                if (it != w.mu.end() && it->second != 1)
                    err("point " + p.id + " is a tangency of the transversal line");
            }
        }
    }
    return rep;
}

ValidationReport validate(const ClassicalCombinatorialType& k, bool partial_data) {
    ValidationReport rep = validate(k.weak, partial_data);
    for (const auto& p : k.weak.points) {
        auto it = k.point_trees.find(p.id);
        if (it == k.point_trees.end()) {
            rep.issues.push_back({true, "point " + p.id + " has no multiplicity tree"});
            continue;
        }
        auto ids = it->second.branch_ids();
        std::set<std::string> tree_branches(ids.begin(), ids.end());
        std::set<std::string> point_branches(p.branches.begin(), p.branches.end());
        if (tree_branches != point_branches)
            rep.issues.push_back({true, "tree at " + p.id + " does not label the point's branches"});
    }
    return rep;
}

} // namespace logres
