#pragma once

#include "logres/multtree.hpp"
#include "logres/numberfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logres {

struct Component {
    std::string id;
    int degree = 1;
    long long genus = 0;
};

struct SingularPoint {
    std::string id;
    std::vector<std::string> branches; // global branch ids
};

inline std::pair<std::string, std::string> branch_pair_key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// The septuplet (r, S, Delta, phi, mu, dbar, gbar). Branch ids are globally
// unique; mu lives on unordered pairs of branches at the same point belonging
// to distinct components.
struct WeakCombinatorialType {
    std::vector<Component> components;
    std::vector<SingularPoint> points;
    std::map<std::string, std::string> branch_component;
    std::map<std::pair<std::string, std::string>, long long> mu;
    bool has_transversal_line = false;
    std::string line_component; // set iff has_transversal_line
    // optional designation of the first point at infinity per component
    std::map<std::string, std::string> first_infinity;

    const Component* find_component(const std::string& id) const;
    const SingularPoint* find_point(const std::string& id) const;
    const SingularPoint* point_of_branch(const std::string& branch) const;
    long long mu_of(const std::string& b1, const std::string& b2) const;
    // components without the transversal line
    std::vector<Component> curve_components() const;
};

// Classical combinatorial type: weak data plus per-point multiplicity trees
// whose branch profiles are labeled by the point's branch ids.
struct ClassicalCombinatorialType {
    WeakCombinatorialType weak;
    std::map<std::string, MultiplicityTree> point_trees;
};

struct ValidationIssue {
    bool hard = true; // soft issues only demote in partial-data mode
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    bool hard_valid() const {
        for (const auto& i : issues)
            if (i.hard) return false;
        return true;
    }
    std::string text() const;
};

// Checks the Def-wct invariants: totality of the branch map, mu's domain
// (cross-component pairs at one point), Bezout per component pair, the genus
// bound, and transversal-line shape when declared. In partial-data mode the
// Bezout counts become soft warnings.
ValidationReport validate(const WeakCombinatorialType& w, bool partial_data = false);

ValidationReport validate(const ClassicalCombinatorialType& k, bool partial_data = false);

} // namespace logres
