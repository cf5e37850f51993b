#pragma once

#include "logres/wct.hpp"

#include <map>
#include <optional>
#include <string>

namespace logres {

struct EquivalenceWitness {
    std::map<std::string, std::string> component_map;
    std::map<std::string, std::string> point_map;
    std::map<std::string, std::string> branch_map;

    EquivalenceWitness inverse() const;
    static EquivalenceWitness compose(const EquivalenceWitness& first,
                                      const EquivalenceWitness& then);
};

// Exhaustive backtracking search for a Def-wct equivalence; components are
// matched by (degree, genus, branch-count) signatures and points by their
// mu-multiset signatures before branch bijections are tried.
std::optional<EquivalenceWitness> weak_equivalence(const WeakCombinatorialType& a,
                                                   const WeakCombinatorialType& b);

// As weak_equivalence, but also requires a weighted-tree isomorphism at every
// point compatible with the branch bijection.
std::optional<EquivalenceWitness> classical_equivalence(const ClassicalCombinatorialType& a,
                                                        const ClassicalCombinatorialType& b);

// Checks that a witness transports all weak data (used by tests).
bool witness_is_valid(const WeakCombinatorialType& a, const WeakCombinatorialType& b,
                      const EquivalenceWitness& w);

// Derives the weak type of a classical one: mu via the Noether pairing on the
// point trees.
WeakCombinatorialType weaken(const ClassicalCombinatorialType& k);

} // namespace logres
