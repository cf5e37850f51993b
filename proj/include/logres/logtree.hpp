#pragma once

#include "logres/matrix.hpp"
#include "logres/resolve.hpp"

#include <set>
#include <vector>

namespace logres {

struct LogTreeSearchResult {
    std::vector<long long> bounds; // per resolution vertex
    long long degree = 0;          // sum C(b+1,2)
    int candidates_tried = 0;
};

// Verified bounded search for the basic logarithmic tree of the germ relative
// to two branches: among proximity-consistent weight assignments between the
// zero tree and the multiplicity tree, in increasing degree order, return the
// first whose ideal is logarithmic (checked on a null-space basis of the local
// linear system via pullback orders) and whose essential sections have residue
// support exactly on the subtree joining the two branches.
LogTreeSearchResult find_logarithmic_tree(const Resolution& res, const std::string& branch1,
                                          const std::string& branch2);

// Residue support of the local form h dx^dy / f over the germ: blown-up
// vertices with a nonzero residue 1-form and leaves with a nonzero crossing
// residue. Throws when the form is not logarithmic.
std::set<int> residue_support(const Resolution& res, const BiPoly& h);

// Membership conditions of {h : T(f)|_h >= bounds} on a local polynomial space
// of total degree < trunc, as rows over the monomial basis x^i y^j (graded
// lexicographic order as produced by local_monomials).
std::vector<std::pair<int, int>> local_monomials(int trunc);
Matrix local_conditions(const Resolution& res, const std::vector<long long>& bounds, int trunc);

} // namespace logres
