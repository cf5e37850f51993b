#pragma once

#include "logres/derive.hpp"
#include "logres/idealsheaf.hpp"

#include <map>
#include <string>
#include <vector>

namespace logres {

// Numerator representatives of the degree-2 generators: phi for each ordered
// cross pair at each affine singular point (stored once per unordered pair,
// oriented by input component order) and for each infinity generator.
struct RepresentativeSet {
    // key: point index, branch pair (global full-germ ids) with the first
    // branch on the earlier component
    std::map<std::tuple<size_t, std::string, std::string>, HPoly> pairs;
    std::map<std::pair<std::string, int>, HPoly> infinity; // (comp, k>=2)
};

struct IdentityCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct IdentityReport {
    bool all_ok = true;
    std::vector<IdentityCheck> checks;
    std::string text() const;
};

// Solves the affine system of Thm. prop-prod: representatives in the pair and
// infinity ideal sheaves satisfying every triangle identity and every
// Jacobian cup-product identity as exact polynomial identities. The
// echelon-least solution is returned; infeasibility throws (it would
// contradict the theorem).
RepresentativeSet solve_representatives(const DerivedArrangement& D);

// Verifies the identities for the given representatives; also records the
// residues at the first points at infinity.
IdentityReport verify_representatives(const DerivedArrangement& D, const RepresentativeSet& reps);

// Membership of each representative in its ideal sheaf (ideal conditions hold).
IdentityReport verify_memberships(const DerivedArrangement& D, const RepresentativeSet& reps);

// Dimension checks for every cross pair of components: the section-count
// lower bound for the twisted basic sheaf, the exact colength formula, and the
// independence of the conditions in a generous twist.
IdentityReport verify_dimensions(const DerivedArrangement& D);

// Randomized property check of the residue-support contract: a seeded random
// section of the pair ideal sheaf I^{d1,d2}(d_ij - 2) has residues supported in
// gamma(d1,d2) over the distinguished point, nowhere over the other singular
// points of C_ij, at the two designated first points at infinity with opposite
// values, and nowhere else on the line.
IdentityReport verify_residue_locus(const DerivedArrangement& D, const std::string& ci,
                                    const std::string& cj, size_t point, unsigned seed);

// For three concurrent lines l1, l2, l3: the Orlik-Solomon-style combination
// Jac(l1,l2,C0) l3 + Jac(l2,l3,C0) l1 + Jac(l3,l1,C0) l2 is the zero
// polynomial.
bool concurrent_lines_zero_form(const HPoly& l1, const HPoly& l2, const HPoly& l3, const HPoly& c0);

// Branch matching between the full-germ resolution at a point and a sub-germ
// resolution: full-germ branch id -> sub-germ branch id (components in
// `comps` only).
std::map<std::string, std::string> match_subgerm_branches(const DerivedArrangement& D, size_t point,
                                                          const std::set<std::string>& comps);

} // namespace logres
