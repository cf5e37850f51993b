#pragma once

#include "logres/derive.hpp"
#include "logres/matrix.hpp"

#include <map>
#include <set>
#include <vector>

namespace logres {

// Lower-bound weights on the vertices of a point's (sub-germ) resolution.
struct PointBound {
    const Resolution* res = nullptr;
    std::vector<long long> b; // per resolution vertex
};

struct IdealSheafSpec {
    int twist_degree = 0;
    std::map<size_t, PointBound> bounds; // point index -> bound
};

// Virtual (cluster-transformed) bounds: B_Q = b_Q + sum of B over the
// divisors through Q.
std::vector<long long> cluster_bounds(const Resolution& res, const std::vector<long long>& b);

struct LinearSystem {
    int degree = 0;
    std::vector<HPoly::Key> monomials; // coefficient basis
    Matrix conditions;                 // rows: vanishing linear forms
};

// Linear conditions on the coefficients of the generic degree-d form: at each
// bounded vertex the pullback's terms of total degree < B vanish.
LinearSystem conditions_from_spec(const DerivedArrangement& D, const IdealSheafSpec& spec);

// Null-space basis of the condition system as homogeneous polynomials,
// canonical w.r.t. the echelon form.
std::vector<HPoly> global_sections(const DerivedArrangement& D, const IdealSheafSpec& spec);

// Colength sum of the bound-tree degrees: sum over points of sum C(b+1,2).
long long spec_colength(const IdealSheafSpec& spec);

// ---- the standard sheaves --------------------------------------------------

// Basic ideal sheaf of the subcurve (components 'comps'), twisted by d:
// T^n bounds at every point where the subgerm is singular.
IdealSheafSpec basic_ideal_spec(const DerivedArrangement& D, const std::set<std::string>& comps,
                                int twist);

// I^{delta1,delta2}_{C_ij}: the basic log tree at P for the branch pair,
// T^n elsewhere on Sing(C_ij), the line-node T^n (simple vanishing) at the
// points at infinity of C_i and C_j except the two designated first points.
IdealSheafSpec pair_ideal_spec(const DerivedArrangement& D, const std::string& ci,
                               const std::string& cj, size_t point, const std::string& local_b1,
                               const std::string& local_b2, int twist);

// I^{P^i_k}_{C_i}: no condition at P^i_1 and P^i_k, vanishing at the other
// points at infinity of C_i, T^n at Sing(C_i).
IdealSheafSpec infinity_ideal_spec(const DerivedArrangement& D, const std::string& ci, int k,
                                   int twist);

// K_i basis: sections of degree d_i - 3 with T^n bounds at Sing(C_i), returned
// as numerators (the forms are phi * omega / C_i).
std::vector<HPoly> k_basis(const DerivedArrangement& D, const std::string& ci);

// The sum of the K_i inside the space of 2-forms is direct: after clearing
// denominators the stacked family is linearly independent.
bool k_sum_independent(const DerivedArrangement& D);

} // namespace logres
