#pragma once

#include "logres/multtree.hpp"
#include "logres/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logres {

// Local germ at the origin: one reduced bivariate equation per participating
// component, tagged by an arbitrary caller label (component name).
struct LocalGerm {
    FieldPtr field;
    std::vector<std::pair<std::string, BiPoly>> factors;

    BiPoly product() const;
    int multiplicity() const; // order at origin of the product
};

// Embedded resolution of a plane curve germ by iterated point blow-ups.
//
// Conventions (matching the figure trees): a singular germ's base point is
// always blown up; afterwards a point is blown up while the total transform
// fails to be simple normal crossing there (strict transform singular, tangent
// to an exceptional divisor, or lying on a triple point). Vertices are the
// infinitely near points on exceptional divisors met by the strict transform;
// never-blown-up vertices are the leaves where branches cross their last
// exceptional divisor.
class Resolution {
  public:
    struct Vertex {
        int id = -1;
        int parent = -1;
        std::vector<int> children;
        bool blown_up = false;
        int weight = 0;                       // nu_Q(f), full strict transform
        std::optional<int> div_x, div_y;      // exceptional divisors {x=0}/{y=0} through the point
        std::optional<NFElem> direction;      // tangent direction over the parent ((1:w0); nullopt = (0:1))
        bool at_infinity_dir = false;
        long long k_disc = 0;                 // discrepancy of E_Q (valid once blown up; root chart k=1)
        long long mE_f = 0;                   // ord_{E_Q}(pullback of the full germ)
        std::vector<int> comp_ord;            // per-factor strict multiplicity at this point
        std::vector<long long> comp_mE;       // per-factor ord_{E_Q}
        BiPoly chart_x, chart_y;              // (x,y) = Phi(s,t), this point at (0,0)
        std::vector<BiPoly> strict;           // per-factor strict transform in this chart
    };

    const LocalGerm& germ() const { return germ_; }
    const std::vector<Vertex>& vertices() const { return verts_; }
    const Vertex& vertex(int i) const { return verts_.at(i); }
    int size() const { return static_cast<int>(verts_.size()); }

    // Proximity: q is proximate to p iff E_p passes through q.
    bool proximate(int q, int p) const;

    // Tree view with branch profiles; branch ids are "<factor-label>#<n>"
    // numbered in canonical leaf order (single-branch factors get plain label).
    const MultiplicityTree& tree() const { return tree_; }
    // map branch id -> factor label
    const std::map<std::string, std::string>& branch_component() const { return branch_comp_; }
    // map branch id -> leaf vertex (in resolution indexing)
    const std::map<std::string, int>& branch_leaf() const { return branch_leaf_; }
    // resolution vertex id -> tree vertex id
    const std::vector<int>& tree_index() const { return tree_index_; }

    // ord_{E_v}(pullback of h) for every vertex (h in the germ's chart coords).
    std::vector<long long> pullback_orders(const BiPoly& h) const;
    // As above but for a family h = sum_j c_j h_j with symbolic coefficients:
    // returns, per vertex, the per-(s,t)-monomial linear forms of the pullback
    // truncated below `degree_bound` total degree.
    struct SymbolicPullback {
        // pullback[v] maps (i,j) -> row vector over the h_j basis
        std::vector<std::map<std::pair<int, int>, std::vector<NFElem>>> low_terms;
    };
    SymbolicPullback pullback_family(const std::vector<BiPoly>& basis, int degree_bound) const;

    friend Resolution resolve_germ(const LocalGerm& germ);

  private:
    LocalGerm germ_;
    std::vector<Vertex> verts_;
    MultiplicityTree tree_;
    std::vector<int> tree_index_;
    std::map<std::string, std::string> branch_comp_;
    std::map<std::string, int> branch_leaf_;
};

// Resolves a reduced germ; throws FieldExtensionError when a tangent direction
// does not split over the coefficient field, std::runtime_error on non-reduced
// input.
Resolution resolve_germ(const LocalGerm& germ);

} // namespace logres
