#pragma once

#include "logres/matrix.hpp"
#include "logres/wct.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logres {

// Degree-2 generator of affine type: an ordered pair of branches at one
// point lying on distinct components.
struct PsiAff {
    std::string point, b1, b2;
    bool operator<(const PsiAff& o) const {
        return std::tie(point, b1, b2) < std::tie(o.point, o.b1, o.b2);
    }
    bool operator==(const PsiAff& o) const {
        return point == o.point && b1 == o.b1 && b2 == o.b2;
    }
};

// Degree-2 generator with residues at infinity: psi_inf^{i,k}, k = 2..d_i.
struct PsiInf {
    std::string comp;
    int k = 2;
    std::string point; // infinity point id (formal "inf:<comp>:<k>" when augmented)
};

// Exact coordinate vector over v1 ∪ vinf (reduced mod the relation rows) plus
// structureless K and Kbar coordinates.
struct Degree2Class {
    std::vector<NFElem> v; // over v1 ∪ vinf, canonically reduced
    std::vector<NFElem> k_part, kbar_part;
    bool is_zero() const;
};

class RingPresentation {
  public:
    // Builds the presentation of Thm-ring data from a hard-valid weak type.
    // Projective inputs are augmented with a formal transversal line meeting
    // each component in d_i formal nodes.
    static RingPresentation build(const WeakCombinatorialType& w);

    const WeakCombinatorialType& wct() const { return wct_; }
    // non-line components, in input order; sigma_i corresponds to entry i
    const std::vector<Component>& sigma_components() const { return comps_; }
    const std::vector<PsiAff>& v1() const { return v1_; }
    const std::vector<PsiInf>& vinf() const { return vinf_; }
    size_t gen_count() const { return v1_.size() + vinf_.size(); }
    long long k_dimension() const { return g_; }

    const Matrix& relation_matrix() const { return rel_; } // RREF rows
    long long v2_dimension() const;

    // Res^[1] data: own-component residue (−1)^{r−i} and the C0 residue
    // (−1)^{r+1} d_i of sigma_i.
    Rational sigma_own_residue(size_t i) const;
    Rational sigma_line_residue(size_t i) const;

    // index of a generator column
    std::optional<size_t> column_of(const PsiAff& g) const;
    std::optional<size_t> column_of_inf(const std::string& comp, int k) const;

    // cup products (zero K parts; images lie in span(v1 ∪ vinf)). Products of
    // a degree-1 class with any degree-2 class, and all triple products,
    // vanish identically: the ring is trivial in degree >= 3.
    Degree2Class cup(size_t i, size_t j) const; // sigma_i ∧ sigma_j by component index
    Degree2Class cup(const std::vector<NFElem>& a, const std::vector<NFElem>& b) const;
    Degree2Class reduce(std::vector<NFElem> raw) const;

    // canonical coordinates of a reduced class on the free (non-pivot) columns
    std::vector<NFElem> quotient_coords(const Degree2Class& c) const;
    const std::vector<size_t>& free_columns() const { return free_cols_; }

    // infinity-residue vectors of the generators (rows: infinity points in a
    // fixed order; the map descends to V^2).
    const std::vector<std::string>& infinity_points() const { return inf_points_; }
    const Matrix& infinity_residues() const { return rinf_; }

    std::string generator_name(size_t col) const;

  private:
    WeakCombinatorialType wct_;
    std::vector<Component> comps_;
    std::vector<PsiAff> v1_;
    std::vector<PsiInf> vinf_;
    long long g_ = 0;
    Matrix rel_;
    std::vector<size_t> pivots_, free_cols_;
    std::vector<std::string> inf_points_;
    std::map<std::string, std::string> comp_first_inf_; // comp -> infinity point id
    std::map<std::string, std::vector<std::string>> comp_inf_points_;
    Matrix rinf_;
    FieldPtr q_ = NumberField::rationals();
};

// The affine restriction: degree-1 part = ker(sum a_i d_i), degree-2 part =
// classes with vanishing residues at infinity (K and Kbar untouched).
struct AffineRestriction {
    // rows: canonical basis omega_k of the affine degree-1 part, as
    // coefficient vectors over the sigma basis
    std::vector<std::vector<NFElem>> omega;
    // canonical basis of the affine degree-2 part inside V^2, in quotient
    // coordinates on the presentation's free columns
    std::vector<std::vector<NFElem>> psi_basis;
    long long affine_b1 = 0;
    long long affine_b2 = 0; // dim psi_basis + 2g
};

AffineRestriction affine_restriction(const RingPresentation& p);

// Expresses a reduced class in a given basis (quotient coordinates); nullopt
// if it does not lie in the span.
std::optional<std::vector<NFElem>> in_basis(const RingPresentation& p,
                                            const std::vector<std::vector<NFElem>>& basis,
                                            const Degree2Class& cls);

// Deterministic pretty presentation: generators, relations, cup table, Betti
// summary; the affine variant restricts to the omega/psi bases.
std::string export_presentation(const RingPresentation& p, bool affine);

// The cup-product pencil: one matrix per sigma_i, rows indexed by sigma_j and
// columns by the canonical V^2 coordinates (free columns), with
// sigma_i ^ sigma_j = sum_k M_i[j][k] * basis_k. Raw data export for
// downstream resonance analysis.
std::vector<std::vector<std::vector<NFElem>>> cup_pencil(const RingPresentation& p);

// Exact-sequence bookkeeping when resolution trees are available:
// h^0 of the normalized boundary divisor, r + e + 1, where e counts the
// exceptional components (blown-up vertices) over all points, including one
// per node at infinity when the line is formal.
long long h0_divisor_normalization(const RingPresentation& p,
                                   const std::map<std::string, MultiplicityTree>& trees);

} // namespace logres
