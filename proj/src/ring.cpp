#include "logres/ring.hpp"

#include "logres/betti.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

bool Degree2Class::is_zero() const {
    auto allz = [](const std::vector<NFElem>& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    };
    return allz(v) && allz(k_part) && allz(kbar_part);
}

RingPresentation RingPresentation::build(const WeakCombinatorialType& input) {
    auto rep = validate(input);
    if (!rep.hard_valid())
        throw std::runtime_error("build_presentation: input fails validation\n" + rep.text());
    if (!rep.valid())
        throw std::runtime_error("build_presentation refuses soft-validated (partial) input:\n" +
                                 rep.text());
    if (input.components.empty()) throw std::runtime_error("build_presentation: no components");

    RingPresentation P;
    P.wct_ = input;
    WeakCombinatorialType& w = P.wct_;

    // augment projective inputs with a formal transversal line
    if (!w.has_transversal_line) {
        Component line{"@line", 1, 0};
        std::vector<Component> cc = w.components;
        w.components.push_back(line);
        w.has_transversal_line = true;
        w.line_component = line.id;
        for (const auto& c : cc) {
            for (int k = 1; k <= c.degree; ++k) {
                SingularPoint sp;
                sp.id = "inf:" + c.id + ":" + std::to_string(k);
                std::string bl = sp.id + ":" + line.id;
                std::string bc = sp.id + ":" + c.id;
                sp.branches = {bc, bl};
                std::sort(sp.branches.begin(), sp.branches.end());
                w.branch_component[bl] = line.id;
                w.branch_component[bc] = c.id;
                w.mu[branch_pair_key(bl, bc)] = 1;
                if (k == 1) w.first_infinity[c.id] = sp.id;
                w.points.push_back(std::move(sp));
            }
        }
    }

    P.comps_ = w.curve_components();
    for (const auto& c : P.comps_) P.g_ += c.genus;

    // infinity bookkeeping: points containing a line branch, grouped per comp
    for (const auto& c : P.comps_) {
        std::vector<std::string> pts;
        for (const auto& p : w.points) {
            bool line_here = false, comp_here = false;
            for (const auto& b : p.branches) {
                const auto& cb = w.branch_component.at(b);
                if (cb == w.line_component) line_here = true;
                if (cb == c.id) comp_here = true;
            }
            if (line_here && comp_here) pts.push_back(p.id);
        }
        std::sort(pts.begin(), pts.end());
        if (static_cast<int>(pts.size()) != c.degree)
            throw std::runtime_error("component " + c.id + " does not meet the line in deg points");
        auto fi = w.first_infinity.find(c.id);
        std::string first = fi != w.first_infinity.end() ? fi->second : pts.front();
        auto it = std::find(pts.begin(), pts.end(), first);
        if (it == pts.end())
            throw std::runtime_error("designated first infinity point of " + c.id + " not on the line");
        std::iter_swap(pts.begin(), it);
        P.comp_first_inf_[c.id] = pts.front();
        P.comp_inf_points_[c.id] = pts;
        for (int k = 2; k <= c.degree; ++k) P.vinf_.push_back({c.id, k, pts[k - 1]});
    }

    // v1 generators: ordered cross-component pairs at non-line points
    for (const auto& p : w.points) {
        bool on_line = false;
        for (const auto& b : p.branches)
            if (w.branch_component.at(b) == w.line_component) on_line = true;
        if (on_line) continue;
        for (const auto& b1 : p.branches)
            for (const auto& b2 : p.branches) {
                if (b1 == b2) continue;
                if (w.branch_component.at(b1) == w.branch_component.at(b2)) continue;
                P.v1_.push_back({p.id, b1, b2});
            }
    }
    std::sort(P.v1_.begin(), P.v1_.end());

    // relations: antisymmetry plus one triangle per unordered cross triple
    const FieldPtr& Q = P.q_;
    size_t n = P.gen_count();
    Matrix rel(Q, 0, n);
    auto col_aff = [&](const PsiAff& g) -> size_t {
        auto it = std::lower_bound(P.v1_.begin(), P.v1_.end(), g);
        return static_cast<size_t>(it - P.v1_.begin());
    };
    for (size_t i = 0; i < P.v1_.size(); ++i) {
        const auto& g = P.v1_[i];
        if (g.b1 < g.b2) {
            std::vector<NFElem> row(n, NFElem::zero(Q));
            row[i] = NFElem::one(Q);
            row[col_aff({g.point, g.b2, g.b1})] += NFElem::one(Q);
            rel.append_row(row);
        }
    }
    for (const auto& p : w.points) {
        for (size_t a = 0; a < p.branches.size(); ++a)
            for (size_t b = a + 1; b < p.branches.size(); ++b)
                for (size_t c = b + 1; c < p.branches.size(); ++c) {
                    const auto &d1 = p.branches[a], &d2 = p.branches[b], &d3 = p.branches[c];
                    const auto &c1 = w.branch_component.at(d1), &c2 = w.branch_component.at(d2),
                               &c3 = w.branch_component.at(d3);
                    if (c1 == c2 || c1 == c3 || c2 == c3) continue;
                    if (c1 == w.line_component || c2 == w.line_component || c3 == w.line_component)
                        continue;
                    std::vector<NFElem> row(n, NFElem::zero(Q));
                    row[col_aff({p.id, d1, d2})] += NFElem::one(Q);
                    row[col_aff({p.id, d2, d3})] += NFElem::one(Q);
                    row[col_aff({p.id, d3, d1})] += NFElem::one(Q);
                    rel.append_row(row);
                }
    }
    P.pivots_ = rel.rref();
    // drop zero rows for a clean stored matrix
    Matrix clean(Q, P.pivots_.size(), n);
    for (size_t r = 0; r < P.pivots_.size(); ++r)
        for (size_t c = 0; c < n; ++c) clean.at(r, c) = rel.at(r, c);
    P.rel_ = std::move(clean);
    {
        std::vector<bool> isp(n, false);
        for (size_t c : P.pivots_) isp[c] = true;
        for (size_t c = 0; c < n; ++c)
            if (!isp[c]) P.free_cols_.push_back(c);
    }

    // infinity residue map
    for (const auto& c : P.comps_)
        for (const auto& pid : P.comp_inf_points_.at(c.id)) P.inf_points_.push_back(pid);
    std::sort(P.inf_points_.begin(), P.inf_points_.end());
    P.inf_points_.erase(std::unique(P.inf_points_.begin(), P.inf_points_.end()), P.inf_points_.end());
    Matrix rinf(Q, P.inf_points_.size(), n);
    auto inf_row = [&](const std::string& pid) -> size_t {
        return static_cast<size_t>(std::lower_bound(P.inf_points_.begin(), P.inf_points_.end(), pid) -
                                   P.inf_points_.begin());
    };
    for (size_t i = 0; i < P.v1_.size(); ++i) {
        const auto& g = P.v1_[i];
        const auto& ci = w.branch_component.at(g.b1);
        const auto& cj = w.branch_component.at(g.b2);
        rinf.at(inf_row(P.comp_first_inf_.at(ci)), i) += NFElem::one(Q);
        rinf.at(inf_row(P.comp_first_inf_.at(cj)), i) -= NFElem::one(Q);
    }
    for (size_t k = 0; k < P.vinf_.size(); ++k) {
        const auto& g = P.vinf_[k];
        size_t col = P.v1_.size() + k;
        rinf.at(inf_row(P.comp_first_inf_.at(g.comp)), col) += NFElem::one(Q);
        rinf.at(inf_row(g.point), col) -= NFElem::one(Q);
    }
    P.rinf_ = std::move(rinf);
    return P;
}

long long RingPresentation::v2_dimension() const {
    return static_cast<long long>(gen_count()) - static_cast<long long>(pivots_.size());
}

Rational RingPresentation::sigma_own_residue(size_t i) const {
    size_t r = comps_.size();
    return ((r - (i + 1)) % 2 == 0) ? Rational(1) : Rational(-1);
}

Rational RingPresentation::sigma_line_residue(size_t i) const {
    size_t r = comps_.size();
    Rational sign = ((r + 1) % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * comps_[i].degree;
}

std::optional<size_t> RingPresentation::column_of(const PsiAff& g) const {
    auto it = std::lower_bound(v1_.begin(), v1_.end(), g);
    if (it == v1_.end() || !(*it == g)) return std::nullopt;
    return static_cast<size_t>(it - v1_.begin());
}

std::optional<size_t> RingPresentation::column_of_inf(const std::string& comp, int k) const {
    for (size_t i = 0; i < vinf_.size(); ++i)
        if (vinf_[i].comp == comp && vinf_[i].k == k) return v1_.size() + i;
    return std::nullopt;
}

Degree2Class RingPresentation::reduce(std::vector<NFElem> raw) const {
    if (raw.size() != gen_count()) throw std::runtime_error("reduce: wrong vector size");
    for (size_t r = 0; r < pivots_.size(); ++r) {
        const NFElem& c = raw[pivots_[r]];
        if (c.is_zero()) continue;
        NFElem f = c;
        for (size_t j = 0; j < gen_count(); ++j) raw[j] -= f * rel_.at(r, j);
    }
    Degree2Class out;
    out.v = std::move(raw);
    out.k_part.assign(g_, NFElem::zero(q_));
    out.kbar_part.assign(g_, NFElem::zero(q_));
    return out;
}

Degree2Class RingPresentation::cup(size_t i, size_t j) const {
    std::vector<NFElem> a(comps_.size(), NFElem::zero(q_)), b(comps_.size(), NFElem::zero(q_));
    a[i] = NFElem::one(q_);
    b[j] = NFElem::one(q_);
    return cup(a, b);
}

Degree2Class RingPresentation::cup(const std::vector<NFElem>& a, const std::vector<NFElem>& b) const {
    const WeakCombinatorialType& w = wct_;
    std::vector<NFElem> raw(gen_count(), NFElem::zero(q_));
    std::map<std::string, size_t> comp_index;
    for (size_t i = 0; i < comps_.size(); ++i) comp_index[comps_[i].id] = i;
    // bilinear expansion over ordered pairs (i, j), i != j
    for (size_t gi = 0; gi < v1_.size(); ++gi) {
        const auto& g = v1_[gi];
        size_t i = comp_index.at(w.branch_component.at(g.b1));
        size_t j = comp_index.at(w.branch_component.at(g.b2));
        // the cup expansion contributes mu * psi^{(d1,d2)} to sigma_i ^ sigma_j; the
        // ordered generator set covers both orientations, so weight by a_i b_j.
        NFElem coef = a[i] * b[j];
        if (coef.is_zero()) continue;
        raw[gi] += coef * NFElem(q_, Rational(w.mu_of(g.b1, g.b2)));
    }
    for (size_t k = 0; k < vinf_.size(); ++k) {
        const auto& g = vinf_[k];
        size_t i = comp_index.at(g.comp);
        // sigma_i ^ sigma_j has + d_j sum_k psi_inf^{i,k} - d_i sum_k psi_inf^{j,k}
        NFElem coef = NFElem::zero(q_);
        for (size_t j = 0; j < comps_.size(); ++j) {
            if (j == i) continue;
            NFElem dj(q_, Rational(comps_[j].degree));
            coef += (a[i] * b[j] - a[j] * b[i]) * dj;
        }
        raw[v1_.size() + k] += coef;
    }
    return reduce(std::move(raw));
}

std::vector<NFElem> RingPresentation::quotient_coords(const Degree2Class& c) const {
    std::vector<NFElem> out;
    out.reserve(free_cols_.size());
    for (size_t col : free_cols_) out.push_back(c.v[col]);
    return out;
}

std::string RingPresentation::generator_name(size_t col) const {
    if (col < v1_.size()) {
        const auto& g = v1_[col];
        return "psi[" + g.point + ";" + g.b1 + "," + g.b2 + "]";
    }
    const auto& g = vinf_[col - v1_.size()];
    return "psi_inf[" + g.comp + "," + std::to_string(g.k) + "]";
}

AffineRestriction affine_restriction(const RingPresentation& p) {
    AffineRestriction out;
    const FieldPtr Q = NumberField::rationals();
    const auto& comps = p.sigma_components();
    // degree 1: kernel of sum a_i d_i with the reference basis
    // omega_i = (d_i sigma_r - d_r sigma_i)/gcd(d_i, d_r), i = 1..r-1.
    size_t r = comps.size();
    for (size_t i = 0; i + 1 < r; ++i) {
        Integer g = boost::multiprecision::gcd(Integer(comps[i].degree), Integer(comps[r - 1].degree));
        std::vector<NFElem> v(r, NFElem::zero(Q));
        v[r - 1] = NFElem(Q, Rational(Integer(comps[i].degree), g));
        v[i] = NFElem(Q, -Rational(Integer(comps[r - 1].degree), g));
        out.omega.push_back(std::move(v));
    }
    out.affine_b1 = static_cast<long long>(out.omega.size());

    // degree 2: kernel of the infinity-residue map on the quotient
    const auto& free_cols = p.free_columns();
    Matrix rbar(Q, p.infinity_points().size(), free_cols.size());
    for (size_t r = 0; r < p.infinity_points().size(); ++r)
        for (size_t c = 0; c < free_cols.size(); ++c)
            rbar.at(r, c) = p.infinity_residues().at(r, free_cols[c]);
    // the map descends: relation rows have zero residue, and e_c is already a
    // canonical representative for a free column c.
    for (auto& v : rbar.null_space()) out.psi_basis.push_back(std::move(v));
    out.affine_b2 = static_cast<long long>(out.psi_basis.size()) + 2 * p.k_dimension();
    return out;
}

std::optional<std::vector<NFElem>> in_basis(const RingPresentation& p,
                                            const std::vector<std::vector<NFElem>>& basis,
                                            const Degree2Class& cls) {
    const FieldPtr Q = NumberField::rationals();
    auto coords = p.quotient_coords(cls);
    Matrix m(Q, coords.size(), basis.size());
    for (size_t c = 0; c < basis.size(); ++c)
        for (size_t r = 0; r < coords.size(); ++r) m.at(r, c) = basis[c][r];
    return m.solve(coords);
}

std::vector<std::vector<std::vector<NFElem>>> cup_pencil(const RingPresentation& p) {
    std::vector<std::vector<std::vector<NFElem>>> pencil;
    size_t r = p.sigma_components().size();
    for (size_t i = 0; i < r; ++i) {
        std::vector<std::vector<NFElem>> mi;
        for (size_t j = 0; j < r; ++j) mi.push_back(p.quotient_coords(p.cup(i, j)));
        pencil.push_back(std::move(mi));
    }
    return pencil;
}

long long h0_divisor_normalization(const RingPresentation& p,
                                   const std::map<std::string, MultiplicityTree>& trees) {
    const auto& w = p.wct();
    long long r = static_cast<long long>(p.sigma_components().size());
    long long e = 0;
    for (const auto& pt : w.points) {
        auto it = trees.find(pt.id);
        if (it != trees.end()) {
            // blown-up vertices = internal vertices of the multiplicity tree
            for (const auto& v : it->second.vertices())
                if (!v.children.empty()) ++e;
        } else if (pt.id.rfind("inf:", 0) == 0) {
            ++e; // formal node at infinity: one blow-up
        } else {
            throw std::runtime_error("h0_divisor_normalization: missing tree for " + pt.id);
        }
    }
    return r + e + 1;
}

std::string export_presentation(const RingPresentation& p, bool affine) {
    std::ostringstream os;
    const auto& comps = p.sigma_components();
    os << "components:";
    for (const auto& c : comps) os << " " << c.id << "(d=" << c.degree << ",g=" << c.genus << ")";
    os << "\n";
    os << "deg-1 generators:";
    for (size_t i = 0; i < comps.size(); ++i) os << " sigma_" << i + 1 << "=" << comps[i].id;
    os << "\n";
    os << "deg-2 generators (" << p.gen_count() << "):";
    for (size_t i = 0; i < p.gen_count(); ++i) os << " " << p.generator_name(i);
    os << "\n";
    os << "relations (rank " << p.relation_matrix().rows() << "):\n";
    for (size_t r = 0; r < p.relation_matrix().rows(); ++r) {
        os << "  0 =";
        for (size_t c = 0; c < p.gen_count(); ++c) {
            const NFElem& x = p.relation_matrix().at(r, c);
            if (x.is_zero()) continue;
            os << " + (" << x.str() << ")*" << p.generator_name(c);
        }
        os << "\n";
    }
    os << "dim V^2 = " << p.v2_dimension() << ", dim K = dim Kbar = " << p.k_dimension() << "\n";
    os << "products of degree >= 3 vanish identically\n";

    auto print_class = [&](const Degree2Class& cls) {
        bool some = false;
        for (size_t c = 0; c < p.gen_count(); ++c) {
            if (cls.v[c].is_zero()) continue;
            os << (some ? " + " : "") << "(" << cls.v[c].str() << ")*" << p.generator_name(c);
            some = true;
        }
        if (!some) os << "0";
    };

    if (!affine) {
        os << "cup products (reduced):\n";
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = i + 1; j < comps.size(); ++j) {
                os << "  sigma_" << i + 1 << " ^ sigma_" << j + 1 << " = ";
                print_class(p.cup(i, j));
                os << "\n";
            }
        return os.str();
    }

    auto aff = affine_restriction(p);
    os << "affine deg-1 basis:\n";
    for (size_t k = 0; k < aff.omega.size(); ++k) {
        os << "  omega_" << k + 1 << " =";
        for (size_t i = 0; i < comps.size(); ++i) {
            if (aff.omega[k][i].is_zero()) continue;
            os << " + (" << aff.omega[k][i].str() << ")*sigma_" << i + 1;
        }
        os << "\n";
    }
    os << "affine deg-2 part: dim " << aff.psi_basis.size() << " (+ 2g = "
       << aff.psi_basis.size() + 2 * p.k_dimension() << " total)\n";
    for (size_t k = 0; k < aff.psi_basis.size(); ++k) {
        os << "  Psi_" << k + 1 << " =";
        const auto& free_cols = p.free_columns();
        for (size_t c = 0; c < free_cols.size(); ++c) {
            if (aff.psi_basis[k][c].is_zero()) continue;
            os << " + (" << aff.psi_basis[k][c].str() << ")*" << p.generator_name(free_cols[c]);
        }
        os << "\n";
    }
    os << "affine cup products:\n";
    for (size_t a = 0; a < aff.omega.size(); ++a)
        for (size_t b = a + 1; b < aff.omega.size(); ++b) {
            auto cls = p.cup(aff.omega[a], aff.omega[b]);
            os << "  omega_" << a + 1 << " ^ omega_" << b + 1 << " =";
            auto coords = in_basis(p, aff.psi_basis, cls);
            if (!coords) {
                os << " (outside the affine span!)";
            } else {
                bool some = false;
                for (size_t k = 0; k < coords->size(); ++k) {
                    if ((*coords)[k].is_zero()) continue;
                    os << (some ? " +" : "") << " (" << (*coords)[k].str() << ")*Psi_" << k + 1;
                    some = true;
                }
                if (!some) os << " 0";
            }
            os << "\n";
        }
    return os.str();
}

} // namespace logres
