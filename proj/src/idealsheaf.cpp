#include "logres/idealsheaf.hpp"

#include "logres/logtree.hpp"

#include <algorithm>

namespace logres {

std::vector<long long> cluster_bounds(const Resolution& res, const std::vector<long long>& b) {
    std::vector<long long> B(b.size(), 0);
    for (const auto& v : res.vertices()) {
        long long s = b[v.id];
        if (v.div_x) s += B[*v.div_x];
        if (v.div_y) s += B[*v.div_y];
        B[v.id] = s;
    }
    return B;
}

LinearSystem conditions_from_spec(const DerivedArrangement& D, const IdealSheafSpec& spec) {
    const FieldPtr& K = D.field();
    LinearSystem sys;
    sys.degree = spec.twist_degree;
    sys.monomials = monomials_of_degree(spec.twist_degree);
    Matrix rows(K, 0, sys.monomials.size());
    for (const auto& [pi, bound] : spec.bounds) {
        const Resolution& res = *bound.res;
        if (bound.b.size() != static_cast<size_t>(res.size()))
            throw std::runtime_error("conditions_from_spec: bound shape mismatch at point " +
                                     std::to_string(pi));
        auto B = cluster_bounds(res, bound.b);
        long long maxB = 0;
        for (long long x : B) maxB = std::max(maxB, x);
        if (maxB == 0) continue;
        // local monomial basis: the generic global form restricted to the germ chart
        const ProjPoint& P = D.point_coords()[pi];
        std::vector<BiPoly> basis;
        for (const auto& key : sys.monomials) {
            HPoly mono(K, spec.twist_degree);
            mono.set(key[0], key[1], key[2], NFElem::one(K));
            basis.push_back(local_equation(mono, P));
        }
        auto sp = res.pullback_family(basis, static_cast<int>(maxB));
        for (const auto& v : res.vertices()) {
            if (B[v.id] <= 0) continue;
            for (const auto& [key, row] : sp.low_terms[v.id]) {
                if (key.first + key.second >= B[v.id]) continue;
                rows.append_row(row);
            }
        }
    }
    if (rows.rows() == 0) rows = Matrix(K, 0, sys.monomials.size());
    sys.conditions = std::move(rows);
    return sys;
}

std::vector<HPoly> global_sections(const DerivedArrangement& D, const IdealSheafSpec& spec) {
    const FieldPtr& K = D.field();
    LinearSystem sys = conditions_from_spec(D, spec);
    std::vector<HPoly> out;
    for (const auto& vec : sys.conditions.null_space()) {
        HPoly h(K, spec.twist_degree);
        for (size_t m = 0; m < sys.monomials.size(); ++m)
            if (!vec[m].is_zero())
                h.set(sys.monomials[m][0], sys.monomials[m][1], sys.monomials[m][2], vec[m]);
        out.push_back(std::move(h));
    }
    return out;
}

long long spec_colength(const IdealSheafSpec& spec) {
    long long s = 0;
    for (const auto& [pi, bound] : spec.bounds)
        for (long long b : bound.b) s += b * (b + 1) / 2;
    return s;
}

namespace {

// minus-one bounds of the germ's own multiplicity data
std::vector<long long> tn_bounds(const Resolution& res) {
    std::vector<long long> b;
    for (const auto& v : res.vertices()) b.push_back(std::max(v.weight - 1, 0));
    return b;
}

bool subgerm_singular(const DerivedArrangement& D, const std::set<std::string>& comps, size_t pi) {
    int through = 0;
    for (const auto& c : comps)
        if (vanishes_at(D.equation_of(c), D.point_coords()[pi])) ++through;
    if (through == 0) return false;
    if (through >= 2) return true;
    for (const auto& c : comps) {
        if (!vanishes_at(D.equation_of(c), D.point_coords()[pi])) continue;
        BiPoly loc = local_equation(D.equation_of(c), D.point_coords()[pi]);
        if (loc.order_at_origin() >= 2) return true;
        // several branches of one component also make the subgerm singular
        const Resolution& res = D.resolution_at(pi, {c});
        if (res.tree().branch_ids().size() >= 2) return true;
    }
    return false;
}

} // namespace

IdealSheafSpec basic_ideal_spec(const DerivedArrangement& D, const std::set<std::string>& comps,
                                int twist) {
    IdealSheafSpec spec;
    spec.twist_degree = twist;
    for (size_t pi = 0; pi < D.point_coords().size(); ++pi) {
        if (!subgerm_singular(D, comps, pi)) continue;
        const Resolution& res = D.resolution_at(pi, comps);
        spec.bounds[pi] = {&res, tn_bounds(res)};
    }
    return spec;
}

IdealSheafSpec pair_ideal_spec(const DerivedArrangement& D, const std::string& ci,
                               const std::string& cj, size_t point, const std::string& local_b1,
                               const std::string& local_b2, int twist) {
    std::set<std::string> pair = {ci, cj};
    IdealSheafSpec spec = basic_ideal_spec(D, pair, twist);
    // the distinguished point gets the basic logarithmic tree instead of T^n
    const Resolution& res = D.resolution_at(point, pair);
    auto lt = find_logarithmic_tree(res, local_b1, local_b2);
    spec.bounds[point] = {&res, lt.bounds};
    // points at infinity: vanishing except at the designated first points
    if (!D.line_id()) return spec;
    const std::string& L = *D.line_id();
    for (const auto& comp : pair) {
        if (comp == L) continue;
        auto it = D.infinity_points().find(comp);
        if (it == D.infinity_points().end()) continue;
        const auto& pts = it->second;
        for (size_t k = 1; k < pts.size(); ++k) { // skip the first point
            const Resolution& node = D.resolution_at(pts[k], {L, comp});
            spec.bounds[pts[k]] = {&node, tn_bounds(node)};
        }
    }
    return spec;
}

IdealSheafSpec infinity_ideal_spec(const DerivedArrangement& D, const std::string& ci, int k,
                                   int twist) {
    IdealSheafSpec spec = basic_ideal_spec(D, {ci}, twist);
    if (!D.line_id()) throw std::runtime_error("infinity_ideal_spec needs a transversal line");
    const std::string& L = *D.line_id();
    const auto& pts = D.infinity_points().at(ci);
    if (k < 2 || static_cast<size_t>(k) > pts.size())
        throw std::runtime_error("infinity_ideal_spec: k out of range");
    for (size_t idx = 1; idx < pts.size(); ++idx) {
        if (static_cast<int>(idx) == k - 1) continue; // P^i_k carries no condition
        const Resolution& node = D.resolution_at(pts[idx], {L, ci});
        spec.bounds[pts[idx]] = {&node, tn_bounds(node)};
    }
    return spec;
}

std::vector<HPoly> k_basis(const DerivedArrangement& D, const std::string& ci) {
    int d = D.equation_of(ci).degree();
    if (d < 3) return {};
    IdealSheafSpec spec = basic_ideal_spec(D, {ci}, d - 3);
    return global_sections(D, spec);
}

bool k_sum_independent(const DerivedArrangement& D) {
    // sum psi_i = 0 with psi_i = phi_i omega / C_i is, after multiplying by
    // prod C_j, the vanishing of sum phi_i prod_{j != i} C_j; independence is a
    // rank statement about the cleared family.
    const FieldPtr& K = D.field();
    std::vector<std::pair<std::string, HPoly>> cleared;
    int total_deg = 0;
    for (const auto& c : D.curves()) total_deg += c.equation.degree();
    size_t expected = 0;
    for (const auto& c : D.curves()) {
        auto basis = k_basis(D, c.id);
        expected += basis.size();
        for (const auto& phi : basis) {
            HPoly prod = phi;
            for (const auto& other : D.curves())
                if (other.id != c.id) prod = prod * other.equation;
            cleared.emplace_back(c.id, std::move(prod));
        }
    }
    if (cleared.empty()) return true;
    auto mons = monomials_of_degree(total_deg - 3);
    Matrix m(K, cleared.size(), mons.size());
    for (size_t r = 0; r < cleared.size(); ++r)
        for (size_t cidx = 0; cidx < mons.size(); ++cidx)
            m.at(r, cidx) = cleared[r].second.coeff(mons[cidx][0], mons[cidx][1], mons[cidx][2]);
    return m.rank() == expected;
}

} // namespace logres
