#include "logres/logtree.hpp"

#include "logres/forms.hpp"
#include "logres/matrix.hpp"
#include "logres/multtree.hpp"

#include <algorithm>
#include <numeric>

namespace logres {

std::vector<std::pair<int, int>> local_monomials(int trunc) {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d < trunc; ++d)
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

namespace {

std::vector<long long> cluster_transform(const Resolution& res, const std::vector<long long>& b) {
    std::vector<long long> B(b.size(), 0);
    for (const auto& v : res.vertices()) {
        long long s = b[v.id];
        if (v.div_x) s += B[*v.div_x];
        if (v.div_y) s += B[*v.div_y];
        B[v.id] = s;
    }
    return B;
}

bool proximity_consistent(const Resolution& res, const std::vector<long long>& b) {
    for (const auto& v : res.vertices()) {
        long long prox = 0;
        for (const auto& q : res.vertices())
            if (res.proximate(q.id, v.id)) prox += b[q.id];
        if (b[v.id] < prox) return false;
    }
    return true;
}

} // namespace

Matrix local_conditions(const Resolution& res, const std::vector<long long>& bounds, int trunc) {
    const FieldPtr& K = res.germ().field;
    auto mons = local_monomials(trunc);
    std::vector<BiPoly> basis;
    for (const auto& [i, j] : mons) basis.push_back(BiPoly::monomial(K, i, j, NFElem::one(K)));
    auto B = cluster_transform(res, bounds);
    long long maxB = 0;
    for (long long x : B) maxB = std::max(maxB, x);
    auto sp = res.pullback_family(basis, static_cast<int>(maxB));
    Matrix rows(K, 0, basis.size());
    for (const auto& v : res.vertices()) {
        if (B[v.id] <= 0) continue;
        for (const auto& [key, row] : sp.low_terms[v.id]) {
            if (key.first + key.second >= B[v.id]) continue;
            rows.append_row(row);
        }
    }
    if (rows.rows() == 0) {
        // no conditions: return the 0 x n matrix
        return Matrix(K, 0, basis.size());
    }
    return rows;
}

std::set<int> residue_support(const Resolution& res, const BiPoly& h) {
    LocalFormCore core(res, h, {res.germ().product()});
    std::set<int> support;
    for (const auto& v : res.vertices()) {
        if (v.blown_up) {
            RationalFn eta = core.eta_along(v.id);
            if (!eta.is_zero()) support.insert(v.id);
        } else {
            // leaf: Res^2 at the crossing of the branch strict with its divisor
            int axis = v.div_x ? -1 : -2;
            if (!v.div_x && !v.div_y) continue; // smooth single-vertex germ
            NFElem r = core.res2_at(v.id, 0, axis);
            if (!r.is_zero()) support.insert(v.id);
        }
    }
    return support;
}

LogTreeSearchResult find_logarithmic_tree(const Resolution& res, const std::string& branch1,
                                          const std::string& branch2) {
    const FieldPtr& K = res.germ().field;
    const int n = res.size();
    const BiPoly f = res.germ().product();

    // target: support on the tree-path between the two arrows, translated back
    // to resolution indices
    std::set<int> gamma_target;
    {
        auto g = gamma_subtree(res.tree(), branch1, branch2);
        const auto& idx = res.tree_index();
        for (const auto& v : res.vertices())
            if (g.count(idx[v.id])) gamma_target.insert(v.id);
    }

    // enumerate consistent assignments 0 <= b <= weight by increasing degree
    std::vector<long long> limit(n);
    for (int i = 0; i < n; ++i) limit[i] = res.vertex(i).weight;
    std::vector<std::vector<long long>> candidates;
    std::vector<long long> cur(n, 0);
    std::function<void(int)> enumerate = [&](int i) {
        if (i == n) {
            candidates.push_back(cur);
            return;
        }
        for (long long b = 0; b <= limit[i]; ++b) {
            cur[i] = b;
            enumerate(i + 1);
        }
        cur[i] = 0;
    };
    enumerate(0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const std::vector<long long>& a, const std::vector<long long>& b) {
                         auto deg = [](const std::vector<long long>& w) {
                             long long s = 0;
                             for (long long x : w) s += x * (x + 1) / 2;
                             return s;
                         };
                         return deg(a) < deg(b);
                     });

    // thresholds for logarithmicity
    std::vector<long long> thr(n, 0);
    for (const auto& v : res.vertices())
        if (v.blown_up) thr[v.id] = v.mE_f - v.k_disc - 1;

    LogTreeSearchResult out;
    for (const auto& b : candidates) {
        ++out.candidates_tried;
        if (!proximity_consistent(res, b)) continue;
        auto B = cluster_transform(res, b);
        // fast filter: generic sections achieve ord = B at every divisor
        bool log_ok = true;
        for (const auto& v : res.vertices())
            if (v.blown_up && B[v.id] < thr[v.id]) log_ok = false;
        if (!log_ok) continue;

        long long maxm = 0;
        for (const auto& v : res.vertices()) maxm = std::max(maxm, v.mE_f);
        int trunc = static_cast<int>(maxm) + 2;
        Matrix cond = local_conditions(res, b, trunc);
        auto basis_vecs = cond.null_space();
        auto mons = local_monomials(trunc);
        std::vector<BiPoly> sections;
        for (const auto& vec : basis_vecs) {
            BiPoly h(K);
            for (size_t m = 0; m < mons.size(); ++m)
                if (!vec[m].is_zero()) h.set(mons[m].first, mons[m].second, vec[m]);
            sections.push_back(std::move(h));
        }
        if (sections.empty()) continue;

        // (ii): every basis section is logarithmic
        bool basis_log = true;
        for (const auto& h : sections) {
            auto ords = res.pullback_orders(h);
            for (const auto& v : res.vertices())
                if (v.blown_up && ords[v.id] >= 0 && ords[v.id] < thr[v.id]) basis_log = false;
        }
        if (!basis_log) continue;

        // (iii): an essential section (exact orders) has residue support gamma
        BiPoly generic(K);
        bool exact = false;
        for (long seed = 1; seed <= 8 && !exact; ++seed) {
            BiPoly h(K);
            long c = seed;
            for (const auto& s : sections) {
                h = h + s * NFElem(K, Rational(c));
                c = c * 7 + 3;
            }
            auto ords = res.pullback_orders(h);
            exact = true;
            for (const auto& v : res.vertices())
                exact = exact && ords[v.id] == B[v.id];
            if (exact) generic = h;
        }
        if (!exact) continue;
        std::set<int> support = residue_support(res, generic);
        if (support == gamma_target) {
            out.bounds = b;
            out.degree = 0;
            for (long long x : b) out.degree += x * (x + 1) / 2;
            return out;
        }
    }
    throw std::runtime_error("find_logarithmic_tree: search exhausted (contradicts the existence theorem)");
}

} // namespace logres
