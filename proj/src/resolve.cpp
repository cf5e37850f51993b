#include "logres/resolve.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace logres {

BiPoly LocalGerm::product() const {
    BiPoly p = BiPoly::constant(NFElem::one(field));
    for (const auto& [lab, f] : factors) p = p * f;
    return p;
}

int LocalGerm::multiplicity() const {
    int m = 0;
    for (const auto& [lab, f] : factors) {
        int o = f.order_at_origin();
        if (o < 0) throw std::runtime_error("LocalGerm: zero factor " + lab);
        m += o;
    }
    return m;
}

bool Resolution::proximate(int q, int p) const {
    const auto& v = verts_.at(q);
    return (v.div_x && *v.div_x == p) || (v.div_y && *v.div_y == p);
}

namespace {

struct Direction {
    bool at_infinity = false;
    NFElem w0; // tangent (s : t) = (1 : w0) when finite, (0 : 1) otherwise
};

// Tangent directions of a local factor at the origin (zeros of its lowest
// homogeneous part), over the coefficient field.
std::vector<Direction> tangent_directions(const BiPoly& g, const std::string& label) {
    std::vector<Direction> out;
    BiPoly low = g.lowest_part();
    int m = low.total_degree();
    if (m <= 0) return out;
    const FieldPtr& f = g.field();
    // tau(1, w)
    std::vector<NFElem> cs(m + 1, NFElem::zero(f));
    for (const auto& [k, v] : low.terms()) cs[k.second] = v;
    UPoly tau1w(f, std::move(cs));
    if (tau1w.degree() < m) out.push_back({true, NFElem::zero(f)}); // direction (0:1)
    if (tau1w.degree() >= 1) {
        auto rep = field_roots(tau1w);
        if (!rep.fully_split())
            throw FieldExtensionError("field extension required: tangent cone factor " +
                                      rep.nonsplit.str("w") + " of " + label +
                                      " does not split over " + f->describe());
        for (const auto& [r, mult] : rep.roots) out.push_back({false, r});
    }
    return out;
}

} // namespace

Resolution resolve_germ(const LocalGerm& germ) {
    Resolution res;
    res.germ_ = germ;
    const FieldPtr& F = germ.field;
    const size_t nf = germ.factors.size();

    // reducedness: factors squarefree and pairwise coprime
    for (const auto& [lab, g] : germ.factors) {
        if (g.order_at_origin() < 1)
            throw std::runtime_error("germ factor " + lab + " does not vanish at the base point");
        if (!g.is_squarefree())
            throw std::runtime_error("germ factor " + lab + " is not reduced");
    }
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = i + 1; j < nf; ++j) {
            BiPoly g = BiPoly::gcd(germ.factors[i].second, germ.factors[j].second);
            if (g.total_degree() >= 1)
                throw std::runtime_error("germ factors " + germ.factors[i].first + " and " +
                                         germ.factors[j].first + " share a component");
        }

    auto& V = res.verts_;
    auto new_vertex = [&]() -> int {
        V.emplace_back();
        V.back().id = static_cast<int>(V.size()) - 1;
        return V.back().id;
    };

    {
        int r = new_vertex();
        V[r].chart_x = BiPoly::var_x(F);
        V[r].chart_y = BiPoly::var_y(F);
        for (const auto& [lab, g] : germ.factors) V[r].strict.push_back(g);
    }

    std::deque<int> work{0};
    const int kMaxVertices = 4000;
    while (!work.empty()) {
        int vi = work.front();
        work.pop_front();
        if (static_cast<int>(V.size()) > kMaxVertices)
            throw std::runtime_error("resolve_germ: blow-up did not terminate");
        // multiplicities at this point
        {
            auto& v = V[vi];
            v.comp_ord.clear();
            v.comp_mE.clear();
            v.weight = 0;
            for (size_t c = 0; c < nf; ++c) {
                int o = v.strict[c].order_at_origin();
                if (o < 0) o = 0; // factor is a unit here (should not happen for tracked points)
                v.comp_ord.push_back(o);
                v.weight += o;
            }
            for (size_t c = 0; c < nf; ++c) {
                long long m = v.comp_ord[c];
                if (v.div_x) m += V[*v.div_x].comp_mE[c];
                if (v.div_y) m += V[*v.div_y].comp_mE[c];
                v.comp_mE.push_back(m);
            }
            v.mE_f = 0;
            for (size_t c = 0; c < nf; ++c) v.mE_f += v.comp_mE[c];
        }

        bool blow;
        {
            const auto& v = V[vi];
            int ndiv = (v.div_x ? 1 : 0) + (v.div_y ? 1 : 0);
            if (vi == 0) {
                blow = v.weight >= 2;
            } else if (v.weight >= 2) {
                blow = true;
            } else if (ndiv >= 2) {
                blow = true; // strict + two divisors = triple point
            } else {
                // weight 1, single divisor: blow up exactly on tangency
                int c_on = -1;
                for (size_t c = 0; c < nf; ++c)
                    if (v.comp_ord[c] == 1) c_on = static_cast<int>(c);
                const BiPoly lin = V[vi].strict[c_on].lowest_part();
                NFElem coef_s = lin.coeff(1, 0), coef_t = lin.coeff(0, 1);
                bool tangent = false;
                if (v.div_x) tangent = coef_t.is_zero();  // tangent to {s=0}
                if (v.div_y) tangent = coef_s.is_zero();  // tangent to {t=0}
                blow = tangent;
            }
        }
        if (!blow) continue;

        // discrepancy of the divisor created here
        {
            auto& v = V[vi];
            v.k_disc = 1;
            if (v.div_x) v.k_disc += V[*v.div_x].k_disc;
            if (v.div_y) v.k_disc += V[*v.div_y].k_disc;
            v.blown_up = true;
        }

        // collect tangent directions of all factors through this point
        std::vector<Direction> dirs;
        for (size_t c = 0; c < nf; ++c) {
            if (V[vi].comp_ord[c] == 0) continue;
            for (const auto& d : tangent_directions(V[vi].strict[c], germ.factors[c].first)) {
                bool seen = false;
                for (const auto& e : dirs)
                    seen = seen || (e.at_infinity == d.at_infinity &&
                                    (d.at_infinity || e.w0 == d.w0));
                if (!seen) dirs.push_back(d);
            }
        }

        for (const auto& d : dirs) {
            int ci = new_vertex();
            auto& child = V[ci];
            auto& v = V[vi];
            child.parent = vi;
            v.children.push_back(ci);
            BiPoly S = BiPoly::var_x(F), T = BiPoly::var_y(F);
            if (!d.at_infinity) {
                child.direction = d.w0;
                // (s,t) = (s', s'(w0 + t'))
                BiPoly sub_s = S;
                BiPoly sub_t = S * (T + BiPoly::constant(d.w0));
                child.chart_x = v.chart_x.subst(sub_s, sub_t);
                child.chart_y = v.chart_y.subst(sub_s, sub_t);
                child.div_x = vi; // E_new = {s'=0}
                if (d.w0.is_zero() && v.div_y) child.div_y = v.div_y;
                for (size_t c = 0; c < nf; ++c) {
                    BiPoly g = v.strict[c].subst(sub_s, sub_t);
                    child.strict.push_back(g.is_zero() ? g : g.shift_down(v.comp_ord[c], 0));
                }
            } else {
                child.at_infinity_dir = true;
                // (s,t) = (s'' t'', t'')
                BiPoly sub_s = S * T;
                BiPoly sub_t = T;
                child.chart_x = v.chart_x.subst(sub_s, sub_t);
                child.chart_y = v.chart_y.subst(sub_s, sub_t);
                child.div_y = vi; // E_new = {t''=0}
                if (v.div_x) child.div_x = v.div_x;
                for (size_t c = 0; c < nf; ++c) {
                    BiPoly g = v.strict[c].subst(sub_s, sub_t);
                    child.strict.push_back(g.is_zero() ? g : g.shift_down(0, v.comp_ord[c]));
                }
            }
            work.push_back(ci);
        }
    }

    // ---- tree view ------------------------------------------------------
    std::vector<MultiplicityTree::Vertex> tv(V.size());
    for (const auto& v : V) {
        tv[v.id].parent = v.parent;
        tv[v.id].children = v.children;
        tv[v.id].weight = v.weight;
    }
    MultiplicityTree tree{std::move(tv)};
    auto old_to_new = tree.canonicalize();
    res.tree_index_ = old_to_new;

    // branches <-> leaves; profile recursion via proximity
    struct Leaf {
        int res_id;
        int comp;
        int tree_id;
    };
    std::vector<Leaf> leaves;
    for (const auto& v : V) {
        if (v.blown_up || (v.id == 0 && v.weight >= 2)) continue;
        int c_on = -1;
        int count = 0;
        for (size_t c = 0; c < nf; ++c)
            if (v.comp_ord[c] >= 1) { c_on = static_cast<int>(c); count += v.comp_ord[c]; }
        if (v.id == 0) {
            // smooth germ: single vertex, one factor of multiplicity one
            if (count != 1)
                throw std::runtime_error("resolve_germ: smooth base point with multiplicity != 1");
        } else if (count != 1) {
            throw std::runtime_error("resolve_germ: non-simple leaf (internal error)");
        }
        leaves.push_back({v.id, c_on, old_to_new[v.id]});
    }
    std::sort(leaves.begin(), leaves.end(), [](const Leaf& a, const Leaf& b) { return a.tree_id < b.tree_id; });

    std::map<int, int> comp_branch_count;
    for (const auto& l : leaves) comp_branch_count[l.comp]++;
    std::map<int, int> comp_seen;
    for (const auto& l : leaves) {
        const std::string& lab = germ.factors[l.comp].first;
        std::string bid = lab;
        if (comp_branch_count[l.comp] > 1)
            bid += "#" + std::to_string(++comp_seen[l.comp]);
        // profile along the path, proximity recursion from the leaf upward
        std::vector<int> path; // resolution ids, leaf first
        for (int q = l.res_id; q >= 0; q = V[q].parent) path.push_back(q);
        std::map<int, long long> nu;
        nu[path[0]] = 1;
        for (size_t i = 1; i < path.size(); ++i) {
            int q = path[i];
            long long s = 0;
            for (size_t j = 0; j < i; ++j)
                if (res.proximate(path[j], q)) s += nu[path[j]];
            if (s <= 0)
                throw std::runtime_error("resolve_germ: proximity recursion failed (internal error)");
            nu[q] = s;
        }
        std::map<int, int> prof;
        for (const auto& [q, m] : nu) prof[old_to_new[q]] = static_cast<int>(m);
        tree.add_branch_profile(bid, std::move(prof));
        res.branch_comp_[bid] = lab;
        res.branch_leaf_[bid] = l.res_id;
    }

    // invariant: weights decompose as sums of branch multiplicities
    for (const auto& v : V) {
        long long s = 0;
        for (const auto& [b, prof] : tree.branch_profiles()) {
            auto it = prof.find(old_to_new[v.id]);
            if (it != prof.end()) s += it->second;
        }
        if (s != v.weight)
            throw std::runtime_error("resolve_germ: branch profiles do not sum to the weight (internal error)");
    }

    res.tree_ = std::move(tree);
    return res;
}

std::vector<long long> Resolution::pullback_orders(const BiPoly& h) const {
    std::vector<long long> out;
    out.reserve(verts_.size());
    for (const auto& v : verts_) {
        BiPoly p = h.subst(v.chart_x, v.chart_y);
        int o = p.order_at_origin();
        out.push_back(o < 0 ? -1 : o); // -1 marks identically-zero pullback
    }
    return out;
}

Resolution::SymbolicPullback Resolution::pullback_family(const std::vector<BiPoly>& basis,
                                                         int degree_bound) const {
    SymbolicPullback sp;
    sp.low_terms.resize(verts_.size());
    const FieldPtr& F = germ_.field;
    for (size_t vi = 0; vi < verts_.size(); ++vi) {
        const auto& v = verts_[vi];
        for (size_t j = 0; j < basis.size(); ++j) {
            BiPoly p = basis[j].subst(v.chart_x, v.chart_y).truncated(degree_bound);
            for (const auto& [k, c] : p.terms()) {
                auto& row = sp.low_terms[vi][k];
                if (row.empty()) row.assign(basis.size(), NFElem::zero(F));
                row[j] += c;
            }
        }
    }
    return sp;
}

} // namespace logres
