#include "logres/derive.hpp"
#include "logres/parser.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

ClassicalCombinatorialType DerivedArrangement::classical() const {
    ClassicalCombinatorialType k;
    k.weak = wct_;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Resolution& res = full_resolution_at(i);
        const MultiplicityTree& t = res.tree();
        // relabel branch profiles with global ids
        MultiplicityTree relabeled{std::vector<MultiplicityTree::Vertex>(t.vertices())};
        for (const auto& [b, prof] : t.branch_profiles())
            relabeled.add_branch_profile(global_branch(i, b), std::map<int, int>(prof));
        k.point_trees[point_names_[i]] = std::move(relabeled);
    }
    return k;
}

std::optional<size_t> DerivedArrangement::point_index(const ProjPoint& p) const {
    for (size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] == p) return i;
    return std::nullopt;
}

std::optional<size_t> DerivedArrangement::point_index_by_name(const std::string& name) const {
    for (size_t i = 0; i < point_names_.size(); ++i)
        if (point_names_[i] == name) return i;
    return std::nullopt;
}

const HPoly& DerivedArrangement::equation_of(const std::string& comp_id) const {
    for (const auto& c : curves_)
        if (c.id == comp_id) return c.equation;
    throw std::runtime_error("unknown component " + comp_id);
}

const Resolution& DerivedArrangement::resolution_at(size_t point, const std::set<std::string>& comps) const {
    auto key = std::make_pair(point, comps);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return *it->second;
    }
    const ProjPoint& P = coords_.at(point);
    LocalGerm germ;
    germ.field = field_;
    for (const auto& c : curves_) {
        if (!comps.empty() && !comps.count(c.id)) continue;
        if (!vanishes_at(c.equation, P)) continue;
        germ.factors.emplace_back(c.id, local_equation(c.equation, P));
    }
    if (germ.factors.empty())
        throw std::runtime_error("no requested component passes through " + P.str());
    auto res = std::make_shared<Resolution>(resolve_germ(germ));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->entries.emplace(key, std::move(res));
    return *it->second;
}

const Resolution& DerivedArrangement::full_resolution_at(size_t point) const {
    return resolution_at(point, {});
}

std::string DerivedArrangement::global_branch(size_t point, const std::string& local_branch) const {
    return point_names_.at(point) + ":" + local_branch;
}

DerivedArrangement derive_wct(std::vector<InputCurve> curves, FieldPtr field,
                              std::optional<std::string> transversal_line,
                              const std::map<std::string, std::string>& first_infinity) {
    DerivedArrangement D;
    D.curves_ = std::move(curves);
    D.field_ = std::move(field);
    D.line_id_ = transversal_line;

    if (D.curves_.empty()) throw std::runtime_error("derive_wct: no curves");
    for (const auto& c : D.curves_) {
        if (!squarefree(c.equation))
            throw std::runtime_error("curve " + c.id + " is not reduced");
    }
    for (size_t i = 0; i < D.curves_.size(); ++i)
        for (size_t j = i + 1; j < D.curves_.size(); ++j)
            if (!coprime(D.curves_[i].equation, D.curves_[j].equation))
                throw std::runtime_error("curves " + D.curves_[i].id + " and " + D.curves_[j].id +
                                         " share a component");
    if (transversal_line) {
        bool found = false;
        for (const auto& c : D.curves_) found = found || c.id == *transversal_line;
        if (!found) throw std::runtime_error("transversal line " + *transversal_line + " is not an input curve");
        if (D.equation_of(*transversal_line).degree() != 1)
            throw std::runtime_error("designated transversal line " + *transversal_line + " is not a line");
    }

    // ---- locate all singular points of the union -------------------------
    std::vector<ProjPoint> pts;
    auto push = [&](const ProjPoint& p) {
        for (const auto& q : pts)
            if (q == p) return;
        pts.push_back(p);
    };
    for (size_t i = 0; i < D.curves_.size(); ++i) {
        for (const auto& p : singular_points_of(D.curves_[i].equation)) push(p);
        for (size_t j = i + 1; j < D.curves_.size(); ++j)
            for (const auto& p : intersection_points(D.curves_[i].equation, D.curves_[j].equation))
                push(p);
    }
    std::sort(pts.begin(), pts.end());
    D.coords_ = pts;
    for (size_t i = 0; i < pts.size(); ++i)
        D.point_names_.push_back("S" + std::to_string(i + 1));

    // ---- assemble the weak type ------------------------------------------
    WeakCombinatorialType w;
    for (const auto& c : D.curves_) w.components.push_back({c.id, c.equation.degree(), 0});
    if (transversal_line) {
        w.has_transversal_line = true;
        w.line_component = *transversal_line;
    }

    std::map<std::string, std::vector<std::pair<size_t, const MultiplicityTree*>>> comp_sing_trees;
    for (size_t pi = 0; pi < pts.size(); ++pi) {
        const Resolution& res = D.full_resolution_at(pi);
        SingularPoint sp;
        sp.id = D.point_names_[pi];
        for (const auto& b : res.tree().branch_ids()) {
            std::string gb = D.global_branch(pi, b);
            sp.branches.push_back(gb);
            w.branch_component[gb] = res.branch_component().at(b);
        }
        std::sort(sp.branches.begin(), sp.branches.end());
        // mu on cross-component pairs
        auto ids = res.tree().branch_ids();
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b) {
                const std::string &ca = res.branch_component().at(ids[a]),
                                  &cb = res.branch_component().at(ids[b]);
                if (ca == cb) continue;
                long long m = branch_pairing(res.tree(), ids[a], ids[b]);
                w.mu[branch_pair_key(D.global_branch(pi, ids[a]), D.global_branch(pi, ids[b]))] = m;
            }
        w.points.push_back(std::move(sp));

        // record per-component singular germs for the genus formula
        for (const auto& c : D.curves_) {
            if (!vanishes_at(c.equation, pts[pi])) continue;
            BiPoly loc = local_equation(c.equation, pts[pi]);
            int branches_here = 0;
            for (const auto& [bid, comp] : res.branch_component())
                if (comp == c.id) ++branches_here;
            if (loc.order_at_origin() >= 2 || branches_here >= 2) {
                const Resolution& sub = D.resolution_at(pi, {c.id});
                comp_sing_trees[c.id].push_back({pi, &sub.tree()});
            }
        }
    }

    // genera via the Noether formula
    for (auto& comp : w.components) {
        std::vector<const MultiplicityTree*> trees;
        for (const auto& [pi, t] : comp_sing_trees[comp.id]) trees.push_back(t);
        comp.genus = noether_genus(comp.degree, trees);
    }

    // ---- transversal line checks and infinity bookkeeping ----------------
    if (transversal_line) {
        const std::string& L = *transversal_line;
        const HPoly& lineq = D.equation_of(L);
        for (const auto& c : D.curves_) {
            if (c.id == L) continue;
            auto ipts = intersection_points(lineq, c.equation);
            if (static_cast<int>(ipts.size()) != c.equation.degree())
                throw std::runtime_error("line " + L + " is tangent to " + c.id +
                                         " or meets it at fewer than deg points");
            std::vector<size_t> idx;
            for (const auto& p : ipts) {
                auto pi = D.point_index(p);
                if (!pi) throw std::runtime_error("internal: line point not located");
                const auto& spt = w.points[*pi];
                if (spt.branches.size() != 2)
                    throw std::runtime_error("line " + L + " passes through the singular point " +
                                             p.str() + " of the arrangement");
                idx.push_back(*pi);
            }
            // designated first point
            auto fi = first_infinity.find(c.id);
            if (fi != first_infinity.end()) {
                size_t want = idx.size();
                std::optional<ProjPoint> lit;
                if (!fi->second.empty() && fi->second.front() == '[')
                    lit = parse_point(fi->second, D.field_);
                for (size_t k = 0; k < idx.size(); ++k) {
                    const auto& P = D.coords_[idx[k]];
                    if ((lit && P == *lit) || D.point_names_[idx[k]] == fi->second) want = k;
                }
                if (want == idx.size())
                    throw std::runtime_error("first-infinity designation for " + c.id +
                                             " does not name a point on the line");
                std::swap(idx[0], idx[want]);
            }
            w.first_infinity[c.id] = D.point_names_[idx[0]];
            D.infinity_[c.id] = idx;
        }
    }

    D.wct_ = std::move(w);

    auto rep = validate(D.wct_);
    if (!rep.valid())
        throw std::runtime_error("derived combinatorial type fails validation (internal error):\n" +
                                 rep.text());
    return D;
}

} // namespace logres
