#include "logres/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace logres {

EquivalenceWitness EquivalenceWitness::inverse() const {
    EquivalenceWitness w;
    for (const auto& [a, b] : component_map) w.component_map[b] = a;
    for (const auto& [a, b] : point_map) w.point_map[b] = a;
    for (const auto& [a, b] : branch_map) w.branch_map[b] = a;
    return w;
}

EquivalenceWitness EquivalenceWitness::compose(const EquivalenceWitness& first,
                                               const EquivalenceWitness& then) {
    EquivalenceWitness w;
    for (const auto& [a, b] : first.component_map) w.component_map[a] = then.component_map.at(b);
    for (const auto& [a, b] : first.point_map) w.point_map[a] = then.point_map.at(b);
    for (const auto& [a, b] : first.branch_map) w.branch_map[a] = then.branch_map.at(b);
    return w;
}

namespace {

// component signature: degree, genus, multiset of per-point branch counts
std::string comp_signature(const WeakCombinatorialType& w, const std::string& cid) {
    std::vector<int> counts;
    for (const auto& p : w.points) {
        int n = 0;
        for (const auto& b : p.branches)
            if (w.branch_component.at(b) == cid) ++n;
        if (n) counts.push_back(n);
    }
    std::sort(counts.begin(), counts.end());
    const Component* c = w.find_component(cid);
    std::ostringstream os;
    os << c->degree << "g" << c->genus;
    if (w.has_transversal_line) os << (w.line_component == cid ? "L" : "");
    for (int n : counts) os << "." << n;
    return os.str();
}

// point signature: multiset over cross pairs of (mu, unordered component signatures)
std::string point_signature(const WeakCombinatorialType& w, const SingularPoint& p,
                            const std::map<std::string, std::string>& comp_sig) {
    std::vector<std::string> entries;
    for (size_t i = 0; i < p.branches.size(); ++i)
        for (size_t j = i + 1; j < p.branches.size(); ++j) {
            const auto &c1 = w.branch_component.at(p.branches[i]),
                       &c2 = w.branch_component.at(p.branches[j]);
            if (c1 == c2) continue;
            long long m = w.mu_of(p.branches[i], p.branches[j]);
            std::string s1 = comp_sig.at(c1), s2 = comp_sig.at(c2);
            if (s2 < s1) std::swap(s1, s2);
            entries.push_back(std::to_string(m) + "|" + s1 + "|" + s2);
        }
    std::sort(entries.begin(), entries.end());
    std::ostringstream os;
    os << p.branches.size();
    for (const auto& e : entries) os << ";" << e;
    return os.str();
}

struct Searcher {
    const WeakCombinatorialType& A;
    const WeakCombinatorialType& B;
    const ClassicalCombinatorialType* KA = nullptr;
    const ClassicalCombinatorialType* KB = nullptr;

    std::map<std::string, std::string> sigA, sigB; // component signatures
    EquivalenceWitness witness;

    bool tree_match(const SingularPoint& pa, const SingularPoint& pb,
                    const std::map<std::string, std::string>& bmap) {
        if (!KA || !KB) return true;
        const MultiplicityTree& ta = KA->point_trees.at(pa.id);
        const MultiplicityTree& tb = KB->point_trees.at(pb.id);
        auto encode = [](const MultiplicityTree& t,
                         const std::function<std::string(const std::string&)>& rename) {
            std::function<std::string(int)> label = [&](int v) {
                std::vector<std::string> entries;
                for (const auto& [b, prof] : t.branch_profiles()) {
                    auto it = prof.find(v);
                    if (it != prof.end() && it->second > 0)
                        entries.push_back(rename(b) + "=" + std::to_string(it->second));
                }
                std::sort(entries.begin(), entries.end());
                std::string out;
                for (const auto& e : entries) out += e + ",";
                return out;
            };
            return t.canonical_encoding(&label);
        };
        std::string ea = encode(ta, [&](const std::string& b) { return bmap.at(b); });
        std::string eb = encode(tb, [](const std::string& b) { return b; });
        return ea == eb;
    }

    // try to match branches of point pa onto pb consistently with the
    // component map; idx = position in pa.branches.
    bool match_branches(const SingularPoint& pa, const SingularPoint& pb, size_t idx,
                        std::map<std::string, std::string>& bmap, std::set<std::string>& used) {
        if (idx == pa.branches.size()) {
            // mu transported?
            for (size_t i = 0; i < pa.branches.size(); ++i)
                for (size_t j = i + 1; j < pa.branches.size(); ++j) {
                    const auto &x = pa.branches[i], &y = pa.branches[j];
                    const auto &cx = A.branch_component.at(x), &cy = A.branch_component.at(y);
                    if (cx == cy) continue;
                    if (A.mu_of(x, y) != B.mu_of(bmap.at(x), bmap.at(y))) return false;
                }
            if (!tree_match(pa, pb, bmap)) return false;
            for (const auto& [x, y] : bmap) witness.branch_map[x] = y;
            return true;
        }
        const std::string& b = pa.branches[idx];
        const std::string target_comp = witness.component_map.at(A.branch_component.at(b));
        for (const auto& cand : pb.branches) {
            if (used.count(cand)) continue;
            if (B.branch_component.at(cand) != target_comp) continue;
            bmap[b] = cand;
            used.insert(cand);
            if (match_branches(pa, pb, idx + 1, bmap, used)) return true;
            bmap.erase(b);
            used.erase(cand);
        }
        return false;
    }

    bool match_points(size_t idx, std::vector<int>& point_target, std::set<int>& used) {
        if (idx == A.points.size()) return true;
        const auto& pa = A.points[idx];
        for (size_t j = 0; j < B.points.size(); ++j) {
            if (used.count(static_cast<int>(j))) continue;
            const auto& pb = B.points[j];
            if (pa.branches.size() != pb.branches.size()) continue;
            std::map<std::string, std::string> bmap;
            std::set<std::string> bused;
            std::map<std::string, std::string> save_branches = witness.branch_map;
            if (match_branches(pa, pb, 0, bmap, bused)) {
                witness.point_map[pa.id] = pb.id;
                used.insert(static_cast<int>(j));
                point_target[idx] = static_cast<int>(j);
                if (match_points(idx + 1, point_target, used)) return true;
                used.erase(static_cast<int>(j));
                witness.point_map.erase(pa.id);
            }
            witness.branch_map = std::move(save_branches);
        }
        return false;
    }

    bool match_components(size_t idx, const std::vector<std::string>& order,
                          std::set<std::string>& used) {
        if (idx == order.size()) {
            std::vector<int> pt(A.points.size(), -1);
            std::set<int> pused;
            witness.point_map.clear();
            witness.branch_map.clear();
            return match_points(0, pt, pused);
        }
        const std::string& ca = order[idx];
        for (const auto& cb : B.components) {
            if (used.count(cb.id)) continue;
            if (sigA.at(ca) != sigB.at(cb.id)) continue;
            if (A.has_transversal_line != B.has_transversal_line) continue;
            if (A.has_transversal_line &&
                ((A.line_component == ca) != (B.line_component == cb.id)))
                continue;
            witness.component_map[ca] = cb.id;
            used.insert(cb.id);
            if (match_components(idx + 1, order, used)) return true;
            used.erase(cb.id);
            witness.component_map.erase(ca);
        }
        return false;
    }
};

std::optional<EquivalenceWitness> search(const WeakCombinatorialType& a,
                                         const WeakCombinatorialType& b,
                                         const ClassicalCombinatorialType* ka,
                                         const ClassicalCombinatorialType* kb) {
    if (a.components.size() != b.components.size()) return std::nullopt;
    if (a.points.size() != b.points.size()) return std::nullopt;
    Searcher s{a, b, ka, kb, {}, {}, {}};
    for (const auto& c : a.components) s.sigA[c.id] = comp_signature(a, c.id);
    for (const auto& c : b.components) s.sigB[c.id] = comp_signature(b, c.id);
    {
        std::vector<std::string> va, vb;
        for (const auto& [k, v] : s.sigA) va.push_back(v);
        for (const auto& [k, v] : s.sigB) vb.push_back(v);
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        if (va != vb) return std::nullopt;
    }
    {
        std::vector<std::string> va, vb;
        for (const auto& p : a.points) va.push_back(point_signature(a, p, s.sigA));
        for (const auto& p : b.points) vb.push_back(point_signature(b, p, s.sigB));
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        if (va != vb) return std::nullopt;
    }
    // search order: components by decreasing signature rarity
    std::vector<std::string> order;
    for (const auto& c : a.components) order.push_back(c.id);
    std::sort(order.begin(), order.end(),
              [&](const std::string& x, const std::string& y) { return s.sigA.at(x) < s.sigA.at(y); });
    std::set<std::string> used;
    if (s.match_components(0, order, used)) return s.witness;
    return std::nullopt;
}

} // namespace

std::optional<EquivalenceWitness> weak_equivalence(const WeakCombinatorialType& a,
                                                   const WeakCombinatorialType& b) {
    return search(a, b, nullptr, nullptr);
}

std::optional<EquivalenceWitness> classical_equivalence(const ClassicalCombinatorialType& a,
                                                        const ClassicalCombinatorialType& b) {
    return search(a.weak, b.weak, &a, &b);
}

bool witness_is_valid(const WeakCombinatorialType& a, const WeakCombinatorialType& b,
                      const EquivalenceWitness& w) {
    for (const auto& ca : a.components) {
        auto it = w.component_map.find(ca.id);
        if (it == w.component_map.end()) return false;
        const Component* cb = b.find_component(it->second);
        if (!cb || cb->degree != ca.degree || cb->genus != ca.genus) return false;
    }
    for (const auto& [ba, ca] : a.branch_component) {
        auto it = w.branch_map.find(ba);
        if (it == w.branch_map.end()) return false;
        if (b.branch_component.at(it->second) != w.component_map.at(ca)) return false;
        const SingularPoint* pa = a.point_of_branch(ba);
        const SingularPoint* pb = b.point_of_branch(it->second);
        if (!pa || !pb || w.point_map.at(pa->id) != pb->id) return false;
    }
    for (const auto& [key, m] : a.mu) {
        if (b.mu_of(w.branch_map.at(key.first), w.branch_map.at(key.second)) != m) return false;
    }
    return true;
}

WeakCombinatorialType weaken(const ClassicalCombinatorialType& k) {
    WeakCombinatorialType w = k.weak;
    w.mu.clear();
    for (const auto& p : w.points) {
        const MultiplicityTree& t = k.point_trees.at(p.id);
        for (size_t i = 0; i < p.branches.size(); ++i)
            for (size_t j = i + 1; j < p.branches.size(); ++j) {
                const auto &b1 = p.branches[i], &b2 = p.branches[j];
                if (w.branch_component.at(b1) == w.branch_component.at(b2)) continue;
                w.mu[branch_pair_key(b1, b2)] = branch_pairing(t, b1, b2);
            }
    }
    return w;
}

} // namespace logres
