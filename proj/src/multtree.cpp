#include "logres/multtree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace logres {

void MultiplicityTree::add_branch_profile(const std::string& branch, std::map<int, int> profile) {
    profiles_[branch] = std::move(profile);
}

std::vector<std::string> MultiplicityTree::branch_ids() const {
    std::vector<std::string> out;
    for (const auto& [b, p] : profiles_) out.push_back(b);
    return out;
}

int MultiplicityTree::profile_at(const std::string& branch, int vertex) const {
    auto it = profiles_.find(branch);
    if (it == profiles_.end()) throw std::runtime_error("unknown branch: " + branch);
    auto jt = it->second.find(vertex);
    return jt == it->second.end() ? 0 : jt->second;
}

int MultiplicityTree::arrow_vertex(const std::string& branch) const {
    auto it = profiles_.find(branch);
    if (it == profiles_.end()) throw std::runtime_error("unknown branch: " + branch);
    int best = -1, depth = -1;
    for (const auto& [v, m] : it->second) {
        if (m <= 0) continue;
        int d = static_cast<int>(path_to_root(v).size());
        if (d > depth) { depth = d; best = v; }
    }
    if (best < 0) throw std::runtime_error("branch has empty profile: " + branch);
    return best;
}

std::vector<int> MultiplicityTree::path_to_root(int vertex) const {
    std::vector<int> path;
    for (int v = vertex; v >= 0; v = v_.at(v).parent) path.push_back(v);
    return path;
}

std::vector<long long> MultiplicityTree::hat_weights(const std::vector<int>& w) const {
    std::vector<long long> hw(v_.size(), 0);
    for (size_t i = 0; i < v_.size(); ++i) {
        long long s = 0;
        for (int q : path_to_root(static_cast<int>(i))) s += w.at(q);
        hw[i] = s;
    }
    return hw;
}

std::vector<int> MultiplicityTree::weight_vector() const {
    std::vector<int> w(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) w[i] = v_[i].weight;
    return w;
}

std::string MultiplicityTree::vertex_name(int i) const {
    if (i == 0) return "P";
    std::vector<int> idx;
    int v = i;
    while (v != 0) {
        int p = v_.at(v).parent;
        const auto& ch = v_.at(p).children;
        int pos = static_cast<int>(std::find(ch.begin(), ch.end(), v) - ch.begin());
        idx.push_back(pos + 1);
        v = p;
    }
    std::string name = "P";
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) name += "." + std::to_string(*it);
    return name;
}

std::string MultiplicityTree::encode(int v, const std::function<std::string(int)>* label) const {
    std::vector<std::string> kids;
    for (int c : v_.at(v).children) kids.push_back(encode(c, label));
    std::sort(kids.begin(), kids.end());
    std::ostringstream os;
    os << "(" << v_.at(v).weight;
    if (label) os << "|" << (*label)(v);
    for (const auto& k : kids) os << k;
    os << ")";
    return os.str();
}

std::string MultiplicityTree::canonical_encoding(const std::function<std::string(int)>* label) const {
    if (v_.empty()) return "()";
    return encode(0, label);
}

std::vector<int> MultiplicityTree::canonicalize() {
    // sort children by encoding, then relabel DFS
    for (auto& vert : v_) {
        std::stable_sort(vert.children.begin(), vert.children.end(), [&](int a, int b) {
            return encode(a, nullptr) < encode(b, nullptr);
        });
    }
    std::vector<int> old_to_new(v_.size(), -1);
    std::vector<Vertex> nv;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        int id = static_cast<int>(nv.size());
        old_to_new[v] = id;
        nv.push_back({parent, {}, v_[v].weight});
        nv[id].children.assign(v_[v].children.size(), -1);
        int slot = 0;
        for (int c : v_[v].children) {
            int cid = static_cast<int>(nv.size());
            nv[id].children[slot++] = cid;
            dfs(c, id);
        }
    };
    if (!v_.empty()) dfs(0, -1);
    std::map<std::string, std::map<int, int>> np;
    for (const auto& [b, prof] : profiles_) {
        std::map<int, int> q;
        for (const auto& [v, m] : prof) q[old_to_new[v]] = m;
        np[b] = std::move(q);
    }
    v_ = std::move(nv);
    profiles_ = std::move(np);
    return old_to_new;
}

std::string MultiplicityTree::ascii() const {
    std::ostringstream os;
    std::function<void(int, int)> rec = [&](int v, int depth) {
        for (int i = 0; i < depth; ++i) os << "  ";
        os << vertex_name(v) << "  w=" << v_.at(v).weight;
        std::vector<std::string> arrows;
        for (const auto& [b, prof] : profiles_) {
            auto it = prof.find(v);
            if (it != prof.end() && it->second > 0) arrows.push_back(b + ":" + std::to_string(it->second));
        }
        if (!arrows.empty()) {
            os << "  [";
            for (size_t i = 0; i < arrows.size(); ++i) os << (i ? " " : "") << arrows[i];
            os << "]";
        }
        os << "\n";
        for (int c : v_.at(v).children) rec(c, depth + 1);
    };
    if (!v_.empty()) rec(0, 0);
    return os.str();
}

std::string MultiplicityTree::dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "graph " << graph_name << " {\n  node [shape=circle];\n";
    for (int i = 0; i < size(); ++i)
        os << "  v" << i << " [label=\"" << vertex_name(i) << "\\nw=" << v_[i].weight << "\"];\n";
    for (int i = 0; i < size(); ++i)
        for (int c : v_[i].children) os << "  v" << i << " -- v" << c << ";\n";
    for (const auto& [b, prof] : profiles_) {
        int arrow = -1, depth = -1;
        for (const auto& [v, m] : prof) {
            if (m <= 0) continue;
            int d = static_cast<int>(path_to_root(v).size());
            if (d > depth) { depth = d; arrow = v; }
        }
        if (arrow >= 0) {
            os << "  b_" << b << " [shape=plaintext, label=\"" << b << "\"];\n";
            os << "  v" << arrow << " -- b_" << b << " [style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

WeightAssignment WeightAssignment::zero(const MultiplicityTree& t) {
    return {&t, std::vector<long long>(t.size(), 0)};
}

WeightAssignment WeightAssignment::of_tree(const MultiplicityTree& t) {
    WeightAssignment a{&t, {}};
    a.w.reserve(t.size());
    for (int i = 0; i < t.size(); ++i) a.w.push_back(t.weight(i));
    return a;
}

WeightAssignment WeightAssignment::minus(long long k) const {
    WeightAssignment a{shape, w};
    for (auto& x : a.w) x = std::max<long long>(x - k, 0);
    return a;
}

long long tree_degree(const WeightAssignment& t) {
    long long deg = 0;
    for (long long x : t.w) {
        if (x < 0) throw std::runtime_error("tree_degree: negative weight");
        deg += x * (x + 1) / 2;
    }
    return deg;
}

TreeOrder tree_compare(const WeightAssignment& a, const WeightAssignment& b) {
    if (a.shape != b.shape || !a.shape) throw std::runtime_error("tree_compare: shape mismatch");
    if (a.shape->size() == 0) return TreeOrder::Equal; // empty trees compare equal
    std::vector<int> wa(a.w.begin(), a.w.end()), wb(b.w.begin(), b.w.end());
    auto ha = a.shape->hat_weights(wa), hb = a.shape->hat_weights(wb);
    bool le = true, ge = true, eq = true;
    for (size_t i = 0; i < ha.size(); ++i) {
        if (ha[i] < hb[i]) { ge = false; eq = false; }
        if (ha[i] > hb[i]) { le = false; eq = false; }
    }
    if (eq) return TreeOrder::Equal;
    if (le) return TreeOrder::Less;
    if (ge) return TreeOrder::Greater;
    return TreeOrder::Incomparable;
}

AscDescResult asc_desc_gcd(const MultiplicityTree& t, const std::set<int>& verts) {
    if (verts.empty()) throw std::runtime_error("asc_desc_gcd: empty vertex set");
    AscDescResult res;
    // Q >= P iff P lies on the path from Q to the root. Desc(set) = common
    // path-to-root vertices; Asc(set) = vertices whose root path contains all.
    std::vector<std::set<int>> paths;
    for (int v : verts) {
        auto p = t.path_to_root(v);
        paths.emplace_back(p.begin(), p.end());
    }
    for (int q = 0; q < t.size(); ++q) {
        bool in_all = true;
        for (const auto& p : paths) in_all = in_all && p.count(q);
        if (in_all) res.desc.insert(q);
        auto qp = t.path_to_root(q);
        std::set<int> qset(qp.begin(), qp.end());
        bool above_all = true;
        for (int v : verts) above_all = above_all && qset.count(v);
        if (above_all) res.asc.insert(q);
    }
    // gcd = maximal element of Desc (deepest; Desc is a chain)
    int best = -1, bd = -1;
    for (int q : res.desc) {
        int d = static_cast<int>(t.path_to_root(q).size());
        if (d > bd) { bd = d; best = q; }
    }
    res.gcd_vertex = best;
    return res;
}

long long branch_pairing(const MultiplicityTree& t, const std::string& d1, const std::string& d2) {
    if (d1 == d2) throw std::runtime_error("branch_pairing: branches must differ");
    const auto& profs = t.branch_profiles();
    auto i1 = profs.find(d1), i2 = profs.find(d2);
    if (i1 == profs.end()) throw std::runtime_error("unknown branch: " + d1);
    if (i2 == profs.end()) throw std::runtime_error("unknown branch: " + d2);
    long long s = 0;
    for (const auto& [v, m1] : i1->second) {
        auto it = i2->second.find(v);
        if (it != i2->second.end()) s += static_cast<long long>(m1) * it->second;
    }
    return s;
}

std::set<int> gamma_subtree(const MultiplicityTree& t, const std::string& d1, const std::string& d2) {
    if (d1 == d2) throw std::runtime_error("gamma_subtree: branches must differ");
    int a = t.arrow_vertex(d1), b = t.arrow_vertex(d2);
    auto pa = t.path_to_root(a), pb = t.path_to_root(b);
    std::set<int> sa(pa.begin(), pa.end());
    // walk b's path until it joins a's path, then walk a's path down to the join
    std::set<int> out;
    int join = -1;
    for (int v : pb) {
        out.insert(v);
        if (sa.count(v)) { join = v; break; }
    }
    for (int v : pa) {
        out.insert(v);
        if (v == join) break;
    }
    return out;
}

long long noether_genus(int degree, const std::vector<const MultiplicityTree*>& trees) {
    long long g = static_cast<long long>(degree - 1) * (degree - 2) / 2;
    for (const auto* t : trees) {
        if (!t || t->size() == 0) continue;
        g -= tree_degree(WeightAssignment::of_tree(*t).minus(1));
    }
    if (g < 0)
        throw std::runtime_error("noether_genus: trees inconsistent with an irreducible curve of degree " +
                                 std::to_string(degree));
    return g;
}

} // namespace logres
