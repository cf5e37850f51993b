#pragma once

#include "logres/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logres {

// Rooted weighted tree of infinitely near points. Vertices are indexed 0..n-1
// with the root at index 0; children are kept in canonical order (sorted by
// subtree encoding) so that serialization is deterministic.
//
// Branch profiles store nu_Q(delta) per vertex along the branch's path; the
// branch's deepest vertex with a positive entry is its arrow vertex (a leaf).
class MultiplicityTree {
  public:
    struct Vertex {
        int parent = -1;
        std::vector<int> children;
        int weight = 0;
    };

    MultiplicityTree() = default;
    explicit MultiplicityTree(std::vector<Vertex> verts) : v_(std::move(verts)) {}

    int size() const { return static_cast<int>(v_.size()); }
    const Vertex& vertex(int i) const { return v_.at(i); }
    const std::vector<Vertex>& vertices() const { return v_; }
    int weight(int i) const { return v_.at(i).weight; }

    void add_branch_profile(const std::string& branch, std::map<int, int> profile);
    const std::map<std::string, std::map<int, int>>& branch_profiles() const { return profiles_; }
    std::vector<std::string> branch_ids() const;
    int profile_at(const std::string& branch, int vertex) const;
    int arrow_vertex(const std::string& branch) const;

    // Path from vertex up to the root, inclusive.
    std::vector<int> path_to_root(int vertex) const;
    // sum of weights on the path root..Q ("multiplicity of the total transform").
    std::vector<long long> hat_weights(const std::vector<int>& w) const;
    std::vector<int> weight_vector() const;

    // Deterministic vertex names: root "P", then dotted child indices.
    std::string vertex_name(int i) const;
    // Canonical shape+weight encoding; equal strings <=> isomorphic weighted trees.
    // `label` may add per-vertex data (e.g. branch decorations) into the encoding.
    std::string canonical_encoding(
        const std::function<std::string(int)>* label = nullptr) const;

    // Re-orders children canonically (by encoding); relabels vertices in DFS
    // order. Returns the permutation old->new.
    std::vector<int> canonicalize();

    std::string ascii() const;
    std::string dot(const std::string& graph_name = "tree") const;

  private:
    std::string encode(int v, const std::function<std::string(int)>* label) const;
    std::vector<Vertex> v_;
    std::map<std::string, std::map<int, int>> profiles_;
};

// Integer weights on the shape of a fixed MultiplicityTree.
struct WeightAssignment {
    const MultiplicityTree* shape = nullptr;
    std::vector<long long> w;

    static WeightAssignment zero(const MultiplicityTree& t);
    static WeightAssignment of_tree(const MultiplicityTree& t);
    // max(w - k, 0) per vertex ("T - k"); of_tree(t).minus(1) is the normalized tree.
    WeightAssignment minus(long long k) const;
};

// deg(T) = sum over vertices of C(w+1, 2); throws on negative weights.
long long tree_degree(const WeightAssignment& t);

enum class TreeOrder { Equal, Less, LessEq, Greater, GreaterEq, Incomparable };

// Compares via hat-weights (path sums); both assignments must share the shape.
TreeOrder tree_compare(const WeightAssignment& a, const WeightAssignment& b);

struct AscDescResult {
    std::set<int> asc;
    std::set<int> desc;
    int gcd_vertex = -1; // greatest common descendant (deepest common ancestor)
};
AscDescResult asc_desc_gcd(const MultiplicityTree& t, const std::set<int>& verts);

// Noether pairing sum_Q nu_Q(d1) nu_Q(d2); throws on unknown branches or d1==d2.
long long branch_pairing(const MultiplicityTree& t, const std::string& d1, const std::string& d2);

// Minimal connected subtree containing both branch arrow vertices.
std::set<int> gamma_subtree(const MultiplicityTree& t, const std::string& d1, const std::string& d2);

// (d-1)(d-2)/2 - sum_P deg(T_P - 1); throws if negative.
long long noether_genus(int degree, const std::vector<const MultiplicityTree*>& trees);

} // namespace logres
