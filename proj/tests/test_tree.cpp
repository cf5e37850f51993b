#include "doctest.h"

#include "logres/multtree.hpp"

using namespace logres;

namespace {

// hand-built node tree: root(2) with two leaves(1)
MultiplicityTree node_tree() {
    std::vector<MultiplicityTree::Vertex> v(3);
    v[0] = {-1, {1, 2}, 2};
    v[1] = {0, {}, 1};
    v[2] = {0, {}, 1};
    MultiplicityTree t{std::move(v)};
    t.add_branch_profile("b1", {{0, 1}, {1, 1}});
    t.add_branch_profile("b2", {{0, 1}, {2, 1}});
    return t;
}

} // namespace

TEST_CASE("degree of weighted trees") {
    MultiplicityTree t = node_tree();
    CHECK(tree_degree(WeightAssignment::of_tree(t)) == 5);          // 3+1+1
    CHECK(tree_degree(WeightAssignment::of_tree(t).minus(1)) == 1); // 1+0+0
    CHECK(tree_degree(WeightAssignment::zero(t)) == 0);
    WeightAssignment bad{&t, {1, -1, 0}};
    CHECK_THROWS(tree_degree(bad));
}

TEST_CASE("normalized tree weights") {
    MultiplicityTree t = node_tree();
    auto tn = WeightAssignment::of_tree(t).minus(1);
    CHECK(tn.w == std::vector<long long>({1, 0, 0}));
    auto t2 = WeightAssignment::of_tree(t).minus(2);
    CHECK(t2.w == std::vector<long long>({0, 0, 0}));
}

TEST_CASE("hat weights and comparison") {
    MultiplicityTree t = node_tree();
    auto hw = t.hat_weights(t.weight_vector());
    CHECK(hw == std::vector<long long>({2, 3, 3}));
    auto a = WeightAssignment::of_tree(t);
    auto b = WeightAssignment::zero(t);
    CHECK(tree_compare(a, b) == TreeOrder::Greater);
    CHECK(tree_compare(b, a) == TreeOrder::Less);
    // incomparable: weight moved between incomparable vertices
    WeightAssignment c{&t, {0, 1, 0}}, d{&t, {0, 0, 1}};
    CHECK(tree_compare(c, d) == TreeOrder::Incomparable);
    // empty trees compare equal
    MultiplicityTree e;
    WeightAssignment ea{&e, {}}, eb{&e, {}};
    CHECK(tree_compare(ea, eb) == TreeOrder::Equal);
}

TEST_CASE("noether genus formula") {
    std::vector<const MultiplicityTree*> none;
    CHECK(noether_genus(3, none) == 1); // smooth cubic
    MultiplicityTree nd = node_tree();
    std::vector<const MultiplicityTree*> one = {&nd};
    CHECK(noether_genus(3, one) == 0); // nodal cubic
    CHECK_THROWS(noether_genus(2, one)); // conic cannot carry a node
}

TEST_CASE("gamma subtree of the node is the whole tree") {
    MultiplicityTree t = node_tree();
    auto g = gamma_subtree(t, "b1", "b2");
    CHECK(g == std::set<int>({0, 1, 2}));
}

TEST_CASE("serialization is deterministic") {
    MultiplicityTree t = node_tree();
    CHECK(t.vertex_name(0) == "P");
    auto a1 = t.ascii();
    auto a2 = t.ascii();
    CHECK(a1 == a2);
    CHECK(t.dot().find("graph tree") == 0);
}

TEST_CASE("hat-weight comparison is a partial order on a fixed shape") {
    MultiplicityTree t = node_tree();
    std::vector<WeightAssignment> ws;
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 1; ++b)
            for (long long c = 0; c <= 1; ++c) ws.push_back({&t, {a, b, c}});
    auto leq = [&](const WeightAssignment& x, const WeightAssignment& y) {
        auto r = tree_compare(x, y);
        return r == TreeOrder::Less || r == TreeOrder::LessEq || r == TreeOrder::Equal;
    };
    for (const auto& x : ws)
        for (const auto& y : ws) {
            // antisymmetry
            if (leq(x, y) && leq(y, x)) CHECK(tree_compare(x, y) == TreeOrder::Equal);
            for (const auto& z : ws)
                if (leq(x, y) && leq(y, z)) CHECK(leq(x, z)); // transitivity
        }
}
