#pragma once

// Shared corpus helpers for property-style tests: a seeded random generator of
// valid weak combinatorial types and a brute-force simplicial H_1 oracle.

#include "logres/wct.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace logres::testing {

// Random valid weak combinatorial type: up to `max_comps` components of degree
// <= max_deg. At 2-component points one side always carries a single branch;
// points with >= 3 components may host several branches per component. The
// per-component genus is drawn below the bound left by its nodes.
inline WeakCombinatorialType random_wct(std::mt19937& rng, int max_comps = 5, int max_deg = 4) {
    WeakCombinatorialType w;
    std::uniform_int_distribution<int> ncomp(1, max_comps);
    int r = ncomp(rng);
    std::uniform_int_distribution<int> ddeg(1, max_deg);
    for (int i = 0; i < r; ++i)
        w.components.push_back({"C" + std::to_string(i + 1), ddeg(rng), 0});

    // distribute the pairwise Bezout totals over points. Maintain per-pair
    // remaining budgets; create points consuming budget from one pair (simple
    // crossing/tangency) or, occasionally, from all pairs of a triple.
    std::map<std::pair<int, int>, int> budget;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            budget[{i, j}] = w.components[i].degree * w.components[j].degree;

    int pt = 0, br = 0;
    auto new_branch = [&](const std::string& comp) {
        std::string b = "b" + std::to_string(++br);
        w.branch_component[b] = comp;
        return b;
    };
    auto open_pairs = [&]() {
        std::vector<std::pair<int, int>> out;
        for (const auto& [k, v] : budget)
            if (v > 0) out.push_back(k);
        return out;
    };
    while (true) {
        auto open = open_pairs();
        if (open.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
        auto [i, j] = open[pick(rng)];
        SingularPoint p;
        p.id = "P" + std::to_string(++pt);

        // try a triple point when a third component has budget with both
        std::vector<int> thirds;
        for (int k = 0; k < r; ++k) {
            if (k == i || k == j) continue;
            if (budget.count({std::min(i, k), std::max(i, k)}) &&
                budget.at({std::min(i, k), std::max(i, k)}) > 0 &&
                budget.at({std::min(j, k), std::max(j, k)}) > 0)
                thirds.push_back(k);
        }
        std::uniform_int_distribution<int> coin(0, 3);
        if (!thirds.empty() && coin(rng) == 0) {
            std::uniform_int_distribution<size_t> tp(0, thirds.size() - 1);
            int k = thirds[tp(rng)];
            std::string bi = new_branch(w.components[i].id);
            std::string bj = new_branch(w.components[j].id);
            std::string bk = new_branch(w.components[k].id);
            p.branches = {bi, bj, bk};
            auto spend = [&](int a, int b, const std::string& ba, const std::string& bb) {
                int& rem = budget.at({std::min(a, b), std::max(a, b)});
                std::uniform_int_distribution<int> amt(1, rem);
                int m = amt(rng);
                rem -= m;
                w.mu[branch_pair_key(ba, bb)] = m;
            };
            spend(i, j, bi, bj);
            spend(i, k, bi, bk);
            spend(j, k, bj, bk);
        } else {
            // 2-component point: one branch on side i, 1..2 branches on side j
            int& rem = budget.at({i, j});
            std::string bi = new_branch(w.components[i].id);
            p.branches = {bi};
            std::uniform_int_distribution<int> nb(1, rem >= 2 ? 2 : 1);
            int nbj = nb(rng);
            for (int t = 0; t < nbj && rem > 0; ++t) {
                std::string bj = new_branch(w.components[j].id);
                p.branches.push_back(bj);
                std::uniform_int_distribution<int> amt(1, rem);
                int m = (t == nbj - 1) ? std::uniform_int_distribution<int>(1, rem)(rng) : amt(rng);
                rem -= m;
                w.mu[branch_pair_key(bi, bj)] = m;
            }
        }
        w.points.push_back(std::move(p));
    }

    // per-component singular germs consume delta; a same-point multi-branch
    // side of n branches is at least worth C(n,2) nodes. Draw genus within the
    // remaining bound.
    for (int i = 0; i < r; ++i) {
        long long delta_min = 0;
        for (const auto& p : w.points) {
            long long n = 0;
            for (const auto& b : p.branches)
                if (w.branch_component.at(b) == w.components[i].id) ++n;
            delta_min += n * (n - 1) / 2;
        }
        long long gmax = static_cast<long long>(w.components[i].degree - 1) *
                             (w.components[i].degree - 2) / 2 -
                         delta_min;
        if (gmax < 0) gmax = 0; // should not happen with single-branch sides
        std::uniform_int_distribution<long long> dg(0, gmax);
        w.components[i].genus = dg(rng);
    }
    return w;
}

// Rank of H_1 of the curve as a simplicial complex: each component is a
// triangulated closed orientable surface of its genus, glued to point vertices
// along its branches. Computed from honest boundary-matrix ranks over Q.
long long simplicial_h1(const WeakCombinatorialType& w);

} // namespace logres::testing
