#include "corpus.hpp"

#include "logres/matrix.hpp"

#include <map>

namespace logres::testing {

// CW model of the curve: one vertex and 2g loop edges plus one 2-cell per
// component (attached along the commutator word), one vertex per singular
// point, one joining edge per branch. Boundary ranks computed exactly.
long long simplicial_h1(const WeakCombinatorialType& w) {
    const FieldPtr Q = NumberField::rationals();
    std::map<std::string, int> vid;
    int nv = 0;
    for (const auto& c : w.components) vid["c:" + c.id] = nv++;
    for (const auto& p : w.points) vid["p:" + p.id] = nv++;

    struct Edge {
        int from, to;
    };
    std::vector<Edge> edges;
    std::map<std::string, std::vector<int>> surface_loops; // component -> its 2g loop edges
    for (const auto& c : w.components) {
        auto& loops = surface_loops[c.id];
        for (long long k = 0; k < 2 * c.genus; ++k) {
            loops.push_back(static_cast<int>(edges.size()));
            edges.push_back({vid["c:" + c.id], vid["c:" + c.id]});
        }
    }
    for (const auto& p : w.points)
        for (const auto& b : p.branches)
            edges.push_back({vid["c:" + w.branch_component.at(b)], vid["p:" + p.id]});

    // boundary 1: edges -> vertices
    Matrix d1(Q, nv, edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        d1.at(edges[e].to, e) += NFElem::one(Q);
        d1.at(edges[e].from, e) -= NFElem::one(Q);
    }

    // boundary 2: one face per component, attached along prod [a_i, b_i]
    Matrix d2(Q, edges.size(), w.components.size());
    for (size_t ci = 0; ci < w.components.size(); ++ci) {
        const auto& loops = surface_loops[w.components[ci].id];
        for (size_t g2 = 0; g2 + 1 < loops.size() || (loops.empty() && false); g2 += 2) {
            // word ... a b a^-1 b^-1 ...
            d2.at(loops[g2], ci) += NFElem::one(Q);
            d2.at(loops[g2 + 1], ci) += NFElem::one(Q);
            d2.at(loops[g2], ci) -= NFElem::one(Q);
            d2.at(loops[g2 + 1], ci) -= NFElem::one(Q);
        }
    }

    long long rank1 = static_cast<long long>(d1.rank());
    long long rank2 = static_cast<long long>(d2.rank());
    long long cycles = static_cast<long long>(edges.size()) - rank1;
    return cycles - rank2;
}

} // namespace logres::testing
