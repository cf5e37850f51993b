#include "logres/betti.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace logres {

long long curve_first_betti(const WeakCombinatorialType& w) {
    auto rep = validate(w, true);
    if (!rep.hard_valid()) throw std::runtime_error("curve_first_betti: invalid input\n" + rep.text());

    // union-find over component/point vertices
    std::map<std::string, int> id;
    int n = 0;
    for (const auto& c : w.components) id["c:" + c.id] = n++;
    for (const auto& p : w.points) id["p:" + p.id] = n++;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    long long edges = 0;
    for (const auto& p : w.points)
        for (const auto& b : p.branches) {
            ++edges;
            int u = id.at("p:" + p.id);
            int v = id.at("c:" + w.branch_component.at(b));
            parent[find(u)] = find(v);
        }
    std::map<int, std::vector<std::string>> comps;
    for (const auto& [name, i] : id) comps[find(i)].push_back(name);
    if (comps.size() > 1) {
        std::ostringstream os;
        os << "arrangement is disconnected; incidence components:";
        for (const auto& [root, names] : comps) {
            os << " {";
            for (size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
            os << "}";
        }
        throw std::runtime_error(os.str());
    }
    long long b1_graph = edges - n + 1;
    long long genus_sum = 0;
    for (const auto& c : w.components) genus_sum += c.genus;
    return 2 * genus_sum + b1_graph;
}

std::array<long long, 3> betti_numbers(const WeakCombinatorialType& w) {
    // with a transversal line b1 counts the non-line components; purely
    // projective complements drop one class. Both give size - 1 since the
    // line, when present, is itself listed as a component.
    long long b1 = static_cast<long long>(w.components.size()) - 1;
    return {1, b1, curve_first_betti(w)};
}

} // namespace logres
