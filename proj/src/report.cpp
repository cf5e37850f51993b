#include "logres/report.hpp"

#include "logres/betti.hpp"
#include "logres/forms.hpp"

#include <json.hpp>

#include <sstream>

namespace logres {

using nlohmann::json;

namespace {

json wct_json(const WeakCombinatorialType& w) {
    json j;
    for (const auto& c : w.components)
        j["components"].push_back({{"id", c.id}, {"degree", c.degree}, {"genus", c.genus}});
    for (const auto& p : w.points) {
        json pj{{"id", p.id}};
        for (const auto& b : p.branches)
            pj["branches"].push_back({{"id", b}, {"component", w.branch_component.at(b)}});
        j["points"].push_back(pj);
    }
    for (const auto& [key, m] : w.mu)
        j["mu"].push_back({{"b1", key.first}, {"b2", key.second}, {"value", m}});
    j["convention"] = w.has_transversal_line ? "with-line" : "projective";
    if (w.has_transversal_line) j["line"] = w.line_component;
    return j;
}

} // namespace

std::string report_derive(const DerivedArrangement& D, ReportFormat fmt) {
    if (fmt == ReportFormat::Text) return write_explicit(D);
    json j = wct_json(D.wct());
    for (size_t i = 0; i < D.point_coords().size(); ++i) {
        j["coordinates"].push_back(
            {{"point", D.wct().points[i].id}, {"at", D.point_coords()[i].str()}});
    }
    auto b = betti_numbers(D.wct());
    j["betti"] = {b[0], b[1], b[2]};
    return j.dump(2) + "\n";
}

std::string report_present(const RingPresentation& p, bool affine, ReportFormat fmt) {
    if (fmt == ReportFormat::Text) {
        std::ostringstream os;
        auto b = betti_numbers(p.wct());
        os << "betti: b0=1 b1=" << p.sigma_components().size() << " b2=" << b[2] << "\n";
        os << export_presentation(p, affine);
        return os.str();
    }
    json j;
    j["sigma"] = json::array();
    for (const auto& c : p.sigma_components()) j["sigma"].push_back(c.id);
    for (size_t i = 0; i < p.gen_count(); ++i) j["deg2_generators"].push_back(p.generator_name(i));
    j["dim_v2"] = p.v2_dimension();
    j["k_dimension"] = p.k_dimension();
    json rel = json::array();
    for (size_t r = 0; r < p.relation_matrix().rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < p.gen_count(); ++c) row.push_back(p.relation_matrix().at(r, c).str());
        rel.push_back(row);
    }
    j["relations"] = rel;
    if (affine) {
        auto aff = affine_restriction(p);
        json om = json::array();
        for (const auto& v : aff.omega) {
            json row = json::array();
            for (const auto& x : v) row.push_back(x.str());
            om.push_back(row);
        }
        j["affine"]["omega"] = om;
        j["affine"]["deg2_dimension"] = aff.psi_basis.size();
        j["affine"]["b2"] = aff.affine_b2;
        json cups = json::array();
        for (size_t a = 0; a < aff.omega.size(); ++a)
            for (size_t b2 = a + 1; b2 < aff.omega.size(); ++b2) {
                auto cls = p.cup(aff.omega[a], aff.omega[b2]);
                auto coords = in_basis(p, aff.psi_basis, cls);
                json cj{{"i", a + 1}, {"j", b2 + 1}};
                if (coords) {
                    json cc = json::array();
                    for (const auto& x : *coords) cc.push_back(x.str());
                    cj["coords"] = cc;
                }
                cups.push_back(cj);
            }
        j["affine"]["cups"] = cups;
    } else {
        json cups = json::array();
        size_t r = p.sigma_components().size();
        for (size_t i = 0; i < r; ++i)
            for (size_t k = i + 1; k < r; ++k) {
                auto cls = p.cup(i, k);
                json cc = json::array();
                for (const auto& x : cls.v) cc.push_back(x.str());
                cups.push_back({{"i", i + 1}, {"j", k + 1}, {"class", cc}});
            }
        j["cups"] = cups;
        // cup-product pencil in canonical V^2 coordinates, for downstream
        // resonance analysis
        json pencil = json::array();
        for (const auto& mi : cup_pencil(p)) {
            json mj = json::array();
            for (const auto& row : mi) {
                json rj = json::array();
                for (const auto& x : row) rj.push_back(x.str());
                mj.push_back(rj);
            }
            pencil.push_back(mj);
        }
        j["pencil"] = pencil;
    }
    return j.dump(2) + "\n";
}

std::string report_compare(const std::optional<EquivalenceWitness>& w, bool classical,
                           ReportFormat fmt) {
    if (fmt == ReportFormat::Text) {
        std::ostringstream os;
        os << (classical ? "classical" : "weak") << " equivalence: "
           << (w ? "equivalent" : "inequivalent") << "\n";
        if (w) {
            os << "components:";
            for (const auto& [a, b] : w->component_map) os << " " << a << "->" << b;
            os << "\npoints:";
            for (const auto& [a, b] : w->point_map) os << " " << a << "->" << b;
            os << "\nbranches:";
            for (const auto& [a, b] : w->branch_map) os << " " << a << "->" << b;
            os << "\n";
        }
        return os.str();
    }
    json j;
    j["mode"] = classical ? "classical" : "weak";
    j["equivalent"] = w.has_value();
    if (w) {
        for (const auto& [a, b] : w->component_map) j["component_map"][a] = b;
        for (const auto& [a, b] : w->point_map) j["point_map"][a] = b;
        for (const auto& [a, b] : w->branch_map) j["branch_map"][a] = b;
    }
    return j.dump(2) + "\n";
}

std::string report_verify(const DerivedArrangement& D, const RepresentativeSet& reps,
                          const IdentityReport& identities, const IdentityReport& memberships,
                          ReportFormat fmt) {
    // recorded residue signs of the pair representatives at the designated
    // first points at infinity (the sign convention is a fixed global divisor
    // ordering, so the table documents the realized signs)
    std::vector<std::string> residue_table;
    if (D.line_id()) {
        const auto& w = D.wct();
        for (const auto& [key, phi] : reps.pairs) {
            if (phi.is_zero()) continue;
            const auto& [pi, b1, b2] = key;
            const auto &ci = w.branch_component.at(b1), &cj = w.branch_component.at(b2);
            TwoForm psi = TwoForm::make(D, phi, {w.line_component, ci, cj});
            NFElem ri = res2_at_node(D, psi, D.infinity_points().at(ci)[0], w.line_component, ci);
            NFElem rj = res2_at_node(D, psi, D.infinity_points().at(cj)[0], w.line_component, cj);
            residue_table.push_back("phi[" + w.points[pi].id + ";" + b1 + "," + b2 +
                                    "]: Res(P^i_1) = " + ri.str() + ", Res(P^j_1) = " + rj.str());
        }
    }
    if (fmt == ReportFormat::Text) {
        std::ostringstream os;
        os << "representatives solved: " << reps.pairs.size() << " pair generators, "
           << reps.infinity.size() << " infinity generators\n";
        os << identities.text();
        os << memberships.text();
        for (const auto& line : residue_table) os << "residues  " << line << "\n";
        os << (identities.all_ok && memberships.all_ok ? "ALL IDENTITIES VERIFIED\n"
                                                       : "VERIFICATION FAILED\n");
        return os.str();
    }
    json j;
    j["residue_table"] = residue_table;
    j["pair_generators"] = reps.pairs.size();
    j["infinity_generators"] = reps.infinity.size();
    auto add = [&](const char* key, const IdentityReport& r) {
        json arr = json::array();
        for (const auto& c : r.checks)
            arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        j[key] = arr;
    };
    add("identities", identities);
    add("memberships", memberships);
    j["ok"] = identities.all_ok && memberships.all_ok;
    return j.dump(2) + "\n";
}

std::string report_trees(const LoadedArrangement& arr, const std::string& point, ReportFormat fmt) {
    auto it = arr.trees.find(point);
    if (it == arr.trees.end()) throw std::runtime_error("unknown point id " + point);
    if (fmt == ReportFormat::Text) {
        std::ostringstream os;
        os << it->second.ascii();
        os << it->second.dot("tree_" + point);
        return os.str();
    }
    json j;
    j["point"] = point;
    j["ascii"] = it->second.ascii();
    j["dot"] = it->second.dot("tree_" + point);
    json verts = json::array();
    for (int v = 0; v < it->second.size(); ++v)
        verts.push_back({{"name", it->second.vertex_name(v)}, {"weight", it->second.weight(v)}});
    j["vertices"] = verts;
    return j.dump(2) + "\n";
}

} // namespace logres
