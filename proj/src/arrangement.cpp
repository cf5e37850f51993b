#include "logres/arrangement.hpp"

#include "logres/parser.hpp"

#include <fstream>
#include <sstream>

namespace logres {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string join_from(const std::vector<std::string>& ts, size_t k) {
    std::string out;
    for (size_t i = k; i < ts.size(); ++i) {
        if (i > k) out += " ";
        out += ts[i];
    }
    return out;
}

} // namespace

ArrangementFile parse_arrangement(std::istream& in) {
    ArrangementFile f;
    std::string raw;
    int lineno = 0;
    bool field_seen = false;
    WeakCombinatorialType wct;
    bool any_explicit = false;
    std::map<std::string, std::vector<MultiplicityTree::Vertex>> tree_verts;
    std::map<std::string, std::map<std::string, int>> tree_vertex_names;
    std::map<std::string, std::map<std::string, std::map<int, int>>> tree_profiles;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        auto ts = tokens(raw);
        if (ts.empty()) continue;
        const std::string& kw = ts[0];

        if (kw == "field") {
            if (field_seen) fail("duplicate field declaration");
            field_seen = true;
            std::string spec = join_from(ts, 1);
            if (spec == "rational" || spec == "rationals" || spec == "Q") {
                f.field = NumberField::rationals();
            } else {
                // minimal polynomial in `a`, e.g. "a^2 + a + 1"
                std::string as_x = spec;
                for (auto& ch : as_x)
                    if (ch == 'a') ch = 'x';
                BiPoly p = parse_bivariate(as_x, NumberField::rationals());
                if (p.degree_y() > 0) fail("minimal polynomial must use only the generator a");
                std::vector<Rational> mp;
                for (int i = 0; i <= p.degree_x(); ++i) mp.push_back(p.coeff(i, 0).rational_value());
                f.field = NumberField::make(std::move(mp));
            }
        } else if (kw == "convention") {
            if (ts.size() != 2) fail("convention needs one of projective|with-line");
            if (ts[1] == "projective") f.with_line = false;
            else if (ts[1] == "with-line") f.with_line = true;
            else fail("unknown convention " + ts[1]);
        } else if (kw == "partial") {
            f.partial_data = true;
        } else if (kw == "line") {
            if (ts.size() != 2) fail("line needs a component id");
            f.line_component = ts[1];
        } else if (kw == "curve") {
            if (ts.size() < 4 || ts[2] != "=") fail("expected: curve <id> = <polynomial>");
            f.equations.emplace_back(ts[1], join_from(ts, 3));
        } else if (kw == "first") {
            if (ts.size() < 4 || ts[2] != "=") fail("expected: first <component> = <point>");
            f.first_infinity[ts[1]] = join_from(ts, 3);
        } else if (kw == "component") {
            if (ts.size() != 6 || ts[2] != "degree" || ts[4] != "genus")
                fail("expected: component <id> degree <d> genus <g>");
            wct.components.push_back({ts[1], std::stoi(ts[3]), std::stol(ts[5])});
            any_explicit = true;
        } else if (kw == "point") {
            if (ts.size() < 3 || ts[2] != "branches")
                fail("expected: point <id> branches <b>@<comp> ...");
            SingularPoint sp;
            sp.id = ts[1];
            for (size_t i = 3; i < ts.size(); ++i) {
                auto at = ts[i].find('@');
                if (at == std::string::npos) fail("branch needs the form <id>@<component>");
                std::string b = ts[i].substr(0, at), c = ts[i].substr(at + 1);
                sp.branches.push_back(b);
                wct.branch_component[b] = c;
            }
            wct.points.push_back(std::move(sp));
            any_explicit = true;
        } else if (kw == "mu") {
            if (ts.size() != 6 || ts[4] != "=") fail("expected: mu <point> <b1> <b2> = <value>");
            wct.mu[branch_pair_key(ts[2], ts[3])] = std::stoll(ts[5]);
            any_explicit = true;
        } else if (kw == "tree") {
            // tree <point> vertex <name> weight <w> parent <name|->
            // tree <point> profile <branch> <vname>=<nu> ...
            if (ts.size() < 3) fail("malformed tree line");
            const std::string& pid = ts[1];
            if (ts[2] == "vertex") {
                if (ts.size() != 8 || ts[4] != "weight" || ts[6] != "parent")
                    fail("expected: tree <point> vertex <name> weight <w> parent <name|->");
                auto& verts = tree_verts[pid];
                auto& names = tree_vertex_names[pid];
                int id = static_cast<int>(verts.size());
                names[ts[3]] = id;
                int parent = -1;
                if (ts[7] != "-") {
                    auto it = names.find(ts[7]);
                    if (it == names.end()) fail("unknown parent vertex " + ts[7]);
                    parent = it->second;
                }
                verts.push_back({parent, {}, std::stoi(ts[5])});
                if (parent >= 0) verts[parent].children.push_back(id);
            } else if (ts[2] == "profile") {
                if (ts.size() < 5) fail("expected: tree <point> profile <branch> <v>=<nu> ...");
                auto& names = tree_vertex_names[pid];
                std::map<int, int> prof;
                for (size_t i = 4; i < ts.size(); ++i) {
                    auto eq = ts[i].find('=');
                    if (eq == std::string::npos) fail("profile entries look like <vertex>=<nu>");
                    auto it = names.find(ts[i].substr(0, eq));
                    if (it == names.end()) fail("unknown vertex in profile");
                    prof[it->second] = std::stoi(ts[i].substr(eq + 1));
                }
                tree_profiles[pid][ts[3]] = std::move(prof);
            } else {
                fail("tree lines are 'vertex' or 'profile'");
            }
            any_explicit = true;
        } else {
            fail("unknown keyword " + kw);
        }
    }

    if (any_explicit && !f.equations.empty())
        throw std::runtime_error("arrangement file mixes equations and explicit data");
    if (!any_explicit && f.equations.empty())
        throw std::runtime_error("arrangement file has neither equations nor explicit data");
    if (any_explicit) {
        if (f.with_line) {
            if (!f.line_component) throw std::runtime_error("with-line convention needs a 'line' entry");
            wct.has_transversal_line = true;
            wct.line_component = *f.line_component;
            for (const auto& [c, p] : f.first_infinity) wct.first_infinity[c] = p;
        }
        for (auto& [pid, verts] : tree_verts) {
            MultiplicityTree t{std::move(verts)};
            for (auto& [b, prof] : tree_profiles[pid]) t.add_branch_profile(b, std::move(prof));
            f.trees[pid] = std::move(t);
        }
        f.explicit_wct = std::move(wct);
    }
    return f;
}

ArrangementFile parse_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_arrangement(in);
}

std::string write_explicit(const DerivedArrangement& D) {
    std::ostringstream os;
    const auto& w = D.wct();
    const FieldPtr& K = D.field();
    if (K->is_rational()) {
        os << "field rational\n";
    } else {
        os << "field";
        const auto& mp = K->min_poly();
        bool first = true;
        std::ostringstream fs;
        for (int i = static_cast<int>(mp.size()) - 1; i >= 0; --i) {
            if (mp[i] == 0) continue;
            if (!first) fs << (mp[i] > 0 ? " + " : " - ");
            else if (mp[i] < 0) fs << "-";
            Rational ab = mp[i] < 0 ? Rational(-mp[i]) : mp[i];
            if (i == 0 || ab != 1) fs << to_string(ab) << (i > 0 ? "*" : "");
            if (i >= 1) fs << "a";
            if (i >= 2) fs << "^" << i;
            first = false;
        }
        os << " " << fs.str() << "\n";
    }
    os << "convention " << (w.has_transversal_line ? "with-line" : "projective") << "\n";
    if (w.has_transversal_line) os << "line " << w.line_component << "\n";
    for (const auto& c : w.components)
        os << "component " << c.id << " degree " << c.degree << " genus " << c.genus << "\n";
    for (const auto& [c, p] : w.first_infinity) os << "first " << c << " = " << p << "\n";
    for (const auto& p : w.points) {
        os << "point " << p.id << " branches";
        for (const auto& b : p.branches) os << " " << b << "@" << w.branch_component.at(b);
        os << "\n";
    }
    for (const auto& [key, m] : w.mu)
        os << "mu " << w.point_of_branch(key.first)->id << " " << key.first << " " << key.second
           << " = " << m << "\n";
    // trees
    auto classical = D.classical();
    for (size_t pi = 0; pi < D.point_coords().size(); ++pi) {
        const auto& pid = D.wct().points[pi].id;
        const MultiplicityTree& t = classical.point_trees.at(pid);
        for (int v = 0; v < t.size(); ++v)
            os << "tree " << pid << " vertex " << t.vertex_name(v) << " weight " << t.weight(v)
               << " parent " << (v == 0 ? std::string("-") : t.vertex_name(t.vertex(v).parent))
               << "\n";
        for (const auto& [b, prof] : t.branch_profiles()) {
            os << "tree " << pid << " profile " << b;
            for (const auto& [v, nu] : prof) os << " " << t.vertex_name(v) << "=" << nu;
            os << "\n";
        }
    }
    return os.str();
}

LoadedArrangement load_arrangement(const ArrangementFile& f) {
    LoadedArrangement out;
    if (f.is_equations()) {
        std::vector<InputCurve> curves;
        for (const auto& [id, text] : f.equations) curves.push_back({id, parse_homogeneous(text, f.field)});
        std::optional<std::string> line;
        if (f.with_line) {
            if (!f.line_component)
                throw std::runtime_error("with-line convention needs a 'line' entry");
            line = f.line_component;
        }
        out.derived = derive_wct(std::move(curves), f.field, line, f.first_infinity);
        out.wct = out.derived->wct();
        auto classical = out.derived->classical();
        out.trees = std::move(classical.point_trees);
    } else {
        out.wct = *f.explicit_wct;
        out.trees = f.trees;
    }
    return out;
}

} // namespace logres
