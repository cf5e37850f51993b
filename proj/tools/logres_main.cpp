#include "logres/arrangement.hpp"
#include "logres/betti.hpp"
#include "logres/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace logres;

namespace {

// exit codes: 0 success, 1 validation failure, 2 field extension required,
// 3 internal verification failure (theorem-contradiction signal)
constexpr int kOk = 0, kValidation = 1, kFieldExt = 2, kInternal = 3;

ReportFormat parse_format(const std::string& f) {
    if (f == "json") return ReportFormat::Json;
    return ReportFormat::Text;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        os << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"plane-curve complement cohomology workbench"};
    app.require_subcommand(1);

    std::string input, input_b, out_path, format = "text", point_id, dot_path;
    bool affine = false, weak_mode = false, classical_mode = false;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd, bool two_inputs = false) {
        cmd->add_option("input", input, "arrangement file")->required();
        if (two_inputs) cmd->add_option("input_b", input_b, "second arrangement file")->required();
        cmd->add_option("--format", format, "output format: text|json");
        cmd->add_option("-o,--output", out_path, "write the report to a file");
    };

    auto* cmd_derive = app.add_subcommand("derive", "derive the weak combinatorial type from equations");
    add_common(cmd_derive);

    auto* cmd_present = app.add_subcommand("present", "presentation of the cohomology ring");
    add_common(cmd_present);
    cmd_present->add_flag("--affine", affine, "restrict to the affine complement");

    auto* cmd_compare = app.add_subcommand("compare", "equivalence of two arrangements");
    add_common(cmd_compare, true);
    cmd_compare->add_flag("--weak", weak_mode, "weak combinatorial equivalence (default)");
    cmd_compare->add_flag("--classical", classical_mode, "classical (tree-level) equivalence");

    auto* cmd_verify = app.add_subcommand("verify", "form-level identity verification");
    add_common(cmd_verify);
    cmd_verify->add_option("--seed", seed, "seed for randomized spot checks");

    auto* cmd_trees = app.add_subcommand("trees", "multiplicity tree at a singular point");
    add_common(cmd_trees);
    cmd_trees->add_option("--point", point_id, "point id")->required();
    cmd_trees->add_option("--dot", dot_path, "write DOT output to a file");

    CLI11_PARSE(app, argc, argv);
    ReportFormat fmt = parse_format(format);

    if (cmd_derive->parsed()) {
        auto file = parse_arrangement_file(input);
        if (!file.is_equations()) {
            std::cerr << "derive expects an equations-form file\n";
            return kValidation;
        }
        auto loaded = load_arrangement(file);
        emit(report_derive(*loaded.derived, fmt), out_path);
        return kOk;
    }
    if (cmd_present->parsed()) {
        auto file = parse_arrangement_file(input);
        auto loaded = load_arrangement(file);
        auto rep = validate(loaded.wct, file.partial_data);
        if (!rep.valid()) {
            std::cerr << rep.text();
            return kValidation;
        }
        auto p = RingPresentation::build(loaded.wct);
        emit(report_present(p, affine, fmt), out_path);
        return kOk;
    }
    if (cmd_compare->parsed()) {
        auto fa = parse_arrangement_file(input);
        auto fb = parse_arrangement_file(input_b);
        auto a = load_arrangement(fa);
        auto b = load_arrangement(fb);
        bool classical = classical_mode && !weak_mode;
        std::optional<EquivalenceWitness> w;
        if (classical) {
            if (a.trees.empty() || b.trees.empty()) {
                std::cerr << "classical comparison needs tree data; run derive first\n";
                return kValidation;
            }
            ClassicalCombinatorialType ka{a.wct, a.trees}, kb{b.wct, b.trees};
            w = classical_equivalence(ka, kb);
        } else {
            w = weak_equivalence(a.wct, b.wct);
        }
        emit(report_compare(w, classical, fmt), out_path);
        return kOk;
    }
    if (cmd_verify->parsed()) {
        auto file = parse_arrangement_file(input);
        if (!file.is_equations()) {
            std::cerr << "verify expects an equations-form file\n";
            return kValidation;
        }
        auto loaded = load_arrangement(file);
        auto reps = solve_representatives(*loaded.derived);
        auto identities = verify_representatives(*loaded.derived, reps);
        {
            auto dims = verify_dimensions(*loaded.derived);
            identities.checks.insert(identities.checks.end(), dims.checks.begin(),
                                     dims.checks.end());
            identities.all_ok = identities.all_ok && dims.all_ok;
        }
        auto memberships = verify_memberships(*loaded.derived, reps);
        bool locus_ok = true;
        if (seed != 0) {
            // randomized residue-locus spot checks over every cross pair point
            const auto& D = *loaded.derived;
            const auto& w = D.wct();
            for (size_t pi = 0; pi < D.point_coords().size(); ++pi) {
                const auto& sp = w.points[pi];
                std::set<std::string> comps_here;
                bool on_line = false;
                for (const auto& b : sp.branches) {
                    const auto& c = w.branch_component.at(b);
                    if (c == w.line_component) on_line = true;
                    else comps_here.insert(c);
                }
                if (on_line || comps_here.size() < 2) continue;
                std::vector<std::string> cc(comps_here.begin(), comps_here.end());
                auto locus = verify_residue_locus(D, cc[0], cc[1], pi, seed);
                identities.checks.insert(identities.checks.end(), locus.checks.begin(),
                                         locus.checks.end());
                locus_ok = locus_ok && locus.all_ok;
            }
        }
        identities.all_ok = identities.all_ok && locus_ok;
        emit(report_verify(*loaded.derived, reps, identities, memberships, fmt), out_path);
        return identities.all_ok && memberships.all_ok ? kOk : kInternal;
    }
    if (cmd_trees->parsed()) {
        auto file = parse_arrangement_file(input);
        auto loaded = load_arrangement(file);
        if (loaded.trees.empty()) {
            std::cerr << "no tree data (explicit file without trees?)\n";
            return kValidation;
        }
        std::string text = report_trees(loaded, point_id, fmt);
        emit(text, out_path);
        if (!dot_path.empty()) {
            auto it = loaded.trees.find(point_id);
            std::ofstream os(dot_path);
            os << it->second.dot("tree_" + point_id);
        }
        return kOk;
    }
    return kValidation;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const FieldExtensionError& e) {
        std::cerr << e.what() << "\n";
        return kFieldExt;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::cerr << msg << "\n";
        if (msg.find("contradicts") != std::string::npos) return kInternal;
        return kValidation;
    }
}
