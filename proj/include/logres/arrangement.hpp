#pragma once

#include "logres/derive.hpp"
#include "logres/wct.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace logres {

// Parsed arrangement description file. Exactly one of the equation list or the
// explicit combinatorial data is present.
struct ArrangementFile {
    FieldPtr field = NumberField::rationals();
    bool with_line = false;
    std::optional<std::string> line_component;
    bool partial_data = false;

    std::vector<std::pair<std::string, std::string>> equations; // id -> text
    std::map<std::string, std::string> first_infinity;

    std::optional<WeakCombinatorialType> explicit_wct;
    std::map<std::string, MultiplicityTree> trees;

    bool is_equations() const { return !equations.empty(); }
};

ArrangementFile parse_arrangement(std::istream& in);
ArrangementFile parse_arrangement_file(const std::string& path);

// Renders the derived data in the explicit-data grammar (round-trips through
// parse_arrangement).
std::string write_explicit(const DerivedArrangement& D);

// The weak type (plus optional trees) described by a file: derives from
// equations or assembles the explicit data.
struct LoadedArrangement {
    WeakCombinatorialType wct;
    std::map<std::string, MultiplicityTree> trees; // empty if absent
    std::optional<DerivedArrangement> derived;     // present for equations form
};
LoadedArrangement load_arrangement(const ArrangementFile& f);

} // namespace logres
