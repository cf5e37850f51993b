#pragma once

#include "logres/poly.hpp"

#include <string>

namespace logres {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

// Parses a polynomial in x,y,z over the field; operators + - * ^, parentheses,
// rational literals p/q, and the field generator spelled `a`.
// The result must be homogeneous and nonzero.
HPoly parse_homogeneous(const std::string& text, const FieldPtr& field);

// Same grammar, but any polynomial in two local variables (x,y); used for germs.
BiPoly parse_bivariate(const std::string& text, const FieldPtr& field);

// A single field element (no variables).
NFElem parse_field_element(const std::string& text, const FieldPtr& field);

} // namespace logres
