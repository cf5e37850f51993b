#pragma once

#include "logres/poly.hpp"

#include <vector>

namespace logres {

// Projective point with coordinates in the field, normalized so the last
// nonzero coordinate is 1.
struct ProjPoint {
    NFElem x, y, z;

    static ProjPoint normalized(NFElem X, NFElem Y, NFElem Z);
    bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const ProjPoint& o) const;
    std::string str() const;
    // chart with the last nonzero coordinate: 2 (z=1), 1 (y=1, z=0), 0 (x=1, y=z=0)
    int chart() const;
};

// Common zeros of two coprime homogeneous polynomials; throws
// FieldExtensionError when a coordinate does not lie in the field.
std::vector<ProjPoint> intersection_points(const HPoly& F, const HPoly& G);

// Singular points of a single reduced curve (empty for lines and other smooth
// curves found so).
std::vector<ProjPoint> singular_points_of(const HPoly& F);

bool vanishes_at(const HPoly& F, const ProjPoint& P);

// Local equation of F near P: dehomogenize in P's chart and translate P to the
// origin.
BiPoly local_equation(const HPoly& F, const ProjPoint& P);

// True iff F and G share no component (projective coprimality).
bool coprime(const HPoly& F, const HPoly& G);
bool squarefree(const HPoly& F);

// Parses "[a : b : c]" with field-element entries.
ProjPoint parse_point(const std::string& text, const FieldPtr& field);

} // namespace logres
