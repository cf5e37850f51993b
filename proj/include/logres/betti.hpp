#pragma once

#include "logres/wct.hpp"

#include <array>

namespace logres {

// h_1 of the curve: 2*sum of genera plus the first Betti number of the
// bipartite incidence structure (component and point vertices, one edge per
// branch). Throws when the incidence graph is disconnected, naming the parts.
long long curve_first_betti(const WeakCombinatorialType& w);

// (b0, b1, b2) of the complement. In the with-transversal-line convention
// b1 counts the non-line components; purely projective inputs give
// (#components - 1). b2 is curve_first_betti of the full divisor.
std::array<long long, 3> betti_numbers(const WeakCombinatorialType& w);

} // namespace logres
