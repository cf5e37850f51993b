#pragma once

#include "logres/arrangement.hpp"
#include "logres/equivalence.hpp"
#include "logres/identities.hpp"
#include "logres/ring.hpp"

#include <string>

namespace logres {

enum class ReportFormat { Text, Json };

// Deterministic reports; exact rationals and field elements are rendered as
// strings, never floating point.
std::string report_derive(const DerivedArrangement& D, ReportFormat fmt);
std::string report_present(const RingPresentation& p, bool affine, ReportFormat fmt);
std::string report_compare(const std::optional<EquivalenceWitness>& w, bool classical,
                           ReportFormat fmt);
std::string report_verify(const DerivedArrangement& D, const RepresentativeSet& reps,
                          const IdentityReport& identities, const IdentityReport& memberships,
                          ReportFormat fmt);
std::string report_trees(const LoadedArrangement& arr, const std::string& point, ReportFormat fmt);

} // namespace logres
