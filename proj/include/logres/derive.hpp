#pragma once

#include "logres/locate.hpp"
#include "logres/resolve.hpp"
#include "logres/wct.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logres {

struct InputCurve {
    std::string id;
    HPoly equation;
};

// Everything derive_wct computes from equations, keeping the geometric side
// (points, resolutions) alongside the combinatorial output for downstream
// form-level verification.
class DerivedArrangement {
  public:
    const std::vector<InputCurve>& curves() const { return curves_; }
    const FieldPtr& field() const { return field_; }
    const WeakCombinatorialType& wct() const { return wct_; }
    ClassicalCombinatorialType classical() const;
    const std::optional<std::string>& line_id() const { return line_id_; }

    const std::vector<ProjPoint>& point_coords() const { return coords_; }
    const std::string& point_name(size_t i) const { return point_names_.at(i); }
    std::optional<size_t> point_index(const ProjPoint& p) const;
    std::optional<size_t> point_index_by_name(const std::string& name) const;

    const HPoly& equation_of(const std::string& comp_id) const;

    // Resolution of the germ at a point for a subset of components (only those
    // passing through the point are used); cached. An empty subset means all.
    const Resolution& resolution_at(size_t point, const std::set<std::string>& comps = {}) const;
    // The full-germ resolution (all components through the point).
    const Resolution& full_resolution_at(size_t point) const;
    // Global branch id ("<point>:<local branch id>") for a local branch of a
    // full-germ resolution.
    std::string global_branch(size_t point, const std::string& local_branch) const;

    // Points of components on the transversal line, per component, with the
    // designated first point at index 0; only when a line is present.
    const std::map<std::string, std::vector<size_t>>& infinity_points() const { return infinity_; }

    friend DerivedArrangement derive_wct(std::vector<InputCurve> curves, FieldPtr field,
                                         std::optional<std::string> transversal_line,
                                         const std::map<std::string, std::string>& first_infinity);

  private:
    std::vector<InputCurve> curves_;
    FieldPtr field_;
    WeakCombinatorialType wct_;
    std::optional<std::string> line_id_;
    std::vector<ProjPoint> coords_;
    std::vector<std::string> point_names_;
    std::map<std::string, std::vector<size_t>> infinity_;
    struct ResolutionCache {
        std::mutex mutex;
        std::map<std::pair<size_t, std::set<std::string>>, std::shared_ptr<Resolution>> entries;
    };
    std::shared_ptr<ResolutionCache> cache_ = std::make_shared<ResolutionCache>();
};

// Derives the weak combinatorial type (plus trees and resolutions) of the
// arrangement. `transversal_line`, when set, names one of the curves; it must
// meet every other component transversally at smooth points. `first_infinity`
// optionally designates the first point at infinity per component by point
// coordinates rendered as in ProjPoint::str() or by derived point name.
DerivedArrangement derive_wct(std::vector<InputCurve> curves, FieldPtr field,
                              std::optional<std::string> transversal_line = std::nullopt,
                              const std::map<std::string, std::string>& first_infinity = {});

} // namespace logres
