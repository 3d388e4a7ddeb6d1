#ifndef DUVAL_RESOLUTION_HPP
#define DUVAL_RESOLUTION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "newton.hpp"
#include "subdivision.hpp"

namespace duval {

/// Runs a step list on a starting fan. Failures name the offending step.
inline ResolutionFanResult run_construction(const Fan& gamma, const Construction& c) {
    ResolutionFanResult res;
    res.label = c.label;
    res.inserted_rays = c.inserted_rays;
    Fan fan = gamma;
    res.stages.push_back(fan);
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        try {
            fan = apply_step(fan, c.steps[k]);
        } catch (const std::exception& ex) {
            throw SubdivisionError("step " + std::to_string(k) + " (" + to_string(c.steps[k]) + ") failed: " + ex.what());
        }
        res.stages.push_back(fan);
    }
    res.fan = fan;
    res.valid = validate_fan(fan).valid();
    res.regular = is_regular_fan(fan);
    res.refines_dual_fan = refines(fan, gamma);
    res.boundary_weight_rays = boundary_weight_rays(gamma, c.inserted_rays);
    return res;
}

/// One result per construction of the catalog entry (two for E8: the
/// minimal fan and the full weight-vector fan).
inline std::vector<ResolutionFanResult> build_resolution_fan(const CatalogEntry& e) {
    const Fan gamma = dual_fan(e.equation);
    std::vector<ResolutionFanResult> out;
    for (const auto& c : e.constructions) {
        out.push_back(run_construction(gamma, c));
    }
    return out;
}

inline std::vector<ResolutionFanResult> build_resolution_fan(const SingularityId& id, const CatalogOptions& opt = {}) {
    return build_resolution_fan(entry(id, opt));
}

} // namespace duval

#endif
