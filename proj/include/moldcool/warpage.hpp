#pragma once

#include <cmath>

#include "moldcool/errors.hpp"
#include "moldcool/materials.hpp"
#include "moldcool/pvt.hpp"

namespace moldcool {

// Differential-shrinkage warpage of a slender part.
//
// A span of half-length W whose outer contour and center shrink by different
// linear fractions bows out of plane: the chord shortens by (1 - dS) with
// dS = |s_edge - s_center| while the arc keeps its length, so
//
//   deflection = sqrt( W^2 - [W * (1 - dS)]^2 ) = W * sqrt( dS * (2 - dS) )
//
// The product form is used throughout: at the dS ~ 1e-4 scale this model is
// applied to, the naive difference of squares cancels away half the
// significant digits.  For small dS the deflection approaches W*sqrt(2*dS).

struct WarpageCase {
    double half_span = 0.0;  // W [m], part center to outer contour, > 0
    double s_edge = 0.0;     // linear shrinkage along the outer contour, in [0, 1)
    double s_center = 0.0;   // linear shrinkage of the central region, in [0, 1)
};

inline void validate(const WarpageCase& c) {
    if (!(c.half_span > 0.0)) throw ValidationError("WarpageCase: field 'half_span' must be > 0");
    if (!(c.s_edge >= 0.0 && c.s_edge < 1.0)) {
        throw ValidationError("WarpageCase: field 's_edge' must lie in [0, 1)");
    }
    if (!(c.s_center >= 0.0 && c.s_center < 1.0)) {
        throw ValidationError("WarpageCase: field 's_center' must lie in [0, 1)");
    }
}

enum class ShrinkageDominance { uniform, edge_dominant, center_dominant };

inline const char* to_string(ShrinkageDominance d) {
    switch (d) {
        case ShrinkageDominance::uniform: return "uniform";
        case ShrinkageDominance::edge_dominant: return "edge_dominant";
        case ShrinkageDominance::center_dominant: return "center_dominant";
    }
    return "uniform";
}

struct DeflectionResult {
    double deflection = 0.0;  // [m], in [0, W]; 0 exactly for uniform shrinkage
    ShrinkageDominance dominance = ShrinkageDominance::uniform;
};

// Out-of-plane deflection of the warped span.
inline DeflectionResult deflection(const WarpageCase& c) {
    validate(c);
    const double ds = std::abs(c.s_edge - c.s_center);
    if (ds > 1.0) {
        throw ValidationError("deflection: |s_edge - s_center| must not exceed 1");
    }
    DeflectionResult r;
    r.deflection = c.half_span * std::sqrt(ds * (2.0 - ds));
    if (c.s_edge > c.s_center) {
        r.dominance = ShrinkageDominance::edge_dominant;
    } else if (c.s_edge < c.s_center) {
        r.dominance = ShrinkageDominance::center_dominant;
    }
    return r;
}

// Warpage driven by two packing/cooling states: the differential shrinkage is
// taken from the equation of state rather than supplied directly.
struct StateWarpageResult {
    DeflectionResult result;
    ShrinkageResult edge;
    ShrinkageResult center;
};

inline StateWarpageResult deflection_from_states(const ThermoplasticMaterial& m, double half_span,
                                                 const PvtState& edge_state,
                                                 const PvtState& center_state) {
    StateWarpageResult r;
    r.edge = shrinkage(m, edge_state);
    r.center = shrinkage(m, center_state);
    r.result = deflection(WarpageCase{half_span, r.edge.s_linear, r.center.s_linear});
    return r;
}

}  // namespace moldcool
