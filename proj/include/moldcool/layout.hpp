#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "moldcool/errors.hpp"

namespace moldcool {

// Cooling-circuit layouts, dimensional design rules, and coolant hydraulics.
//
// Rule limits are deliberately data, not code: each machining process
// (drilling, laser sintering, inserted bars) has its own envelope, and those
// envelopes evolve.  A rule constrains the values a field selector picks out
// of the layout; evaluation uses only the extrema of the selected values, so
// the outcome is independent of the order channels are listed in.

enum class LayoutKind { straight_drilled, conformal, hybrid_full_bars, hybrid_dashed_bars };

inline const char* to_string(LayoutKind k) {
    switch (k) {
        case LayoutKind::straight_drilled: return "straight_drilled";
        case LayoutKind::conformal: return "conformal";
        case LayoutKind::hybrid_full_bars: return "hybrid_full_bars";
        case LayoutKind::hybrid_dashed_bars: return "hybrid_dashed_bars";
    }
    return "straight_drilled";
}

inline LayoutKind layout_kind_from_string(const std::string& s) {
    if (s == "straight_drilled") return LayoutKind::straight_drilled;
    if (s == "conformal") return LayoutKind::conformal;
    if (s == "hybrid_full_bars") return LayoutKind::hybrid_full_bars;
    if (s == "hybrid_dashed_bars") return LayoutKind::hybrid_dashed_bars;
    throw ValidationError("layout: unknown kind '" + s + "'");
}

inline bool is_hybrid(LayoutKind k) {
    return k == LayoutKind::hybrid_full_bars || k == LayoutKind::hybrid_dashed_bars;
}

// Dimensions of one cooling circuit.  Insert fields describe conductive
// bars and apply to hybrid layouts only.  All lengths in meters.
struct CoolingLayout {
    std::string name;
    LayoutKind kind = LayoutKind::straight_drilled;
    std::vector<double> channel_diameters;               // one entry per distinct bore
    double dist_channel_to_cavity = 0.0;                 // closest channel-to-cavity distance
    std::optional<double> dist_channel_to_ejection;      // closest channel-to-ejector distance
    std::optional<std::vector<double>> insert_diameters;
    std::optional<double> dist_insert_to_cavity;
    std::optional<double> dist_insert_to_channel;
};

inline void validate(const CoolingLayout& l) {
    const std::string record = "layout '" + l.name + "'";
    if (l.channel_diameters.empty()) {
        throw ValidationError(record + ": field 'channel_diameters' must not be empty");
    }
    for (double d : l.channel_diameters) {
        if (!(d > 0.0)) throw ValidationError(record + ": channel diameters must be > 0");
    }
    if (!(l.dist_channel_to_cavity > 0.0)) {
        throw ValidationError(record + ": field 'dist_channel_to_cavity' must be > 0");
    }
    if (l.dist_channel_to_ejection && !(*l.dist_channel_to_ejection > 0.0)) {
        throw ValidationError(record + ": field 'dist_channel_to_ejection' must be > 0");
    }
    const bool has_insert_fields = l.insert_diameters.has_value() ||
                                   l.dist_insert_to_cavity.has_value() ||
                                   l.dist_insert_to_channel.has_value();
    if (is_hybrid(l.kind)) {
        if (!l.insert_diameters || l.insert_diameters->empty()) {
            throw ValidationError(record + ": hybrid layouts require non-empty 'insert_diameters'");
        }
        for (double d : *l.insert_diameters) {
            if (!(d > 0.0)) throw ValidationError(record + ": insert diameters must be > 0");
        }
        if (!l.dist_insert_to_cavity || !(*l.dist_insert_to_cavity > 0.0)) {
            throw ValidationError(record + ": hybrid layouts require 'dist_insert_to_cavity' > 0");
        }
        if (!l.dist_insert_to_channel || !(*l.dist_insert_to_channel > 0.0)) {
            throw ValidationError(record + ": hybrid layouts require 'dist_insert_to_channel' > 0");
        }
    } else if (has_insert_fields) {
        throw ValidationError(record + ": insert fields are only meaningful for hybrid layouts");
    }
}

// One dimensional design rule.  `field` selects layout values; limits are
// inclusive.  min_factor_of_max_channel_diameter expresses limits of the
// form "at least N times the largest channel bore".
struct LayoutRule {
    std::string id;
    std::string field;  // channel_diameters | insert_diameters | dist_channel_to_cavity |
                        // dist_channel_to_ejection | dist_insert_to_cavity |
                        // dist_insert_to_channel | clearances
    std::optional<double> min_m;
    std::optional<double> max_m;
    std::optional<double> min_factor_of_max_channel_diameter;
    std::string message;
};

inline void validate(const LayoutRule& r) {
    const std::string record = "rule '" + r.id + "'";
    if (r.id.empty()) throw ValidationError("layout rule: field 'id' must be non-empty");
    if (!r.min_m && !r.max_m && !r.min_factor_of_max_channel_diameter) {
        throw ValidationError(record + ": at least one limit must be set");
    }
    if (r.min_m && !(*r.min_m > 0.0)) throw ValidationError(record + ": field 'min_m' must be > 0");
    if (r.max_m && !(*r.max_m > 0.0)) throw ValidationError(record + ": field 'max_m' must be > 0");
    if (r.min_factor_of_max_channel_diameter && !(*r.min_factor_of_max_channel_diameter > 0.0)) {
        throw ValidationError(record + ": field 'min_factor_of_max_channel_diameter' must be > 0");
    }
    if (r.min_m && r.max_m && *r.min_m > *r.max_m) {
        throw ValidationError(record + ": min_m must not exceed max_m");
    }
}

struct RuleViolation {
    std::string rule_id;
    std::string field;
    double measured = 0.0;  // offending extremum [m]
    double limit = 0.0;     // effective inclusive limit [m]
    std::string message;
};

struct RuleReport {
    bool passed = true;
    std::vector<RuleViolation> violations;
};

namespace detail {

inline std::vector<double> select_rule_values(const CoolingLayout& l, const std::string& field) {
    auto optional_values = [](const std::optional<double>& v) {
        return v ? std::vector<double>{*v} : std::vector<double>{};
    };
    if (field == "channel_diameters") return l.channel_diameters;
    if (field == "insert_diameters") {
        return l.insert_diameters ? *l.insert_diameters : std::vector<double>{};
    }
    if (field == "dist_channel_to_cavity") return {l.dist_channel_to_cavity};
    if (field == "dist_channel_to_ejection") return optional_values(l.dist_channel_to_ejection);
    if (field == "dist_insert_to_cavity") return optional_values(l.dist_insert_to_cavity);
    if (field == "dist_insert_to_channel") return optional_values(l.dist_insert_to_channel);
    if (field == "clearances") {
        std::vector<double> values{l.dist_channel_to_cavity};
        if (l.dist_channel_to_ejection) values.push_back(*l.dist_channel_to_ejection);
        return values;
    }
    throw ValidationError("layout rule: unknown field selector '" + field + "'");
}

}  // namespace detail

// Evaluates every rule against the layout.  Violations are findings, not
// errors; rules whose selector picks no values on this layout are skipped.
inline RuleReport check_layout(const CoolingLayout& layout, const std::vector<LayoutRule>& rules) {
    validate(layout);
    RuleReport report;
    for (const LayoutRule& rule : rules) {
        validate(rule);
        const std::vector<double> values = detail::select_rule_values(layout, rule.field);
        if (values.empty()) continue;
        const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());

        double min_limit = 0.0;
        bool has_min = false;
        if (rule.min_m) {
            min_limit = *rule.min_m;
            has_min = true;
        }
        if (rule.min_factor_of_max_channel_diameter) {
            const double max_bore =
                *std::max_element(layout.channel_diameters.begin(), layout.channel_diameters.end());
            min_limit = std::max(min_limit, *rule.min_factor_of_max_channel_diameter * max_bore);
            has_min = true;
        }
        if (has_min && *lo_it < min_limit) {
            report.violations.push_back({rule.id, rule.field, *lo_it, min_limit, rule.message});
        }
        if (rule.max_m && *hi_it > *rule.max_m) {
            report.violations.push_back({rule.id, rule.field, *hi_it, *rule.max_m, rule.message});
        }
    }
    report.passed = report.violations.empty();
    return report;
}

// ---- coolant hydraulics ----

// Coolant description for Reynolds-number sizing.  The default viscosity is
// the unique value that makes the bundled flow-rate/diameter operating points
// mutually consistent at their common Reynolds target; it is a derived model
// constant, not a measured water property.
struct CoolantSpec {
    double kinematic_viscosity = 4.527e-7;  // [m^2/s]
    double temperature_c = 75.0;            // [C], informational
};

inline void validate(const CoolantSpec& c) {
    if (!(c.kinematic_viscosity > 0.0)) {
        throw ValidationError("CoolantSpec: field 'kinematic_viscosity' must be > 0");
    }
}

// Fully-turbulent threshold used by the design rules (strict inequality).
inline constexpr double turbulent_reynolds_threshold = 1.5e4;

// Reynolds number of flow Q through a circular duct of diameter D:
// Re = 4 Q / (pi D nu).
inline double reynolds(double flow_rate_m3s, double diameter_m, const CoolantSpec& coolant = {}) {
    validate(coolant);
    if (!(diameter_m > 0.0)) throw ValidationError("reynolds: diameter must be > 0");
    if (flow_rate_m3s < 0.0) throw ValidationError("reynolds: flow rate must be >= 0");
    return 4.0 * flow_rate_m3s / (std::numbers::pi * diameter_m * coolant.kinematic_viscosity);
}

// Flow rate that produces a target Reynolds number in a circular duct;
// exact inverse of reynolds().
inline double flow_rate_for_reynolds(double reynolds_target, double diameter_m,
                                     const CoolantSpec& coolant = {}) {
    validate(coolant);
    if (!(diameter_m > 0.0)) throw ValidationError("flow_rate_for_reynolds: diameter must be > 0");
    if (!(reynolds_target > 0.0)) {
        throw ValidationError("flow_rate_for_reynolds: target Reynolds number must be > 0");
    }
    return reynolds_target * std::numbers::pi * diameter_m * coolant.kinematic_viscosity / 4.0;
}

enum class TurbulenceClass { laminar_or_transitional, turbulent_ok };

inline const char* to_string(TurbulenceClass t) {
    return t == TurbulenceClass::turbulent_ok ? "turbulent_ok" : "laminar_or_transitional";
}

// turbulent_ok only strictly above the threshold; the boundary itself is
// not accepted.
inline TurbulenceClass turbulence_class(double reynolds_number) {
    if (reynolds_number < 0.0) {
        throw ValidationError("turbulence_class: Reynolds number must be >= 0");
    }
    return reynolds_number > turbulent_reynolds_threshold ? TurbulenceClass::turbulent_ok
                                                          : TurbulenceClass::laminar_or_transitional;
}

}  // namespace moldcool
