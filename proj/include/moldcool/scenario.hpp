#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "moldcool/json_util.hpp"
#include "moldcool/material_library.hpp"
#include "moldcool/materials.hpp"
#include "moldcool/pvt.hpp"

namespace moldcool {

// A scenario file describes one molding setup: part geometry, process
// conditions, and optional warpage inputs plus published reference values to
// reconcile against.  Field names carry their unit: temperatures in C,
// pressures in MPa, lengths in meters, times in seconds.

struct ProcessConditions {
    double fill_time_s = 0.0;
    double packing_time_s = 0.0;
    double vp_switch_pct = 0.0;        // velocity/pressure switchover, % of filled volume
    double melt_temperature_c = 0.0;
    double mold_temperature_c = 0.0;
    double eject_temperature_c = 0.0;
    double coolant_temperature_c = 0.0;
    double max_injection_pressure_mpa = 0.0;
    double packing_pressure_mpa = 0.0;
};

// Inputs for the warpage model.  Either explicit shrinkage fractions or two
// packing states; when both are absent, callers fall back to the default
// packing states derived from the material record (freeze temperature at
// packing pressure vs. fully vented).
struct WarpageInputs {
    double half_span_m = 0.0;
    std::optional<double> s_edge;
    std::optional<double> s_center;
    std::optional<PvtState> edge_state;
    std::optional<PvtState> center_state;
};

// Published figures for the same setup, carried so results can be reconciled
// against them (value matching is the case-study driver's job).
struct PublishedReference {
    std::optional<double> analytical_cooling_time_s;
    std::optional<double> analytical_total_warpage_mm;
    std::optional<double> reconciliation_thickness_m;
    std::optional<std::string> notes;
};

struct Scenario {
    std::string name;
    std::string material_ref;  // thermoplastic name, resolved against the library
    PartGeometry geometry;
    ProcessConditions process;
    std::optional<std::string> layout_ref;  // layout file, relative to the scenario file
    std::optional<WarpageInputs> warpage_inputs;
    std::optional<PublishedReference> published_reference;
};

inline void validate(const ProcessConditions& p) {
    const std::string record = "process conditions";
    detail::require_positive(p.fill_time_s, record, "fill_time_s");
    detail::require_positive(p.packing_time_s, record, "packing_time_s");
    if (!(p.vp_switch_pct > 0.0 && p.vp_switch_pct <= 100.0)) {
        throw ValidationError(record + ": field 'vp_switch_pct' must lie in (0, 100]");
    }
    detail::require_positive(p.max_injection_pressure_mpa, record, "max_injection_pressure_mpa");
    detail::require_positive(p.packing_pressure_mpa, record, "packing_pressure_mpa");
    if (p.packing_pressure_mpa > p.max_injection_pressure_mpa) {
        throw ValidationError(record +
                              ": field 'packing_pressure_mpa' must not exceed the machine's "
                              "max_injection_pressure_mpa");
    }
    if (!(p.mold_temperature_c < p.eject_temperature_c &&
          p.eject_temperature_c < p.melt_temperature_c)) {
        throw ValidationError(record + ": temperatures must satisfy mold_temperature_c < "
                                       "eject_temperature_c < melt_temperature_c");
    }
}

inline void validate(const WarpageInputs& w) {
    const std::string record = "warpage inputs";
    detail::require_positive(w.half_span_m, record, "half_span_m");
    const bool has_s = w.s_edge.has_value() || w.s_center.has_value();
    const bool has_states = w.edge_state.has_value() || w.center_state.has_value();
    if (has_s && has_states) {
        throw ValidationError(record + ": give either shrinkage fractions or packing states, not both");
    }
    if (w.s_edge.has_value() != w.s_center.has_value()) {
        throw ValidationError(record + ": fields 's_edge' and 's_center' must be given together");
    }
    if (w.edge_state.has_value() != w.center_state.has_value()) {
        throw ValidationError(record + ": fields 'edge_state' and 'center_state' must be given together");
    }
}

namespace detail {

inline PartGeometry parse_geometry(const json& j, const std::string& context) {
    PartGeometry g;
    g.max_thickness = require_number(j, context, "max_thickness_m");
    g.avg_thickness = require_number(j, context, "avg_thickness_m");
    g.width = require_number(j, context, "width_m");
    g.length = require_number(j, context, "length_m");
    g.height = require_number(j, context, "height_m");
    validate(g);
    return g;
}

inline ProcessConditions parse_process(const json& j, const std::string& context) {
    ProcessConditions p;
    p.fill_time_s = require_number(j, context, "fill_time_s");
    p.packing_time_s = require_number(j, context, "packing_time_s");
    p.vp_switch_pct = require_number(j, context, "vp_switch_pct");
    p.melt_temperature_c = require_number(j, context, "melt_temperature_c");
    p.mold_temperature_c = require_number(j, context, "mold_temperature_c");
    p.eject_temperature_c = require_number(j, context, "eject_temperature_c");
    p.coolant_temperature_c = require_number(j, context, "coolant_temperature_c");
    p.max_injection_pressure_mpa = require_number(j, context, "max_injection_pressure_mpa");
    p.packing_pressure_mpa = require_number(j, context, "packing_pressure_mpa");
    validate(p);
    return p;
}

inline PvtState parse_state(const json& j, const std::string& context) {
    PvtState s;
    s.temperature_k = kelvin(require_number(j, context, "temperature_c"));
    s.pressure_pa = require_number(j, context, "pressure_mpa") * 1e6;
    validate(s);
    return s;
}

inline WarpageInputs parse_warpage_inputs(const json& j, const std::string& context) {
    WarpageInputs w;
    w.half_span_m = require_number(j, context, "half_span_m");
    w.s_edge = optional_number(j, context, "s_edge");
    w.s_center = optional_number(j, context, "s_center");
    if (const auto it = j.find("edge_state"); it != j.end() && !it->is_null()) {
        w.edge_state = parse_state(*it, context + ": edge_state");
    }
    if (const auto it = j.find("center_state"); it != j.end() && !it->is_null()) {
        w.center_state = parse_state(*it, context + ": center_state");
    }
    validate(w);
    return w;
}

inline PublishedReference parse_published_reference(const json& j, const std::string& context) {
    PublishedReference r;
    r.analytical_cooling_time_s = optional_number(j, context, "analytical_cooling_time_s");
    r.analytical_total_warpage_mm = optional_number(j, context, "analytical_total_warpage_mm");
    r.reconciliation_thickness_m = optional_number(j, context, "reconciliation_thickness_m");
    r.notes = optional_string(j, context, "notes");
    return r;
}

}  // namespace detail

inline Scenario scenario_from_json(const json& j, const MaterialLibrary& library,
                                   const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": top level must be an object");
    Scenario s;
    s.name = detail::require_string(j, file_context, "name");
    const std::string context = file_context + ": scenario '" + s.name + "'";
    s.material_ref = detail::require_string(j, context, "material_ref");
    if (library.find_thermoplastic(s.material_ref) == nullptr) {
        throw ValidationError(context + ": material_ref '" + s.material_ref +
                              "' not found in the material library");
    }
    s.geometry = detail::parse_geometry(detail::require_object(j, context, "geometry"),
                                        context + ": geometry");
    s.process = detail::parse_process(detail::require_object(j, context, "process"),
                                      context + ": process");
    s.layout_ref = detail::optional_string(j, context, "layout_ref");
    if (const auto it = j.find("warpage_inputs"); it != j.end() && !it->is_null()) {
        s.warpage_inputs = detail::parse_warpage_inputs(*it, context + ": warpage_inputs");
    }
    if (const auto it = j.find("published_reference"); it != j.end() && !it->is_null()) {
        s.published_reference =
            detail::parse_published_reference(*it, context + ": published_reference");
    }
    return s;
}

inline Scenario load_scenario(const std::filesystem::path& path, const MaterialLibrary& library) {
    return scenario_from_json(detail::parse_json_file(path), library, path.filename().string());
}

// Default packing states when a scenario gives no explicit warpage inputs:
// material frozen at the no-flow temperature, edge region still under packing
// pressure, center region fully vented.
inline PvtState default_edge_state(const ThermoplasticMaterial& m, const ProcessConditions& p) {
    return {kelvin(m.t_freeze), p.packing_pressure_mpa * 1e6};
}

inline PvtState default_center_state(const ThermoplasticMaterial& m) {
    return {kelvin(m.t_freeze), 0.0};
}

}  // namespace moldcool
