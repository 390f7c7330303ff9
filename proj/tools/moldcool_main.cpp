// moldcool -- desk-scale cooling-phase toolkit for injection molds.
//
// Subcommands mirror the engineering workflow: equation-of-state tables
// (pvt), slab cooling times (cooling-time), differential-shrinkage warpage
// (warpage), coolant sizing (hydraulics), manufacturability checks
// (check-layout), variant studies (compare), and the bundled end-to-end
// case study (case-study).
//
// Exit codes: 0 success, 1 validation/domain error (the message names the
// offending field and rule), 2 file/format error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moldcool/moldcool.hpp"

namespace {

namespace fs = std::filesystem;
using moldcool::json;

// ---- shared option plumbing ----

struct CommonOptions {
    std::string data_dir;
    std::string format = "text";
    std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--data-dir", opts.data_dir,
                    "Directory with the bundled data files (default: $MOLDCOOL_DATA_DIR, else "
                    "the data/ directory this build was configured with)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the output to this file instead of stdout");
}

fs::path resolve_data_dir(const CommonOptions& opts) {
    if (!opts.data_dir.empty()) return opts.data_dir;
    if (const char* env = std::getenv("MOLDCOOL_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return MOLDCOOL_DEFAULT_DATA_DIR;
}

fs::path resolve_file(const std::string& explicit_path, const fs::path& data_dir,
                      const char* default_name) {
    if (!explicit_path.empty()) return explicit_path;
    return data_dir / default_name;
}

void emit(const CommonOptions& opts, const json& doc, const std::string& text,
          const std::string& csv) {
    std::string payload;
    if (opts.format == "json") {
        payload = doc.dump(2) + "\n";
    } else if (opts.format == "csv") {
        payload = csv;
    } else {
        payload = text;
    }
    if (opts.out_path.empty()) {
        std::cout << payload;
    } else {
        moldcool::detail::write_text_file(opts.out_path, payload);
    }
}

std::string fmt(double v, int precision = 9) {
    std::ostringstream out;
    out << std::setprecision(precision) << v;
    return out.str();
}

std::string fmt_fixed(double v, int decimals) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << v;
    return out.str();
}

const moldcool::ThermoplasticMaterial& find_thermoplastic_or_throw(
    const moldcool::MaterialLibrary& lib, const std::string& name) {
    const auto* mat = lib.find_thermoplastic(name);
    if (mat == nullptr) {
        throw moldcool::ValidationError("material '" + name +
                                        "' not found in the material library");
    }
    return *mat;
}

// ---- pvt ----

struct PvtOptions {
    CommonOptions common;
    std::string materials_path;
    std::string material = "plexiglas_8n";
    double t_min_c = 20.0;
    double t_max_c = -1.0;  // default: the material's melt temperature
    int t_steps = 5;
    double p_min_mpa = 0.0;
    double p_max_mpa = 112.0;
    int p_steps = 3;
};

void run_pvt(const PvtOptions& opts) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    const auto lib =
        moldcool::load_material_library(resolve_file(opts.materials_path, data_dir, "materials.json"));
    const auto& mat = find_thermoplastic_or_throw(lib, opts.material);

    const double t_max = opts.t_max_c < 0.0 ? mat.t_melt : opts.t_max_c;
    if (opts.t_steps < 1) throw moldcool::ValidationError("pvt: --t-steps must be >= 1");
    if (opts.p_steps < 1) throw moldcool::ValidationError("pvt: --p-steps must be >= 1");
    if (t_max < opts.t_min_c) throw moldcool::ValidationError("pvt: --t-max-c must be >= --t-min-c");
    if (opts.p_max_mpa < opts.p_min_mpa) {
        throw moldcool::ValidationError("pvt: --p-max-mpa must be >= --p-min-mpa");
    }
    if (opts.p_min_mpa < 0.0) throw moldcool::ValidationError("pvt: --p-min-mpa must be >= 0");

    auto grid_value = [](double lo, double hi, int steps, int i) {
        return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    };

    const auto ref = moldcool::specific_volume(mat, moldcool::shrinkage_reference_state);

    json doc;
    doc["material"] = mat.name;
    doc["reference_state"] = {{"temperature_c", moldcool::celsius(
                                  moldcool::shrinkage_reference_state.temperature_k)},
                              {"pressure_mpa", 0.0},
                              {"specific_volume_m3_per_kg", ref.value}};
    doc["grid"] = json::array();

    std::ostringstream text;
    text << "material: " << mat.name << "\n";
    text << "reference state: 20 C, 0 MPa -> v = " << fmt(ref.value) << " m^3/kg\n";
    text << std::right << std::setw(10) << "T [C]" << std::setw(10) << "P [MPa]" << std::setw(18)
         << "v [m^3/kg]" << std::setw(14) << "v_ref/v" << std::setw(14) << "s_linear"
         << std::setw(10) << "valid" << "\n";

    std::ostringstream csv;
    csv << "temperature_c,pressure_mpa,specific_volume_m3_per_kg,volumetric_ratio,linear_shrinkage,"
           "within_validity\n";

    for (int it = 0; it < opts.t_steps; ++it) {
        for (int ip = 0; ip < opts.p_steps; ++ip) {
            const double t_c = grid_value(opts.t_min_c, t_max, opts.t_steps, it);
            const double p_mpa = grid_value(opts.p_min_mpa, opts.p_max_mpa, opts.p_steps, ip);
            const moldcool::PvtState state{moldcool::kelvin(t_c), p_mpa * 1e6};
            const auto shrink = moldcool::shrinkage(mat, state);

            json row;
            row["temperature_c"] = t_c;
            row["pressure_mpa"] = p_mpa;
            row["specific_volume_m3_per_kg"] = shrink.v_state;
            row["volumetric_ratio"] = shrink.r_v;
            row["linear_shrinkage"] = shrink.s_linear;
            row["within_validity"] = shrink.within_validity;
            doc["grid"].push_back(row);

            text << std::right << std::setw(10) << fmt(t_c, 6) << std::setw(10) << fmt(p_mpa, 6)
                 << std::setw(18) << fmt(shrink.v_state) << std::setw(14) << fmt(shrink.r_v, 7)
                 << std::setw(14) << fmt(shrink.s_linear, 7) << std::setw(10)
                 << (shrink.within_validity ? "yes" : "NO") << "\n";
            csv << fmt(t_c) << ',' << fmt(p_mpa) << ',' << fmt(shrink.v_state, 17) << ','
                << fmt(shrink.r_v, 17) << ',' << fmt(shrink.s_linear, 17) << ','
                << (shrink.within_validity ? "true" : "false") << "\n";
        }
    }
    emit(opts.common, doc, text.str(), csv.str());
}

// ---- cooling-time ----

struct CoolingTimeOptions {
    CommonOptions common;
    std::string materials_path;
    std::string scenario_path;
    std::string wall = "mold";
    double thickness_m = 0.0;  // 0: use the scenario's max thickness
    int terms = moldcool::SeriesOptions{}.max_terms;
    double tol = moldcool::SeriesOptions{}.rel_tolerance;
    bool fd_check = false;
    int fd_nodes = 201;
    double fd_safety = 0.4;
    int curve_points = 51;
};

moldcool::CoolingProblem scenario_cooling_problem(const moldcool::Scenario& scenario,
                                                  const moldcool::ThermoplasticMaterial& mat,
                                                  const std::string& wall, double thickness_m) {
    moldcool::CoolingProblem p;
    p.thickness = thickness_m > 0.0 ? thickness_m : scenario.geometry.max_thickness;
    p.t_melt = scenario.process.melt_temperature_c;
    p.t_wall = wall == "coolant" ? scenario.process.coolant_temperature_c
                                 : scenario.process.mold_temperature_c;
    p.t_eject = scenario.process.eject_temperature_c;
    p.alpha_p = mat.alpha_p;
    moldcool::validate(p);
    return p;
}

void run_cooling_time(const CoolingTimeOptions& opts) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    const auto lib =
        moldcool::load_material_library(resolve_file(opts.materials_path, data_dir, "materials.json"));
    const auto scenario = moldcool::load_scenario(
        resolve_file(opts.scenario_path, data_dir, "scenario_analytical.json"), lib);
    const auto& mat = find_thermoplastic_or_throw(lib, scenario.material_ref);
    const moldcool::SeriesOptions series{opts.terms, opts.tol};

    const auto problem = scenario_cooling_problem(scenario, mat, opts.wall, opts.thickness_m);

    const auto start = std::chrono::steady_clock::now();
    const double t_cool = moldcool::cooling_time(problem);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto midplane = moldcool::midplane_temperature(problem, t_cool, series);

    json doc;
    doc["scenario"] = scenario.name;
    doc["material"] = mat.name;
    doc["wall_source"] = opts.wall;
    doc["problem"] = {{"thickness_m", problem.thickness},
                      {"t_melt_c", problem.t_melt},
                      {"t_wall_c", problem.t_wall},
                      {"t_eject_c", problem.t_eject},
                      {"alpha_p_m2_per_s", problem.alpha_p}};
    doc["cooling_time_s"] = t_cool;
    doc["cooling_time_runtime_ns"] =
        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
    doc["midplane_at_cooling_time_c"] = midplane.temperature_c;
    doc["series_terms_used"] = midplane.terms_used;

    std::ostringstream text;
    text << "scenario: " << scenario.name << " (material " << mat.name << ")\n";
    text << "slab: L = " << fmt(problem.thickness * 1e3, 6) << " mm, melt " << fmt(problem.t_melt, 6)
         << " C, wall " << fmt(problem.t_wall, 6) << " C (" << opts.wall << "), eject "
         << fmt(problem.t_eject, 6) << " C\n";
    text << "closed-form cooling time: " << fmt(t_cool) << " s\n";
    text << "midplane at that time:    " << fmt(midplane.temperature_c) << " C ("
         << midplane.terms_used << " series terms)\n";

    if (scenario.published_reference && scenario.published_reference->reconciliation_thickness_m &&
        opts.thickness_m <= 0.0) {
        const auto& ref = *scenario.published_reference;
        auto recon_problem = problem;
        recon_problem.thickness = *ref.reconciliation_thickness_m;
        const double t_recon = moldcool::cooling_time(recon_problem);
        json recon;
        recon["reconciliation_thickness_m"] = *ref.reconciliation_thickness_m;
        recon["cooling_time_at_reconciliation_thickness_s"] = t_recon;
        if (ref.analytical_cooling_time_s) {
            recon["published_cooling_time_s"] = *ref.analytical_cooling_time_s;
            const double discrepancy =
                100.0 * (t_cool - *ref.analytical_cooling_time_s) / *ref.analytical_cooling_time_s;
            recon["discrepancy_pct_at_max_thickness"] = discrepancy;
            text << "published reference: " << fmt(*ref.analytical_cooling_time_s, 6)
                 << " s, reproduced at L = " << fmt(*ref.reconciliation_thickness_m * 1e3, 6)
                 << " mm (" << fmt(t_recon, 7) << " s); value at the part's max thickness runs "
                 << fmt_fixed(discrepancy, 1) << "% above it\n";
        }
        if (ref.notes) recon["notes"] = *ref.notes;
        doc["published_reference"] = recon;
    }

    if (opts.fd_check) {
        const double t_fd = moldcool::fd_cooling_oracle(problem, opts.fd_nodes, opts.fd_safety);
        const double deviation_pct = 100.0 * (t_fd - t_cool) / t_cool;
        doc["fd_oracle"] = {{"nodes", opts.fd_nodes},
                            {"safety", opts.fd_safety},
                            {"cooling_time_s", t_fd},
                            {"deviation_from_closed_form_pct", deviation_pct}};
        text << "finite-difference check: " << fmt(t_fd) << " s (" << fmt_fixed(deviation_pct, 3)
             << "% vs closed form, " << opts.fd_nodes << " nodes)\n";
    }

    // The CSV rendering is the midplane cooling curve.
    std::ostringstream csv;
    csv << "time_s,midplane_temperature_c\n";
    if (opts.curve_points < 2) throw moldcool::ValidationError("cooling-time: --curve-points must be >= 2");
    const double t_end = 1.25 * t_cool;
    for (int i = 0; i < opts.curve_points; ++i) {
        const double t = t_end * i / (opts.curve_points - 1);
        const auto sample = moldcool::midplane_temperature(problem, t, series);
        csv << fmt(t, 12) << ',' << fmt(sample.temperature_c, 12) << "\n";
    }

    emit(opts.common, doc, text.str(), csv.str());
}

// ---- warpage ----

struct WarpageOptions {
    CommonOptions common;
    std::string materials_path;
    std::string scenario_path;
    std::string material;
    double half_span_m = 0.0;
    bool s_edge_set = false;
    bool s_center_set = false;
    double s_edge = 0.0;
    double s_center = 0.0;
    double edge_temp_c = 0.0;
    double edge_pressure_mpa = 0.0;
    double center_temp_c = 0.0;
    double center_pressure_mpa = 0.0;
    bool edge_temp_set = false;
    bool center_temp_set = false;
};

json shrinkage_to_json(const moldcool::ShrinkageResult& s) {
    return {{"v_ref_m3_per_kg", s.v_ref},
            {"v_state_m3_per_kg", s.v_state},
            {"volumetric_ratio", s.r_v},
            {"linear_shrinkage", s.s_linear},
            {"within_validity", s.within_validity}};
}

// Resolves a scenario's warpage inputs to a deflection: explicit shrinkage
// pair, explicit packing states, or the default packing states.
moldcool::DeflectionResult scenario_deflection(const moldcool::Scenario& scenario,
                                               const moldcool::ThermoplasticMaterial& mat,
                                               json& detail) {
    if (!scenario.warpage_inputs) {
        // No inputs at all: default packing states from the material record.
        const auto edge = moldcool::default_edge_state(mat, scenario.process);
        const auto center = moldcool::default_center_state(mat);
        const auto r = moldcool::deflection_from_states(
            mat, scenario.geometry.length / 2.0, edge, center);
        detail["mode"] = "default_packing_states";
        detail["half_span_m"] = scenario.geometry.length / 2.0;
        detail["edge"] = shrinkage_to_json(r.edge);
        detail["center"] = shrinkage_to_json(r.center);
        return r.result;
    }
    const auto& w = *scenario.warpage_inputs;
    if (w.s_edge && w.s_center) {
        const moldcool::WarpageCase c{w.half_span_m, *w.s_edge, *w.s_center};
        detail["mode"] = "explicit_shrinkage";
        detail["half_span_m"] = w.half_span_m;
        detail["s_edge"] = *w.s_edge;
        detail["s_center"] = *w.s_center;
        return moldcool::deflection(c);
    }
    const auto edge = w.edge_state ? *w.edge_state : moldcool::default_edge_state(mat, scenario.process);
    const auto center = w.center_state ? *w.center_state : moldcool::default_center_state(mat);
    const auto r = moldcool::deflection_from_states(mat, w.half_span_m, edge, center);
    detail["mode"] = w.edge_state ? "explicit_packing_states" : "default_packing_states";
    detail["half_span_m"] = w.half_span_m;
    detail["edge"] = shrinkage_to_json(r.edge);
    detail["center"] = shrinkage_to_json(r.center);
    return r.result;
}

void run_warpage(const WarpageOptions& opts) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    json doc;
    json detail;
    moldcool::DeflectionResult result;

    if (!opts.scenario_path.empty()) {
        const auto lib = moldcool::load_material_library(
            resolve_file(opts.materials_path, data_dir, "materials.json"));
        const auto scenario = moldcool::load_scenario(opts.scenario_path, lib);
        const auto& mat = find_thermoplastic_or_throw(lib, scenario.material_ref);
        result = scenario_deflection(scenario, mat, detail);
        doc["scenario"] = scenario.name;
        doc["material"] = mat.name;
    } else if (opts.s_edge_set || opts.s_center_set) {
        if (!(opts.s_edge_set && opts.s_center_set)) {
            throw moldcool::ValidationError("warpage: --s-edge and --s-center must be given together");
        }
        if (!(opts.half_span_m > 0.0)) {
            throw moldcool::ValidationError("warpage: --half-span-m must be > 0");
        }
        const moldcool::WarpageCase c{opts.half_span_m, opts.s_edge, opts.s_center};
        result = moldcool::deflection(c);
        detail["mode"] = "explicit_shrinkage";
        detail["half_span_m"] = opts.half_span_m;
        detail["s_edge"] = opts.s_edge;
        detail["s_center"] = opts.s_center;
    } else if (opts.edge_temp_set || opts.center_temp_set) {
        if (!(opts.edge_temp_set && opts.center_temp_set)) {
            throw moldcool::ValidationError(
                "warpage: --edge-temp-c and --center-temp-c must be given together");
        }
        if (!(opts.half_span_m > 0.0)) {
            throw moldcool::ValidationError("warpage: --half-span-m must be > 0");
        }
        if (opts.material.empty()) {
            throw moldcool::ValidationError("warpage: packing-state mode requires --material");
        }
        const auto lib = moldcool::load_material_library(
            resolve_file(opts.materials_path, data_dir, "materials.json"));
        const auto& mat = find_thermoplastic_or_throw(lib, opts.material);
        const moldcool::PvtState edge{moldcool::kelvin(opts.edge_temp_c),
                                      opts.edge_pressure_mpa * 1e6};
        const moldcool::PvtState center{moldcool::kelvin(opts.center_temp_c),
                                        opts.center_pressure_mpa * 1e6};
        const auto r = moldcool::deflection_from_states(mat, opts.half_span_m, edge, center);
        result = r.result;
        doc["material"] = mat.name;
        detail["mode"] = "explicit_packing_states";
        detail["half_span_m"] = opts.half_span_m;
        detail["edge"] = shrinkage_to_json(r.edge);
        detail["center"] = shrinkage_to_json(r.center);
    } else {
        throw moldcool::ValidationError(
            "warpage: give --scenario, or --half-span-m with a shrinkage pair or packing states");
    }

    doc["inputs"] = detail;
    doc["deflection_m"] = result.deflection;
    doc["deflection_mm"] = result.deflection * 1e3;
    doc["dominance"] = moldcool::to_string(result.dominance);

    std::ostringstream text;
    text << "deflection: " << fmt(result.deflection * 1e3, 7) << " mm ("
         << moldcool::to_string(result.dominance) << ")\n";

    std::ostringstream csv;
    csv << "deflection_m,deflection_mm,dominance\n";
    csv << fmt(result.deflection, 17) << ',' << fmt(result.deflection * 1e3, 17) << ','
        << moldcool::to_string(result.dominance) << "\n";

    emit(opts.common, doc, text.str(), csv.str());
}

// ---- hydraulics ----

struct HydraulicsOptions {
    CommonOptions common;
    std::vector<double> diameters_m;
    std::vector<double> flow_rates_m3s;
    double reynolds_target = 0.0;
    double nu_m2s = moldcool::CoolantSpec{}.kinematic_viscosity;
    double coolant_temp_c = moldcool::CoolantSpec{}.temperature_c;
};

void run_hydraulics(const HydraulicsOptions& opts) {
    const moldcool::CoolantSpec coolant{opts.nu_m2s, opts.coolant_temp_c};
    if (opts.diameters_m.empty()) {
        throw moldcool::ValidationError("hydraulics: give at least one --diameter-m");
    }

    json doc;
    doc["coolant"] = {{"kinematic_viscosity_m2_per_s", coolant.kinematic_viscosity},
                      {"temperature_c", coolant.temperature_c}};
    doc["turbulent_reynolds_threshold"] = moldcool::turbulent_reynolds_threshold;
    doc["rows"] = json::array();

    std::ostringstream text;
    text << "coolant: nu = " << fmt(coolant.kinematic_viscosity) << " m^2/s at "
         << fmt(coolant.temperature_c, 6) << " C\n";
    text << std::right << std::setw(10) << "D [mm]" << std::setw(14) << "Q [cm^3/s]"
         << std::setw(14) << "Re" << std::setw(26) << "turbulence" << "\n";
    std::ostringstream csv;
    csv << "diameter_m,flow_rate_m3_per_s,reynolds,turbulence\n";

    auto add_row = [&](double d, double q) {
        const double re = moldcool::reynolds(q, d, coolant);
        const auto cls = moldcool::turbulence_class(re);
        json row;
        row["diameter_m"] = d;
        row["flow_rate_m3_per_s"] = q;
        row["flow_rate_cm3_per_s"] = q * 1e6;
        row["reynolds"] = re;
        row["turbulence"] = moldcool::to_string(cls);
        doc["rows"].push_back(row);
        text << std::right << std::setw(10) << fmt(d * 1e3, 6) << std::setw(14) << fmt(q * 1e6, 7)
             << std::setw(14) << fmt(re, 8) << std::setw(26) << moldcool::to_string(cls) << "\n";
        csv << fmt(d, 17) << ',' << fmt(q, 17) << ',' << fmt(re, 17) << ','
            << moldcool::to_string(cls) << "\n";
    };

    if (opts.reynolds_target > 0.0) {
        doc["mode"] = "size_flow_for_reynolds";
        doc["target_reynolds"] = opts.reynolds_target;
        for (double d : opts.diameters_m) {
            add_row(d, moldcool::flow_rate_for_reynolds(opts.reynolds_target, d, coolant));
        }
    } else {
        doc["mode"] = "reynolds_from_flow";
        if (opts.flow_rates_m3s.size() != opts.diameters_m.size()) {
            throw moldcool::ValidationError(
                "hydraulics: give one --flow-rate-m3s per --diameter-m, or use --reynolds");
        }
        for (std::size_t i = 0; i < opts.diameters_m.size(); ++i) {
            add_row(opts.diameters_m[i], opts.flow_rates_m3s[i]);
        }
    }
    emit(opts.common, doc, text.str(), csv.str());
}

// ---- check-layout ----

struct CheckLayoutOptions {
    CommonOptions common;
    std::string layout_path;
    std::string rules_path;
};

const char* default_rules_file(moldcool::LayoutKind kind) {
    switch (kind) {
        case moldcool::LayoutKind::straight_drilled: return "rules_straight.json";
        case moldcool::LayoutKind::conformal: return "rules_conformal.json";
        case moldcool::LayoutKind::hybrid_full_bars:
        case moldcool::LayoutKind::hybrid_dashed_bars: return "rules_hybrid.json";
    }
    return "rules_straight.json";
}

void run_check_layout(const CheckLayoutOptions& opts) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    const auto layout =
        moldcool::load_layout(resolve_file(opts.layout_path, data_dir, "layout_straight.json"));
    const auto rules =
        moldcool::load_rules(resolve_file(opts.rules_path, data_dir, default_rules_file(layout.kind)));
    const auto report = moldcool::check_layout(layout, rules);

    json doc;
    doc["layout"] = moldcool::layout_to_json(layout);
    doc["rules_checked"] = rules.size();
    doc.update(moldcool::rule_report_to_json(report));

    std::ostringstream text;
    text << "layout '" << layout.name << "' (" << moldcool::to_string(layout.kind) << "): "
         << (report.passed ? "PASS" : "FAIL") << " against " << rules.size() << " rules\n";
    for (const auto& v : report.violations) {
        text << "  violation [" << v.rule_id << "] " << v.field << " = " << fmt(v.measured * 1e3, 6)
             << " mm vs limit " << fmt(v.limit * 1e3, 6) << " mm: " << v.message << "\n";
    }

    std::ostringstream csv;
    csv << "rule_id,field,measured_m,limit_m,message\n";
    for (const auto& v : report.violations) {
        csv << v.rule_id << ',' << v.field << ',' << fmt(v.measured, 17) << ',' << fmt(v.limit, 17)
            << ",\"" << v.message << "\"\n";
    }

    emit(opts.common, doc, text.str(), csv.str());
}

// ---- compare ----

struct CompareOptions {
    CommonOptions common;
    std::string fixture_path;
};

void run_compare(const CompareOptions& opts) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    const auto fixtures = moldcool::load_comparison_fixtures(
        resolve_file(opts.fixture_path, data_dir, "comparison_tables.json"));

    json doc;
    doc["tables"] = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "metric,variant_name,value,reduction,improvement_pct,compliance\n";

    bool first = true;
    for (const auto& fixture : fixtures) {
        std::vector<moldcool::MetricSample> variants;
        variants.reserve(fixture.variants.size());
        for (const auto& v : fixture.variants) variants.push_back(v.sample);
        const auto report = moldcool::compare(fixture.baseline.sample, variants);

        doc["tables"].push_back(moldcool::report_to_json(report));
        if (!first) text << "\n";
        first = false;
        text << moldcool::report_to_text(report);

        for (const auto& row : report.rows) {
            csv << moldcool::metric_name(report.metric) << ",\"" << row.variant_name << "\","
                << fmt_fixed(row.value, 3) << ',';
            if (row.is_baseline) {
                csv << ',';
            } else {
                csv << fmt_fixed(row.reduction, 3) << ',' << fmt_fixed(row.improvement_pct, 3);
            }
            csv << ',';
            if (row.compliance.outcome != moldcool::ComplianceOutcome::no_rule) {
                csv << moldcool::to_string(row.compliance.outcome);
            }
            csv << "\n";
        }
    }
    emit(opts.common, doc, text.str(), csv.str());
}

// ---- case-study ----

struct CaseStudyOptions {
    CommonOptions common;
    std::string materials_path;
    std::string scenario_path;
    std::string expected_path;
    bool fd_check = false;
    int fd_nodes = 201;
    double fd_safety = 0.4;
};

struct CheckRecord {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    std::string tolerance_kind;  // "abs" or "rel"
    double tolerance = 0.0;
    bool passed = false;
};

bool check_within(double computed, double expected, const std::string& kind, double tol) {
    if (kind == "rel") return std::abs(computed - expected) <= tol * std::abs(expected);
    return std::abs(computed - expected) <= tol;
}

// Runs every bundled expectation; returns true when all checks pass.
bool run_case_study_checks(const CaseStudyOptions& opts, json& doc, std::ostream& text) {
    const fs::path data_dir = resolve_data_dir(opts.common);
    const fs::path materials_path = resolve_file(opts.materials_path, data_dir, "materials.json");
    const fs::path scenario_path =
        resolve_file(opts.scenario_path, data_dir, "scenario_analytical.json");
    const fs::path expected_path =
        resolve_file(opts.expected_path, data_dir, "case_study_expected.json");

    const auto lib = moldcool::load_material_library(materials_path);
    const auto scenario = moldcool::load_scenario(scenario_path, lib);
    const auto& mat = find_thermoplastic_or_throw(lib, scenario.material_ref);
    const json expected = moldcool::detail::parse_json_file(expected_path);
    const std::string expected_context = expected_path.filename().string();

    std::vector<CheckRecord> checks;

    // -- quantities the scalar checks can ask for --
    const auto problem = scenario_cooling_problem(scenario, mat, "mold", 0.0);

    const auto t0 = std::chrono::steady_clock::now();
    const double t_cool = moldcool::cooling_time(problem);
    const auto closed_form_elapsed = std::chrono::steady_clock::now() - t0;

    double t_recon = 0.0;
    bool have_recon = false;
    if (scenario.published_reference && scenario.published_reference->reconciliation_thickness_m) {
        auto recon_problem = problem;
        recon_problem.thickness = *scenario.published_reference->reconciliation_thickness_m;
        t_recon = moldcool::cooling_time(recon_problem);
        have_recon = true;
    }

    const auto midplane = moldcool::midplane_temperature(problem, t_cool);
    const auto pack_shrinkage =
        moldcool::shrinkage(mat, moldcool::default_edge_state(mat, scenario.process));
    json warpage_detail;
    const auto warpage_result = scenario_deflection(scenario, mat, warpage_detail);

    auto scalar_value = [&](const std::string& name) -> double {
        if (name == "thickness_ratio") return moldcool::thickness_ratio(scenario.geometry);
        if (name == "closed_form_cooling_time_s") return t_cool;
        if (name == "closed_form_cooling_time_at_reconciliation_thickness_s") {
            if (!have_recon) {
                throw moldcool::ValidationError(
                    expected_context +
                    ": check 'closed_form_cooling_time_at_reconciliation_thickness_s' needs the "
                    "scenario's published_reference.reconciliation_thickness_m");
            }
            return t_recon;
        }
        if (name == "midplane_temperature_at_cooling_time_c") return midplane.temperature_c;
        if (name == "pack_state_linear_shrinkage") return pack_shrinkage.s_linear;
        if (name == "analytical_deflection_mm") return warpage_result.deflection * 1e3;
        throw moldcool::ValidationError(expected_context + ": unknown scalar check '" + name + "'");
    };

    for (const json& c :
         moldcool::detail::require_array(expected, expected_context, "scalar_checks")) {
        CheckRecord rec;
        rec.name = moldcool::detail::require_string(c, expected_context, "name");
        rec.expected = moldcool::detail::require_number(c, expected_context + ": check '" + rec.name + "'",
                                                        "expected");
        const auto abs_tol = moldcool::detail::optional_number(c, expected_context, "abs_tol");
        const auto rel_tol = moldcool::detail::optional_number(c, expected_context, "rel_tol");
        if (abs_tol.has_value() == rel_tol.has_value()) {
            throw moldcool::ValidationError(expected_context + ": check '" + rec.name +
                                            "' must set exactly one of abs_tol / rel_tol");
        }
        rec.tolerance_kind = abs_tol ? "abs" : "rel";
        rec.tolerance = abs_tol ? *abs_tol : *rel_tol;
        rec.computed = scalar_value(rec.name);
        rec.passed = check_within(rec.computed, rec.expected, rec.tolerance_kind, rec.tolerance);
        checks.push_back(rec);
    }

    // -- hydraulics --
    if (expected.contains("hydraulics")) {
        const json& h = expected["hydraulics"];
        const std::string context = expected_context + ": hydraulics";
        const double target = moldcool::detail::require_number(h, context, "target_reynolds");
        const double rel_tol = moldcool::detail::require_number(h, context, "reynolds_rel_tol");
        for (const json& point :
             moldcool::detail::require_array(h, context, "operating_points")) {
            const double q = moldcool::detail::require_number(point, context, "flow_rate_m3_per_s");
            const double d = moldcool::detail::require_number(point, context, "diameter_m");
            const double re = moldcool::reynolds(q, d);
            CheckRecord rec;
            rec.name = "reynolds at D=" + fmt_fixed(d * 1e3, 1) + " mm, Q=" + fmt_fixed(q * 1e6, 1) +
                       " cm^3/s";
            rec.computed = re;
            rec.expected = target;
            rec.tolerance_kind = "rel";
            rec.tolerance = rel_tol;
            rec.passed = check_within(re, target, "rel", rel_tol) &&
                         moldcool::turbulence_class(re) == moldcool::TurbulenceClass::turbulent_ok;
            checks.push_back(rec);
        }
    }

    // -- layout rules --
    if (expected.contains("layout_checks")) {
        for (const json& lc : moldcool::detail::require_array(expected, expected_context,
                                                              "layout_checks")) {
            const std::string context = expected_context + ": layout_checks";
            const std::string layout_file = moldcool::detail::require_string(lc, context, "layout");
            const std::string rules_file = moldcool::detail::require_string(lc, context, "rules");
            const json& expect_field = moldcool::detail::require_field(lc, context, "expect_pass");
            if (!expect_field.is_boolean()) {
                throw moldcool::ValidationError(context + ": field 'expect_pass' must be a boolean");
            }
            const bool expect_pass = expect_field.get<bool>();
            const auto layout = moldcool::load_layout(data_dir / layout_file);
            const auto rules = moldcool::load_rules(data_dir / rules_file);
            const auto report = moldcool::check_layout(layout, rules);
            CheckRecord rec;
            rec.name = layout_file + " vs " + rules_file;
            rec.computed = report.passed ? 1.0 : 0.0;
            rec.expected = expect_pass ? 1.0 : 0.0;
            rec.tolerance_kind = "abs";
            rec.tolerance = 0.0;
            rec.passed = report.passed == expect_pass;
            checks.push_back(rec);
        }
    }

    // -- comparison tables --
    if (expected.contains("comparison_fixture")) {
        const std::string fixture_file =
            moldcool::detail::require_string(expected, expected_context, "comparison_fixture");
        const double abs_tol =
            moldcool::detail::require_number(expected, expected_context, "comparison_abs_tol");
        const auto fixtures = moldcool::load_comparison_fixtures(data_dir / fixture_file);
        for (const auto& fixture : fixtures) {
            std::vector<moldcool::MetricSample> variants;
            for (const auto& v : fixture.variants) variants.push_back(v.sample);
            const auto report = moldcool::compare(fixture.baseline.sample, variants);
            const std::string metric = moldcool::metric_name(fixture.metric);

            for (std::size_t i = 0; i < fixture.variants.size(); ++i) {
                const auto& fv = fixture.variants[i];
                const auto& row = report.rows[i + 1];
                if (fv.printed_reduction && fv.printed_improvement_pct) {
                    CheckRecord red;
                    red.name = metric + " reduction: " + fv.sample.variant_name;
                    red.computed = row.reduction;
                    red.expected = *fv.printed_reduction;
                    red.tolerance_kind = "abs";
                    red.tolerance = abs_tol;
                    red.passed = check_within(red.computed, red.expected, "abs", abs_tol);
                    checks.push_back(red);

                    CheckRecord imp;
                    imp.name = metric + " improvement: " + fv.sample.variant_name;
                    imp.computed = row.improvement_pct;
                    imp.expected = *fv.printed_improvement_pct;
                    imp.tolerance_kind = "abs";
                    imp.tolerance = abs_tol;
                    imp.passed = check_within(imp.computed, imp.expected, "abs", abs_tol);
                    checks.push_back(imp);
                }
            }
            // compliance verdicts, baseline row included
            auto check_compliance = [&](const moldcool::FixtureVariant& fv,
                                        const moldcool::ComparisonRow& row) {
                if (!fv.expected_compliance) return;
                CheckRecord rec;
                rec.name = metric + " compliance: " + fv.sample.variant_name;
                rec.computed = row.compliance.outcome == moldcool::ComplianceOutcome::pass ? 1.0 : 0.0;
                rec.expected = *fv.expected_compliance == moldcool::ComplianceOutcome::pass ? 1.0 : 0.0;
                rec.tolerance_kind = "abs";
                rec.tolerance = 0.0;
                rec.passed = row.compliance.outcome == *fv.expected_compliance;
                checks.push_back(rec);
            };
            check_compliance(fixture.baseline, report.rows[0]);
            for (std::size_t i = 0; i < fixture.variants.size(); ++i) {
                check_compliance(fixture.variants[i], report.rows[i + 1]);
            }
        }
    }

    // -- optional finite-difference cross-check (2% band) --
    if (opts.fd_check) {
        const double t_fd = moldcool::fd_cooling_oracle(problem, opts.fd_nodes, opts.fd_safety);
        CheckRecord rec;
        rec.name = "fd oracle vs closed form";
        rec.computed = t_fd;
        rec.expected = t_cool;
        rec.tolerance_kind = "rel";
        rec.tolerance = 0.02;
        rec.passed = check_within(t_fd, t_cool, "rel", 0.02);
        checks.push_back(rec);
    }

    // -- assemble outputs --
    bool all_passed = true;
    doc["scenario"] = scenario.name;
    doc["material"] = mat.name;
    doc["closed_form_runtime_ns"] =
        std::chrono::duration_cast<std::chrono::nanoseconds>(closed_form_elapsed).count();
    if (have_recon && scenario.published_reference->analytical_cooling_time_s) {
        const double published = *scenario.published_reference->analytical_cooling_time_s;
        json recon;
        recon["published_cooling_time_s"] = published;
        recon["cooling_time_at_max_thickness_s"] = t_cool;
        recon["reconciliation_thickness_m"] =
            *scenario.published_reference->reconciliation_thickness_m;
        recon["cooling_time_at_reconciliation_thickness_s"] = t_recon;
        recon["discrepancy_pct_at_max_thickness"] = 100.0 * (t_cool - published) / published;
        if (scenario.published_reference->notes) {
            recon["notes"] = *scenario.published_reference->notes;
        }
        doc["published_reconciliation"] = recon;
        text << "reconciliation: closed form gives " << fmt(t_cool, 7) << " s at "
             << fmt(problem.thickness * 1e3, 6) << " mm, "
             << fmt_fixed(100.0 * (t_cool - published) / published, 1)
             << "% above the published " << fmt(published, 6) << " s, which is reproduced at "
             << fmt(*scenario.published_reference->reconciliation_thickness_m * 1e3, 6) << " mm ("
             << fmt(t_recon, 7) << " s)\n";
    }

    doc["checks"] = json::array();
    for (const auto& rec : checks) {
        all_passed = all_passed && rec.passed;
        json c;
        c["name"] = rec.name;
        c["computed"] = rec.computed;
        c["expected"] = rec.expected;
        c["tolerance_kind"] = rec.tolerance_kind;
        c["tolerance"] = rec.tolerance;
        c["passed"] = rec.passed;
        doc["checks"].push_back(c);

        text << (rec.passed ? "[PASS] " : "[FAIL] ") << rec.name << ": " << fmt(rec.computed, 10)
             << " (expected " << fmt(rec.expected, 10)
             << (rec.tolerance_kind == "rel"
                     ? " within " + fmt(100.0 * rec.tolerance, 3) + "%"
                     : rec.tolerance > 0.0 ? " within " + fmt(rec.tolerance, 6) : " exactly")
             << ")\n";
    }
    doc["all_passed"] = all_passed;
    text << "case study: " << checks.size() << " checks, "
         << (all_passed ? "all passed" : "FAILURES present") << "\n";
    return all_passed;
}

int run_case_study(const CaseStudyOptions& opts) {
    json doc;
    std::ostringstream text;
    const bool all_passed = run_case_study_checks(opts, doc, text);

    std::ostringstream csv;
    csv << "name,computed,expected,tolerance_kind,tolerance,passed\n";
    for (const json& c : doc["checks"]) {
        csv << '"' << c["name"].get<std::string>() << "\"," << fmt(c["computed"].get<double>(), 17)
            << ',' << fmt(c["expected"].get<double>(), 17) << ','
            << c["tolerance_kind"].get<std::string>() << ',' << fmt(c["tolerance"].get<double>(), 17)
            << ',' << (c["passed"].get<bool>() ? "true" : "false") << "\n";
    }
    emit(opts.common, doc, text.str(), csv.str());
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooling-phase calculations for injection molds: equation-of-state tables, "
                 "slab cooling times, warpage, coolant sizing, layout rules and variant reports."};
    app.require_subcommand(1);
    int exit_code = 0;

    // pvt
    PvtOptions pvt_opts;
    auto* pvt = app.add_subcommand("pvt", "Specific volume and shrinkage over a T/P grid");
    add_common_options(pvt, pvt_opts.common);
    pvt->add_option("--materials", pvt_opts.materials_path, "Material library file");
    pvt->add_option("--material", pvt_opts.material, "Thermoplastic name")->capture_default_str();
    pvt->add_option("--t-min-c", pvt_opts.t_min_c, "Grid start temperature [C]")->capture_default_str();
    pvt->add_option("--t-max-c", pvt_opts.t_max_c, "Grid end temperature [C] (default: melt temperature)");
    pvt->add_option("--t-steps", pvt_opts.t_steps, "Temperature steps")->capture_default_str();
    pvt->add_option("--p-min-mpa", pvt_opts.p_min_mpa, "Grid start pressure [MPa]")->capture_default_str();
    pvt->add_option("--p-max-mpa", pvt_opts.p_max_mpa, "Grid end pressure [MPa]")->capture_default_str();
    pvt->add_option("--p-steps", pvt_opts.p_steps, "Pressure steps")->capture_default_str();
    pvt->callback([&] { run_pvt(pvt_opts); });

    // cooling-time
    CoolingTimeOptions ct_opts;
    auto* ct = app.add_subcommand("cooling-time",
                                  "Closed-form slab cooling time; CSV renders the midplane curve");
    add_common_options(ct, ct_opts.common);
    ct->add_option("--materials", ct_opts.materials_path, "Material library file");
    ct->add_option("--scenario", ct_opts.scenario_path, "Scenario file");
    ct->add_option("--wall", ct_opts.wall, "Wall boundary temperature source")
        ->check(CLI::IsMember({"mold", "coolant"}))
        ->capture_default_str();
    ct->add_option("--thickness-m", ct_opts.thickness_m,
                   "Override the governing thickness [m] (default: scenario max thickness)");
    ct->add_option("--terms", ct_opts.terms, "Series term cap")->capture_default_str();
    ct->add_option("--tol", ct_opts.tol, "Series truncation tolerance")->capture_default_str();
    ct->add_flag("--fd-check", ct_opts.fd_check, "Cross-check with the finite-difference oracle");
    ct->add_option("--fd-nodes", ct_opts.fd_nodes, "Finite-difference nodes (odd)")->capture_default_str();
    ct->add_option("--fd-safety", ct_opts.fd_safety, "Finite-difference time-step safety factor")
        ->capture_default_str();
    ct->add_option("--curve-points", ct_opts.curve_points, "Points on the CSV cooling curve")
        ->capture_default_str();
    ct->callback([&] { run_cooling_time(ct_opts); });

    // warpage
    WarpageOptions w_opts;
    auto* warp = app.add_subcommand("warpage", "Differential-shrinkage deflection");
    add_common_options(warp, w_opts.common);
    warp->add_option("--materials", w_opts.materials_path, "Material library file");
    warp->add_option("--scenario", w_opts.scenario_path, "Scenario file (uses its warpage inputs)");
    warp->add_option("--material", w_opts.material, "Thermoplastic name (packing-state mode)");
    warp->add_option("--half-span-m", w_opts.half_span_m, "Half span W [m]");
    auto* s_edge_opt = warp->add_option("--s-edge", w_opts.s_edge, "Edge linear shrinkage [-]");
    auto* s_center_opt = warp->add_option("--s-center", w_opts.s_center, "Center linear shrinkage [-]");
    auto* edge_t_opt = warp->add_option("--edge-temp-c", w_opts.edge_temp_c, "Edge state temperature [C]");
    warp->add_option("--edge-pressure-mpa", w_opts.edge_pressure_mpa, "Edge state pressure [MPa]");
    auto* center_t_opt =
        warp->add_option("--center-temp-c", w_opts.center_temp_c, "Center state temperature [C]");
    warp->add_option("--center-pressure-mpa", w_opts.center_pressure_mpa, "Center state pressure [MPa]");
    warp->callback([&] {
        w_opts.s_edge_set = s_edge_opt->count() > 0;
        w_opts.s_center_set = s_center_opt->count() > 0;
        w_opts.edge_temp_set = edge_t_opt->count() > 0;
        w_opts.center_temp_set = center_t_opt->count() > 0;
        run_warpage(w_opts);
    });

    // hydraulics
    HydraulicsOptions h_opts;
    auto* hyd = app.add_subcommand("hydraulics", "Coolant Reynolds numbers and flow sizing");
    add_common_options(hyd, h_opts.common);
    hyd->add_option("--diameter-m", h_opts.diameters_m, "Channel diameter [m] (repeatable)");
    hyd->add_option("--flow-rate-m3s", h_opts.flow_rates_m3s,
                    "Volumetric flow rate [m^3/s] (one per diameter)");
    hyd->add_option("--reynolds", h_opts.reynolds_target,
                    "Size the flow rate for this Reynolds number instead");
    hyd->add_option("--nu-m2s", h_opts.nu_m2s, "Coolant kinematic viscosity [m^2/s]")
        ->capture_default_str();
    hyd->add_option("--coolant-temp-c", h_opts.coolant_temp_c, "Coolant temperature [C]")
        ->capture_default_str();
    hyd->callback([&] { run_hydraulics(h_opts); });

    // check-layout
    CheckLayoutOptions cl_opts;
    auto* cl = app.add_subcommand("check-layout", "Dimensional design rules for a cooling layout");
    add_common_options(cl, cl_opts.common);
    cl->add_option("--layout", cl_opts.layout_path, "Layout file");
    cl->add_option("--rules", cl_opts.rules_path, "Rule file (default: bundled set for the layout kind)");
    cl->callback([&] { run_check_layout(cl_opts); });

    // compare
    CompareOptions cmp_opts;
    auto* cmp = app.add_subcommand("compare", "Reduction / improvement tables for mold variants");
    add_common_options(cmp, cmp_opts.common);
    cmp->add_option("--fixture", cmp_opts.fixture_path, "Comparison fixture file");
    cmp->callback([&] { run_compare(cmp_opts); });

    // case-study
    CaseStudyOptions cs_opts;
    auto* cs = app.add_subcommand(
        "case-study", "Run the bundled end-to-end study and verify every expected value");
    add_common_options(cs, cs_opts.common);
    cs->add_option("--materials", cs_opts.materials_path, "Material library file");
    cs->add_option("--scenario", cs_opts.scenario_path, "Scenario file");
    cs->add_option("--expected", cs_opts.expected_path, "Expected-values file");
    cs->add_flag("--fd-check", cs_opts.fd_check, "Also run the finite-difference cross-check");
    cs->add_option("--fd-nodes", cs_opts.fd_nodes, "Finite-difference nodes (odd)")->capture_default_str();
    cs->add_option("--fd-safety", cs_opts.fd_safety, "Finite-difference time-step safety factor")
        ->capture_default_str();
    cs->callback([&] { exit_code = run_case_study(cs_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const moldcool::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const moldcool::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
