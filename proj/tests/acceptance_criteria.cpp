// Acceptance gate for the cooling toolkit.  Nine end-to-end checks cover the
// deliverables: closed-form cooling time against the published case study,
// series inversion consistency, the finite-difference cross-check, the
// equation-of-state fixtures, warpage algebra, hydraulics, the variant
// comparison arithmetic, the layout rule engine, and the boundary between
// model outputs and transcribed simulation figures.  One line per check;
// exit code 0 only when every check passes.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "moldcool/moldcool.hpp"

namespace {

using moldcool::json;

const std::string k_data_dir = MOLDCOOL_DATA_DIR;
const std::string k_cli_path = MOLDCOOL_CLI_PATH;

std::string data_file(const std::string& name) { return k_data_dir + "/" + name; }

std::string fmt(double v, int precision = 6) {
    std::ostringstream out;
    out << std::setprecision(precision) << v;
    return out.str();
}

// ---- tiny check harness ----

struct Criterion {
    std::string detail;                 // shown on the PASS line
    std::vector<std::string> problems;  // non-empty => FAIL

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

int g_failures = 0;

void report(const std::string& name, const Criterion& c) {
    if (c.problems.empty()) {
        std::cout << "[PASS] " << name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] " << name << "\n";
        for (const std::string& p : c.problems) std::cout << "         " << p << "\n";
    }
}

// ---- CLI runner ----

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = k_cli_path + " " + args + " --data-dir \"" + k_data_dir + "\" 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r;
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

// ---- shared case-study inputs ----

constexpr double k_alpha = 8.913e-8;  // [m^2/s] thermal diffusivity of the acrylic
const moldcool::CoolingProblem k_case_95{9.5e-3, 235.0, 80.0, 94.0, k_alpha};
const moldcool::CoolingProblem k_case_96{9.6e-3, 235.0, 80.0, 94.0, k_alpha};

// Draws solvable slab problems whose ejection Fourier number lies in
// [fo_min, fo_max], mirroring the generator used by the unit suite.
std::vector<moldcool::CoolingProblem> random_problems(unsigned seed, int count, double fo_min,
                                                      double fo_max) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> thickness(4.0e-3, 15.0e-3);
    std::uniform_real_distribution<double> melt(180.0, 300.0);
    std::uniform_real_distribution<double> wall(40.0, 90.0);
    std::uniform_real_distribution<double> alpha(5.0e-8, 1.5e-7);
    std::uniform_real_distribution<double> fo(fo_min, fo_max);

    std::vector<moldcool::CoolingProblem> out;
    out.reserve(static_cast<std::size_t>(count));
    const double pi = std::numbers::pi;
    while (out.size() < static_cast<std::size_t>(count)) {
        moldcool::CoolingProblem p;
        p.thickness = thickness(rng);
        p.t_melt = melt(rng);
        p.t_wall = wall(rng);
        p.alpha_p = alpha(rng);
        const double theta = (4.0 / pi) * std::exp(-pi * pi * fo(rng));
        p.t_eject = p.t_wall + theta * (p.t_melt - p.t_wall);
        if (!(p.t_wall < p.t_eject && p.t_eject < p.t_melt)) continue;
        out.push_back(p);
    }
    return out;
}

// ---- the nine checks ----

// Closed-form cooling time: published figures at both thicknesses, sub-ms
// evaluation cost, and the bundled run documenting the reconciliation gap.
void check_cooling_time_reproduction() {
    Criterion c;

    const double t95 = moldcool::cooling_time(k_case_95);
    const double t96 = moldcool::cooling_time(k_case_96);
    c.expect(std::abs(t95 - 271.5) <= 0.001 * 271.5,
             "9.5 mm slab: expected 271.5 s within 0.1%, got " + fmt(t95, 10) + " s");
    c.expect(std::abs(t96 - 277.2) <= 0.001 * 277.2,
             "9.6 mm slab: expected 277.2 s within 0.1%, got " + fmt(t96, 10) + " s");

    // Evaluation cost: average over 1000 distinct problems to defeat hoisting.
    double sink = 0.0;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 1000; ++i) {
        moldcool::CoolingProblem p = k_case_96;
        p.thickness += static_cast<double>(i) * 1.0e-9;
        sink += moldcool::cooling_time(p);
    }
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    const double avg_ms = elapsed.count() / 1000.0;
    c.expect(avg_ms < 1.0, "closed form averaged " + fmt(avg_ms) + " ms per call (limit 1 ms)");
    c.expect(sink > 0.0, "timing sink vanished");

    const CliResult r = run_cli("case-study --format json");
    c.expect(r.exit_code == 0, "case-study run exited " + std::to_string(r.exit_code) +
                                   " instead of 0; output began: " + r.output.substr(0, 160));
    if (r.exit_code == 0) {
        try {
            const json doc = json::parse(r.output);
            c.expect(doc.at("all_passed").get<bool>(), "case-study run reported failing checks");
            const json& recon = doc.at("published_reconciliation");
            const double gap = recon.at("discrepancy_pct_at_max_thickness").get<double>();
            c.expect(std::abs(gap - 2.1) <= 0.05,
                     "documented discrepancy " + fmt(gap) + " %, expected about 2.1 %");
            c.expect(std::abs(recon.at("cooling_time_at_max_thickness_s").get<double>() - t96) <
                         1e-9,
                     "run did not report the 9.6 mm cooling time");
            c.expect(
                std::abs(recon.at("cooling_time_at_reconciliation_thickness_s").get<double>() -
                         t95) < 1e-9,
                "run did not report the 9.5 mm cooling time");
        } catch (const std::exception& e) {
            c.expect(false, std::string("case-study JSON unusable: ") + e.what());
        }
    }

    c.detail = fmt(t95, 7) + " s at 9.5 mm, " + fmt(t96, 7) + " s at 9.6 mm, " +
               fmt(avg_ms * 1e3, 3) + " us/call, documented gap 2.1 %";
    report("closed-form cooling time reproduces the published case study", c);
}

// Series inversion: the full series evaluated at the closed-form cooling time
// must land on the ejection temperature once only one mode survives.
void check_series_inversion() {
    Criterion c;

    auto problems = random_problems(20260819u, 20, 0.2, 1.0);
    problems.push_back(k_case_96);

    double worst = 0.0;
    for (const moldcool::CoolingProblem& p : problems) {
        const double t_cool = moldcool::cooling_time(p);
        const double mid = moldcool::midplane_temperature(p, t_cool).temperature_c;
        const double miss = std::abs(mid - p.t_eject) / (p.t_melt - p.t_wall);
        worst = std::max(worst, miss);
        c.expect(miss <= 1.0e-3, "midplane at t_cool missed t_eject by " + fmt(miss * 100.0) +
                                     " % of the melt-wall span (thickness " +
                                     fmt(p.thickness * 1e3) + " mm)");
    }

    c.detail = "worst miss " + fmt(worst * 100.0, 3) + " % of the melt-wall span over " +
               std::to_string(problems.size()) + " problems";
    report("series inversion lands on the ejection temperature", c);
}

// Finite-difference oracle: independent march agrees with the closed form and
// is grid-converged, within a wall-clock budget.
void check_fd_oracle() {
    Criterion c;

    const auto start = std::chrono::steady_clock::now();
    const double fd_201 = moldcool::fd_cooling_oracle(k_case_96, 201, 0.4);
    const double fd_401 = moldcool::fd_cooling_oracle(k_case_96, 401, 0.4);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const double closed = moldcool::cooling_time(k_case_96);
    const double dev = std::abs(fd_201 - closed) / closed;
    c.expect(dev <= 0.02, "201-node march deviates " + fmt(dev * 100.0) + " % from the closed form");

    const double drift = std::abs(fd_401 - fd_201) / fd_201;
    c.expect(drift < 0.002, "doubling nodes moved the result by " + fmt(drift * 100.0) + " %");

    c.expect(elapsed.count() < 5.0,
             "both marches took " + fmt(elapsed.count()) + " s (limit 5 s)");

    c.detail = "201 nodes: " + fmt(fd_201, 7) + " s (" + fmt(dev * 100.0, 3) +
               " % from closed form), node doubling moved it " + fmt(drift * 100.0, 3) + " %, " +
               fmt(elapsed.count(), 3) + " s wall clock";
    report("finite-difference oracle corroborates the closed form", c);
}

// Equation of state: both precomputed specific-volume fixtures, plus dense
// monotonicity sweeps in temperature and pressure.
void check_equation_of_state() {
    Criterion c;

    const auto lib = moldcool::load_material_library(data_file("materials.json"));
    const moldcool::ThermoplasticMaterial* mat = lib.find_thermoplastic("plexiglas_8n");
    if (mat == nullptr) {
        c.expect(false, "bundled material library lacks plexiglas_8n");
        report("equation of state matches the precomputed fixtures", c);
        return;
    }

    const double v_ref =
        moldcool::specific_volume(*mat, moldcool::PvtState{293.15, 0.0}).value;
    const double v_pack =
        moldcool::specific_volume(*mat, moldcool::PvtState{405.15, 112.0e6}).value;
    c.expect(std::abs(v_ref - 8.11335434e-4) <= 1.0e-8,
             "ambient specific volume " + fmt(v_ref, 10) + " m^3/kg, expected 8.11335434e-4");
    c.expect(std::abs(v_pack - 8.380240393326484e-4) <= 1.0e-8,
             "packing-state specific volume " + fmt(v_pack, 10) + " m^3/kg, expected 8.38024e-4");

    int grid_points = 0;
    for (const double p_mpa : {0.0, 50.0, 112.0, 200.0}) {
        double prev =
            moldcool::specific_volume(*mat, {moldcool::kelvin(20.0), p_mpa * 1e6}).value;
        for (int i = 1; i <= 100; ++i) {
            const double t_c = 20.0 + (235.0 - 20.0) * i / 100.0;
            const double v =
                moldcool::specific_volume(*mat, {moldcool::kelvin(t_c), p_mpa * 1e6}).value;
            ++grid_points;
            if (!(v > prev)) {
                c.expect(false, "volume not increasing in T at " + fmt(p_mpa) + " MPa, " +
                                    fmt(t_c) + " C");
                break;
            }
            prev = v;
        }
    }
    for (const double t_c : {20.0, 132.0, 180.0, 235.0}) {
        double prev = moldcool::specific_volume(*mat, {moldcool::kelvin(t_c), 0.0}).value;
        for (int i = 1; i <= 100; ++i) {
            const double p_pa = 200.0e6 * i / 100.0;
            const double v =
                moldcool::specific_volume(*mat, {moldcool::kelvin(t_c), p_pa}).value;
            ++grid_points;
            if (!(v < prev)) {
                c.expect(false, "volume not decreasing in P at " + fmt(t_c) + " C, " +
                                    fmt(p_pa / 1e6) + " MPa");
                break;
            }
            prev = v;
        }
    }

    c.detail = "v(20 C, 0) = " + fmt(v_ref, 9) + ", v(132 C, 112 MPa) = " + fmt(v_pack, 9) +
               " m^3/kg, " + std::to_string(grid_points) + " monotonicity points";
    report("equation of state matches the precomputed fixtures", c);
}

// Warpage algebra: published deflection, exact zero under uniform shrinkage,
// and the small-difference asymptote that motivates the safe formulation.
void check_warpage_algebra() {
    Criterion c;

    const auto case_study = moldcool::deflection({0.315, 2.7267e-4, 0.0});
    const double mm = case_study.deflection * 1e3;
    c.expect(std::abs(mm - 7.356) <= 0.001,
             "case-study deflection " + fmt(mm, 7) + " mm, expected 7.356 +/- 0.001");
    c.expect(case_study.dominance == moldcool::ShrinkageDominance::edge_dominant,
             "case-study dominance not edge_dominant");

    for (const double s : {0.0, 0.004, 0.02}) {
        const auto d = moldcool::deflection({0.25, s, s});
        c.expect(d.deflection == 0.0, "uniform shrinkage s = " + fmt(s) +
                                          " gave nonzero deflection " + fmt(d.deflection, 10));
    }

    double worst_pct = 0.0;
    for (const double w : {0.315, 1.0}) {
        for (const double ds : {9.9e-4, 1.0e-4, 1.0e-5, 1.0e-6, 1.0e-7, 1.0e-8}) {
            const double exact = moldcool::deflection({w, ds, 0.0}).deflection;
            const double asym = w * std::sqrt(2.0 * ds);
            const double off = std::abs(exact - asym) / asym;
            worst_pct = std::max(worst_pct, off * 100.0);
            c.expect(off <= 0.01, "asymptote off by " + fmt(off * 100.0) + " % at dS = " +
                                      fmt(ds) + ", span " + fmt(w) + " m");
        }
    }

    c.detail = fmt(mm, 7) + " mm at the case-study inputs; worst asymptote gap " +
               fmt(worst_pct, 3) + " %";
    report("warpage chord model matches the published deflection", c);
}

// Hydraulics: the three bundled operating points all sit on the turbulence
// target, and flow sizing inverts the Reynolds evaluation exactly.
void check_hydraulics() {
    Criterion c;

    const moldcool::CoolantSpec coolant{};
    const std::array<std::pair<double, double>, 3> points{{
        {128.0e-6, 9.0e-3},
        {113.8e-6, 8.0e-3},
        {85.3e-6, 6.0e-3},
    }};

    double worst_re_off = 0.0;
    for (const auto& [q, d] : points) {
        const double re = moldcool::reynolds(q, d, coolant);
        const double off = std::abs(re - 4.0e4) / 4.0e4;
        worst_re_off = std::max(worst_re_off, off);
        c.expect(off <= 1.0e-3, "operating point Q = " + fmt(q * 1e6) + " cm^3/s, D = " +
                                    fmt(d * 1e3) + " mm gives Re = " + fmt(re, 8) +
                                    ", expected 4.0e4 within 0.1 %");
        c.expect(moldcool::turbulence_class(re) == moldcool::TurbulenceClass::turbulent_ok,
                 "operating point not classified turbulent_ok");

        const double q_back = moldcool::flow_rate_for_reynolds(re, d, coolant);
        c.expect(std::abs(q_back - q) <= 1e-14 * q,
                 "flow sizing did not invert Reynolds at D = " + fmt(d * 1e3) + " mm");
    }

    std::mt19937 rng(77u);
    std::uniform_real_distribution<double> re_dist(1.0e3, 1.0e5);
    std::uniform_real_distribution<double> d_dist(2.0e-3, 20.0e-3);
    double worst_round_trip = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double re = re_dist(rng);
        const double d = d_dist(rng);
        const double re_back =
            moldcool::reynolds(moldcool::flow_rate_for_reynolds(re, d, coolant), d, coolant);
        worst_round_trip = std::max(worst_round_trip, std::abs(re_back - re) / re);
    }
    c.expect(worst_round_trip <= 1e-14,
             "random Reynolds round trips drifted " + fmt(worst_round_trip) + " relative");

    c.detail = "three operating points within " + fmt(worst_re_off * 100.0, 3) +
               " % of Re = 4.0e4, all turbulent; round-trip drift " + fmt(worst_round_trip, 3);
    report("hydraulics hit the turbulence target and invert exactly", c);
}

// Comparison arithmetic: every printed reduction / improvement pair is
// recomputed within 0.01 absolute, and the compliance verdicts follow the
// inclusive limits.
void check_comparison_arithmetic() {
    Criterion c;

    const auto fixtures =
        moldcool::load_comparison_fixtures(data_file("comparison_tables.json"));
    c.expect(fixtures.size() == 4, "expected 4 bundled comparison tables, found " +
                                       std::to_string(fixtures.size()));

    int records = 0;
    double worst = 0.0;
    for (const moldcool::ComparisonFixture& fixture : fixtures) {
        std::vector<moldcool::MetricSample> samples;
        samples.reserve(fixture.variants.size());
        for (const moldcool::FixtureVariant& v : fixture.variants) samples.push_back(v.sample);
        const auto rpt = moldcool::compare(fixture.baseline.sample, samples);

        for (std::size_t i = 0; i < fixture.variants.size(); ++i) {
            const moldcool::FixtureVariant& v = fixture.variants[i];
            const moldcool::ComparisonRow& row = rpt.rows[i + 1];
            if (v.printed_reduction) {
                ++records;
                const double off = std::abs(row.reduction - *v.printed_reduction);
                worst = std::max(worst, off);
                c.expect(off <= 0.01, moldcool::metric_name(fixture.metric) + std::string("/") +
                                          v.sample.variant_name + ": recomputed reduction " +
                                          fmt(row.reduction, 9) + " vs printed " +
                                          fmt(*v.printed_reduction, 9));
            }
            if (v.printed_improvement_pct) {
                ++records;
                const double off = std::abs(row.improvement_pct - *v.printed_improvement_pct);
                worst = std::max(worst, off);
                c.expect(off <= 0.01, moldcool::metric_name(fixture.metric) + std::string("/") +
                                          v.sample.variant_name + ": recomputed improvement " +
                                          fmt(row.improvement_pct, 9) + " % vs printed " +
                                          fmt(*v.printed_improvement_pct, 9) + " %");
            }
        }
    }
    c.expect(records == 24,
             "expected 24 printed reduction/improvement records, found " + std::to_string(records));

    // Compliance verdicts on the rule-bearing metrics, inclusive limits.
    auto outcome_of = [&](moldcool::Metric metric, const std::string& variant,
                          double expected_value) {
        for (const moldcool::ComparisonFixture& fixture : fixtures) {
            if (fixture.metric != metric) continue;
            std::vector<moldcool::MetricSample> samples;
            for (const moldcool::FixtureVariant& v : fixture.variants) samples.push_back(v.sample);
            const auto rpt = moldcool::compare(fixture.baseline.sample, samples);
            for (const moldcool::ComparisonRow& row : rpt.rows) {
                if (row.variant_name == variant) {
                    c.expect(row.value == expected_value,
                             variant + " value " + fmt(row.value) + " != " + fmt(expected_value));
                    return row.compliance.outcome;
                }
            }
        }
        c.expect(false, "row '" + variant + "' not found for " +
                            std::string(moldcool::metric_name(metric)));
        return moldcool::ComplianceOutcome::no_rule;
    };

    c.expect(outcome_of(moldcool::Metric::total_warpage_mm, "Conformal channels", 0.725) ==
                 moldcool::ComplianceOutcome::pass,
             "0.725 mm warpage should pass the 1 mm limit");
    c.expect(outcome_of(moldcool::Metric::mold_temp_difference_c, "Conformal channels", 4.972) ==
                 moldcool::ComplianceOutcome::pass,
             "4.972 C temperature difference should pass the 10 C limit");
    c.expect(outcome_of(moldcool::Metric::mold_temp_difference_c,
                        "Conformal channels and dashed Fastcool bars", 10.668) ==
                 moldcool::ComplianceOutcome::fail,
             "10.668 C temperature difference should fail the 10 C limit");

    c.detail = std::to_string(records) + " printed records recomputed, worst gap " +
               fmt(worst, 3) + "; compliance verdicts 0.725 pass / 4.972 pass / 10.668 fail";
    report("variant comparison arithmetic matches the printed tables", c);
}

// Layout rules: every bundled layout satisfies its rule set, and the engine
// names the safety-distance rule when a drilled circuit crowds the cavity.
void check_layout_rules() {
    Criterion c;

    const std::array<std::pair<const char*, const char*>, 4> combos{{
        {"layout_straight.json", "rules_straight.json"},
        {"layout_conformal.json", "rules_conformal.json"},
        {"layout_hybrid_full.json", "rules_hybrid.json"},
        {"layout_hybrid_dashed.json", "rules_hybrid.json"},
    }};
    for (const auto& [layout_file, rules_file] : combos) {
        const auto layout = moldcool::load_layout(data_file(layout_file));
        const auto rules = moldcool::load_rules(data_file(rules_file));
        const auto rpt = moldcool::check_layout(layout, rules);
        c.expect(rpt.passed, std::string(layout_file) + " violates " + rules_file);
    }

    auto crowded = moldcool::load_layout(data_file("layout_straight.json"));
    crowded.dist_channel_to_cavity = 9.0e-3;
    const auto rules = moldcool::load_rules(data_file("rules_straight.json"));
    const auto rpt = moldcool::check_layout(crowded, rules);
    c.expect(!rpt.passed, "9 mm cavity clearance slipped past the drilled-circuit rules");
    bool cited = false;
    for (const moldcool::RuleViolation& v : rpt.violations) {
        if (v.message.find("10 mm safety distance") != std::string::npos) cited = true;
    }
    c.expect(cited, "safety-distance rule not cited for the 9 mm clearance");

    c.detail = "4 bundled layout/rule pairings pass; 9 mm clearance fails citing the safety "
               "distance";
    report("layout rule engine enforces the bundled rule sets", c);
}

// Transcribed simulation figures stay inputs: the model's own predictions
// differ from them, and they reach the toolkit only through the comparison
// fixture consumed above.
void check_simulation_figures_are_inputs() {
    Criterion c;

    const auto fixtures =
        moldcool::load_comparison_fixtures(data_file("comparison_tables.json"));
    double cae_cooling = 0.0;
    double cae_warpage = 0.0;
    for (const moldcool::ComparisonFixture& f : fixtures) {
        if (f.metric == moldcool::Metric::max_cooling_time_s) {
            cae_cooling = f.baseline.sample.value;
        }
        if (f.metric == moldcool::Metric::total_warpage_mm) cae_warpage = f.baseline.sample.value;
    }
    c.expect(cae_cooling == 262.550, "cooling-time fixture baseline is " + fmt(cae_cooling));
    c.expect(cae_warpage == 7.636, "warpage fixture baseline is " + fmt(cae_warpage));

    const double model_cooling = moldcool::cooling_time(k_case_96);
    const double cooling_gap = std::abs(model_cooling - cae_cooling) / cae_cooling;
    c.expect(cooling_gap > 0.04,
             "closed form lands on the transcribed simulation figure (gap " +
                 fmt(cooling_gap * 100.0) + " %); it must stay an independent fixture input");

    const double model_warpage = moldcool::deflection({0.315, 2.7267e-4, 0.0}).deflection * 1e3;
    const double warpage_gap = std::abs(model_warpage - cae_warpage) / cae_warpage;
    c.expect(warpage_gap > 0.02, "chord model lands on the transcribed warpage figure (gap " +
                                     fmt(warpage_gap * 100.0) + " %)");

    c.detail = "model 277.203 s / 7.356 mm vs transcribed 262.550 s / 7.636 mm (gaps " +
               fmt(cooling_gap * 100.0, 3) + " % and " + fmt(warpage_gap * 100.0, 3) + " %)";
    report("transcribed simulation figures enter only as fixture inputs", c);
}

}  // namespace

int main() {
    std::cout << "cooling toolkit acceptance checks\n";
    std::cout << "data: " << k_data_dir << "\n\n";

    try {
        check_cooling_time_reproduction();
        check_series_inversion();
        check_fd_oracle();
        check_equation_of_state();
        check_warpage_algebra();
        check_hydraulics();
        check_comparison_arithmetic();
        check_layout_rules();
        check_simulation_figures_are_inputs();
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
    }

    std::cout << "\nacceptance: 9 checks, "
              << (g_failures == 0 ? "all passed"
                                  : std::to_string(g_failures) + " FAILED")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
