#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "moldcool/errors.hpp"

namespace moldcool {

// Variant-comparison arithmetic and industrial compliance rules.
//
// Every metric handled here improves downward (shorter cooling time, smaller
// temperature spread, less warpage, lower stress), so
//
//   reduction       = baseline - value          (in the metric's unit)
//   improvement_pct = 100 * reduction / baseline
//
// Negative values mean the variant is worse than the baseline.

enum class Metric {
    max_cooling_time_s,
    mold_temp_difference_c,
    total_warpage_mm,
    warpage_stress_mpa,
};

inline const char* metric_name(Metric m) {
    switch (m) {
        case Metric::max_cooling_time_s: return "max_cooling_time_s";
        case Metric::mold_temp_difference_c: return "mold_temp_difference_C";
        case Metric::total_warpage_mm: return "total_warpage_mm";
        case Metric::warpage_stress_mpa: return "warpage_stress_MPa";
    }
    return "max_cooling_time_s";
}

inline Metric metric_from_name(const std::string& s) {
    if (s == "max_cooling_time_s") return Metric::max_cooling_time_s;
    if (s == "mold_temp_difference_C") return Metric::mold_temp_difference_c;
    if (s == "total_warpage_mm") return Metric::total_warpage_mm;
    if (s == "warpage_stress_MPa") return Metric::warpage_stress_mpa;
    throw ValidationError("metric: unknown name '" + s + "'");
}

inline const char* metric_unit(Metric m) {
    switch (m) {
        case Metric::max_cooling_time_s: return "s";
        case Metric::mold_temp_difference_c: return "C";
        case Metric::total_warpage_mm: return "mm";
        case Metric::warpage_stress_mpa: return "MPa";
    }
    return "s";
}

// One measured or simulated value of one metric for one mold variant.
struct MetricSample {
    Metric metric = Metric::max_cooling_time_s;
    std::string variant_name;
    double value = 0.0;  // >= 0
};

inline void validate(const MetricSample& s) {
    if (s.variant_name.empty()) {
        throw ValidationError("metric sample: field 'variant_name' must be non-empty");
    }
    if (s.value < 0.0) {
        throw ValidationError("metric sample '" + s.variant_name +
                              "': field 'value' must be >= 0");
    }
}

// ---- industrial compliance rules ----

// Total warpage of an accepted part must not exceed this bound (inclusive).
inline constexpr double total_warpage_limit_mm = 1.0;
// Temperature spread across the mold surface must not exceed this bound
// (inclusive) for dimensionally stable production.
inline constexpr double mold_temp_difference_limit_c = 10.0;

enum class ComplianceOutcome { pass, fail, no_rule };

inline const char* to_string(ComplianceOutcome o) {
    switch (o) {
        case ComplianceOutcome::pass: return "pass";
        case ComplianceOutcome::fail: return "fail";
        case ComplianceOutcome::no_rule: return "no_rule";
    }
    return "no_rule";
}

struct ComplianceResult {
    ComplianceOutcome outcome = ComplianceOutcome::no_rule;
    std::string rule;  // human-readable statement of the rule applied
};

// Applies the industrial limit for the sample's metric, if one exists.
// Values exactly at the limit pass.
inline ComplianceResult compliance_check(const MetricSample& s) {
    validate(s);
    switch (s.metric) {
        case Metric::total_warpage_mm:
            return {s.value <= total_warpage_limit_mm ? ComplianceOutcome::pass
                                                      : ComplianceOutcome::fail,
                    "total warpage must not exceed 1 mm"};
        case Metric::mold_temp_difference_c:
            return {s.value <= mold_temp_difference_limit_c ? ComplianceOutcome::pass
                                                            : ComplianceOutcome::fail,
                    "mold-surface temperature difference must not exceed 10 C"};
        default:
            return {ComplianceOutcome::no_rule, "no industrial limit for this metric"};
    }
}

// ---- variant comparison ----

struct ComparisonRow {
    std::string variant_name;
    double value = 0.0;
    double reduction = 0.0;        // 0 for the baseline row
    double improvement_pct = 0.0;  // 0 for the baseline row
    bool is_baseline = false;
    ComplianceResult compliance;
};

struct ComparisonReport {
    Metric metric = Metric::max_cooling_time_s;
    std::vector<ComparisonRow> rows;  // baseline first, then variants in input order
};

// Builds the comparison table for one metric.  All samples must share the
// baseline's metric, and the baseline value must be non-zero (percentages
// against a zero baseline are undefined).
inline ComparisonReport compare(const MetricSample& baseline,
                                const std::vector<MetricSample>& variants) {
    validate(baseline);
    if (baseline.value == 0.0) {
        throw ValidationError("compare: baseline '" + baseline.variant_name +
                              "' has value 0; improvement percentages are undefined");
    }
    ComparisonReport report;
    report.metric = baseline.metric;
    ComparisonRow base_row{baseline.variant_name, baseline.value, 0.0, 0.0, true,
                           compliance_check(baseline)};
    report.rows.push_back(base_row);
    for (const MetricSample& v : variants) {
        validate(v);
        if (v.metric != baseline.metric) {
            throw ValidationError("compare: variant '" + v.variant_name + "' reports metric '" +
                                  metric_name(v.metric) + "' but the baseline reports '" +
                                  metric_name(baseline.metric) + "'");
        }
        const double reduction = baseline.value - v.value;
        ComparisonRow row{v.variant_name, v.value, reduction,
                          100.0 * reduction / baseline.value, false, compliance_check(v)};
        report.rows.push_back(row);
    }
    return report;
}

// Half-up rounding to a fixed number of decimals, as used when printing
// comparison tables (3 decimals).
inline double round_to_decimals(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

}  // namespace moldcool
