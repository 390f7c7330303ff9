#pragma once

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "moldcool/json_util.hpp"
#include "moldcool/report.hpp"

namespace moldcool {

// Comparison fixtures bundle published variant studies: measured values plus
// the reduction / improvement figures as printed in the source tables
// (3 decimals), so recomputed arithmetic can be diffed against them.

struct FixtureVariant {
    MetricSample sample;
    std::optional<double> printed_reduction;
    std::optional<double> printed_improvement_pct;
    std::optional<ComplianceOutcome> expected_compliance;
};

struct ComparisonFixture {
    Metric metric = Metric::max_cooling_time_s;
    FixtureVariant baseline;
    std::vector<FixtureVariant> variants;
};

namespace detail {

inline ComplianceOutcome compliance_outcome_from_string(const std::string& s,
                                                        const std::string& context) {
    if (s == "pass") return ComplianceOutcome::pass;
    if (s == "fail") return ComplianceOutcome::fail;
    if (s == "no_rule") return ComplianceOutcome::no_rule;
    throw ValidationError(context + ": unknown compliance outcome '" + s + "'");
}

inline FixtureVariant parse_fixture_variant(const json& j, Metric metric,
                                            const std::string& context) {
    FixtureVariant v;
    v.sample.metric = metric;
    v.sample.variant_name = require_string(j, context, "variant_name");
    v.sample.value = require_number(j, context + " '" + v.sample.variant_name + "'", "value");
    v.printed_reduction = optional_number(j, context, "printed_reduction");
    v.printed_improvement_pct = optional_number(j, context, "printed_improvement_pct");
    if (const auto s = optional_string(j, context, "expected_compliance")) {
        v.expected_compliance = compliance_outcome_from_string(*s, context);
    }
    return v;
}

}  // namespace detail

inline std::vector<ComparisonFixture> comparison_fixtures_from_json(const json& j,
                                                                    const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": top level must be an object");
    const json& tables = detail::require_array(j, file_context, "tables");
    std::vector<ComparisonFixture> fixtures;
    for (const json& t : tables) {
        if (!t.is_object()) throw ValidationError(file_context + ": tables must be objects");
        ComparisonFixture f;
        f.metric = metric_from_name(detail::require_string(t, file_context, "metric"));
        const std::string context = file_context + ": table '" + std::string(metric_name(f.metric)) + "'";
        f.baseline = detail::parse_fixture_variant(detail::require_object(t, context, "baseline"),
                                                   f.metric, context);
        for (const json& v : detail::require_array(t, context, "variants")) {
            f.variants.push_back(detail::parse_fixture_variant(v, f.metric, context));
        }
        fixtures.push_back(std::move(f));
    }
    return fixtures;
}

inline std::vector<ComparisonFixture> load_comparison_fixtures(const std::filesystem::path& path) {
    return comparison_fixtures_from_json(detail::parse_json_file(path), path.filename().string());
}

// ---- rendering ----

namespace detail {

inline std::string fixed3(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << v;
    return out.str();
}

inline bool metric_has_compliance_rule(Metric m) {
    return m == Metric::total_warpage_mm || m == Metric::mold_temp_difference_c;
}

}  // namespace detail

// JSON rendering carries raw values alongside the 3-decimal figures used in
// printed tables.
inline json report_to_json(const ComparisonReport& report) {
    json j;
    j["metric"] = metric_name(report.metric);
    j["unit"] = metric_unit(report.metric);
    j["rows"] = json::array();
    for (const ComparisonRow& row : report.rows) {
        json r;
        r["variant_name"] = row.variant_name;
        r["is_baseline"] = row.is_baseline;
        r["value"] = row.value;
        r["value_rounded"] = round_to_decimals(row.value, 3);
        if (!row.is_baseline) {
            r["reduction"] = row.reduction;
            r["reduction_rounded"] = round_to_decimals(row.reduction, 3);
            r["improvement_pct"] = row.improvement_pct;
            r["improvement_pct_rounded"] = round_to_decimals(row.improvement_pct, 3);
        }
        if (row.compliance.outcome != ComplianceOutcome::no_rule) {
            r["compliance"] = to_string(row.compliance.outcome);
            r["compliance_rule"] = row.compliance.rule;
        }
        j["rows"].push_back(r);
    }
    return j;
}

inline std::string report_to_text(const ComparisonReport& report) {
    const bool with_compliance = detail::metric_has_compliance_rule(report.metric);
    std::size_t name_width = std::string("variant").size();
    for (const ComparisonRow& row : report.rows) {
        name_width = std::max(name_width, row.variant_name.size());
    }
    std::ostringstream out;
    out << "metric: " << metric_name(report.metric) << " [" << metric_unit(report.metric) << "]\n";
    out << std::left << std::setw(static_cast<int>(name_width)) << "variant" << std::right
        << std::setw(12) << "value" << std::setw(12) << "reduction" << std::setw(18)
        << "improvement [%]";
    if (with_compliance) out << std::setw(12) << "compliance";
    out << "\n";
    for (const ComparisonRow& row : report.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.variant_name
            << std::right << std::setw(12) << detail::fixed3(row.value);
        if (row.is_baseline) {
            out << std::setw(12) << "-" << std::setw(18) << "-";
        } else {
            out << std::setw(12) << detail::fixed3(row.reduction) << std::setw(18)
                << detail::fixed3(row.improvement_pct);
        }
        if (with_compliance) out << std::setw(12) << to_string(row.compliance.outcome);
        out << "\n";
    }
    return out.str();
}

inline std::string report_to_csv(const ComparisonReport& report) {
    const bool with_compliance = detail::metric_has_compliance_rule(report.metric);
    std::ostringstream out;
    out << "variant_name,value,reduction,improvement_pct";
    if (with_compliance) out << ",compliance";
    out << "\n";
    for (const ComparisonRow& row : report.rows) {
        out << '"' << row.variant_name << '"' << ',' << detail::fixed3(row.value) << ',';
        if (row.is_baseline) {
            out << ',';
        } else {
            out << detail::fixed3(row.reduction) << ',' << detail::fixed3(row.improvement_pct);
        }
        if (with_compliance) out << ',' << to_string(row.compliance.outcome);
        out << "\n";
    }
    return out.str();
}

}  // namespace moldcool
