#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moldcool/json_util.hpp"
#include "moldcool/layout.hpp"

namespace moldcool {

// Layout files hold one circuit each; rule files hold an array of rules.
// Both formats mirror the struct fields, lengths in meters.  "notes" fields
// are ignored on load.

inline CoolingLayout layout_from_json(const json& j, const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": top level must be an object");
    CoolingLayout l;
    l.name = detail::require_string(j, file_context, "name");
    const std::string context = file_context + ": layout '" + l.name + "'";
    l.kind = layout_kind_from_string(detail::require_string(j, context, "kind"));
    l.channel_diameters = detail::number_array(
        detail::require_array(j, context, "channel_diameters"), context, "channel_diameters");
    l.dist_channel_to_cavity = detail::require_number(j, context, "dist_channel_to_cavity");
    l.dist_channel_to_ejection = detail::optional_number(j, context, "dist_channel_to_ejection");
    if (const auto it = j.find("insert_diameters"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw ValidationError(context + ": field 'insert_diameters' must be an array");
        }
        l.insert_diameters = detail::number_array(*it, context, "insert_diameters");
    }
    l.dist_insert_to_cavity = detail::optional_number(j, context, "dist_insert_to_cavity");
    l.dist_insert_to_channel = detail::optional_number(j, context, "dist_insert_to_channel");
    validate(l);
    return l;
}

inline json layout_to_json(const CoolingLayout& l) {
    json j;
    j["name"] = l.name;
    j["kind"] = to_string(l.kind);
    j["channel_diameters"] = l.channel_diameters;
    j["dist_channel_to_cavity"] = l.dist_channel_to_cavity;
    if (l.dist_channel_to_ejection) j["dist_channel_to_ejection"] = *l.dist_channel_to_ejection;
    if (l.insert_diameters) j["insert_diameters"] = *l.insert_diameters;
    if (l.dist_insert_to_cavity) j["dist_insert_to_cavity"] = *l.dist_insert_to_cavity;
    if (l.dist_insert_to_channel) j["dist_insert_to_channel"] = *l.dist_insert_to_channel;
    return j;
}

inline CoolingLayout load_layout(const std::filesystem::path& path) {
    return layout_from_json(detail::parse_json_file(path), path.filename().string());
}

inline std::vector<LayoutRule> rules_from_json(const json& j, const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": top level must be an object");
    const json& array = detail::require_array(j, file_context, "rules");
    std::vector<LayoutRule> rules;
    for (const json& record : array) {
        if (!record.is_object()) throw ValidationError(file_context + ": rules must be objects");
        LayoutRule r;
        r.id = detail::require_string(record, file_context, "id");
        const std::string context = file_context + ": rule '" + r.id + "'";
        r.field = detail::require_string(record, context, "field");
        r.min_m = detail::optional_number(record, context, "min_m");
        r.max_m = detail::optional_number(record, context, "max_m");
        r.min_factor_of_max_channel_diameter =
            detail::optional_number(record, context, "min_factor_of_max_channel_diameter");
        r.message = detail::require_string(record, context, "message");
        validate(r);
        rules.push_back(std::move(r));
    }
    return rules;
}

inline std::vector<LayoutRule> load_rules(const std::filesystem::path& path) {
    return rules_from_json(detail::parse_json_file(path), path.filename().string());
}

inline json rule_report_to_json(const RuleReport& report) {
    json j;
    j["passed"] = report.passed;
    j["violations"] = json::array();
    for (const RuleViolation& v : report.violations) {
        json vj;
        vj["rule_id"] = v.rule_id;
        vj["field"] = v.field;
        vj["measured_m"] = v.measured;
        vj["limit_m"] = v.limit;
        vj["message"] = v.message;
        j["violations"].push_back(vj);
    }
    return j;
}

}  // namespace moldcool
