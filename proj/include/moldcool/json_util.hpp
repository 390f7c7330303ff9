#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "moldcool/errors.hpp"

namespace moldcool {

// Ordered maps keep serialized output stable: the same inputs always produce
// byte-identical files.
using json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& j, const std::string& context,
                                 const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end()) {
        throw ValidationError(context + ": missing required field '" + field + "'");
    }
    return *it;
}

inline double require_number(const json& j, const std::string& context, const std::string& field) {
    const json& f = require_field(j, context, field);
    if (!f.is_number()) {
        throw ValidationError(context + ": field '" + field + "' must be a number");
    }
    return f.get<double>();
}

inline std::string require_string(const json& j, const std::string& context,
                                  const std::string& field) {
    const json& f = require_field(j, context, field);
    if (!f.is_string()) {
        throw ValidationError(context + ": field '" + field + "' must be a string");
    }
    return f.get<std::string>();
}

inline const json& require_array(const json& j, const std::string& context,
                                 const std::string& field) {
    const json& f = require_field(j, context, field);
    if (!f.is_array()) {
        throw ValidationError(context + ": field '" + field + "' must be an array");
    }
    return f;
}

inline const json& require_object(const json& j, const std::string& context,
                                  const std::string& field) {
    const json& f = require_field(j, context, field);
    if (!f.is_object()) {
        throw ValidationError(context + ": field '" + field + "' must be an object");
    }
    return f;
}

inline std::optional<double> optional_number(const json& j, const std::string& context,
                                             const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) {
        throw ValidationError(context + ": field '" + field + "' must be a number");
    }
    return it->get<double>();
}

inline std::optional<std::string> optional_string(const json& j, const std::string& context,
                                                  const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
        throw ValidationError(context + ": field '" + field + "' must be a string");
    }
    return it->get<std::string>();
}

inline std::vector<double> number_array(const json& array, const std::string& context,
                                        const std::string& field) {
    std::vector<double> values;
    values.reserve(array.size());
    for (const json& item : array) {
        if (!item.is_number()) {
            throw ValidationError(context + ": field '" + field +
                                  "' must contain only numbers");
        }
        values.push_back(item.get<double>());
    }
    return values;
}

inline json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FileError(path.string() + ": not valid JSON: " + e.what());
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open file for writing: " + path.string());
    out << content;
    if (!out) throw FileError("write failed: " + path.string());
}

}  // namespace detail
}  // namespace moldcool
