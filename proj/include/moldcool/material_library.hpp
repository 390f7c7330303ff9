#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "moldcool/errors.hpp"
#include "moldcool/json_util.hpp"
#include "moldcool/materials.hpp"

namespace moldcool {

// A material library file holds two arrays of named property records:
//
//   { "thermoplastics": [ {...}, ... ], "mold_materials": [ {...}, ... ] }
//
// Field names match the struct members one-to-one; every mandatory field must
// be present, record names must be unique within the file, and numeric
// invariants are enforced on load.  Unrecognized fields (e.g. "notes") are
// ignored so files can carry documentation.

struct MaterialLibrary {
    std::vector<ThermoplasticMaterial> thermoplastics;
    std::vector<MoldMaterial> mold_materials;

    const ThermoplasticMaterial* find_thermoplastic(const std::string& name) const {
        for (const auto& m : thermoplastics) {
            if (m.name == name) return &m;
        }
        return nullptr;
    }

    const MoldMaterial* find_mold_material(const std::string& name) const {
        for (const auto& m : mold_materials) {
            if (m.name == name) return &m;
        }
        return nullptr;
    }
};

namespace detail {

inline ThermoplasticMaterial parse_thermoplastic(const json& j, const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": thermoplastic records must be objects");
    ThermoplasticMaterial m;
    m.name = require_string(j, file_context, "name");
    const std::string context = file_context + ": thermoplastic '" + m.name + "'";
    m.alpha_p = require_number(j, context, "alpha_p");
    m.rho_p = require_number(j, context, "rho_p");
    m.c_p = require_number(j, context, "c_p");
    m.t_melt = require_number(j, context, "t_melt");
    m.t_mold = require_number(j, context, "t_mold");
    m.t_eject = require_number(j, context, "t_eject");
    m.t_freeze = require_number(j, context, "t_freeze");
    m.b1 = require_number(j, context, "b1");
    m.b2 = require_number(j, context, "b2");
    m.b3 = require_number(j, context, "b3");
    m.b4 = require_number(j, context, "b4");
    m.b5 = require_number(j, context, "b5");
    m.e_p = require_number(j, context, "e_p");
    m.poisson = require_number(j, context, "poisson");
    m.clte = require_number(j, context, "clte");
    m.uoi = require_number(j, context, "uoi");
    m.fsc = require_number(j, context, "fsc");
    m.tsc = require_number(j, context, "tsc");
    validate(m);
    return m;
}

inline MoldMaterial parse_mold_material(const json& j, const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": mold material records must be objects");
    MoldMaterial m;
    m.name = require_string(j, file_context, "name");
    const std::string context = file_context + ": mold material '" + m.name + "'";
    m.rho = require_number(j, context, "rho");
    m.heat_capacity = require_number(j, context, "heat_capacity");
    m.elastic_modulus = require_number(j, context, "elastic_modulus");
    m.yield_stress = require_number(j, context, "yield_stress");
    m.poisson = require_number(j, context, "poisson");
    m.clte = require_number(j, context, "clte");
    m.thermal_diffusivity = require_number(j, context, "thermal_diffusivity");
    m.thermal_conductivity = require_number(j, context, "thermal_conductivity");
    m.mechanical_resistance = optional_number(j, context, "mechanical_resistance");
    m.elongation = optional_number(j, context, "elongation");
    validate(m);
    return m;
}

inline json to_json(const ThermoplasticMaterial& m) {
    json j;
    j["name"] = m.name;
    j["alpha_p"] = m.alpha_p;
    j["rho_p"] = m.rho_p;
    j["c_p"] = m.c_p;
    j["t_melt"] = m.t_melt;
    j["t_mold"] = m.t_mold;
    j["t_eject"] = m.t_eject;
    j["t_freeze"] = m.t_freeze;
    j["b1"] = m.b1;
    j["b2"] = m.b2;
    j["b3"] = m.b3;
    j["b4"] = m.b4;
    j["b5"] = m.b5;
    j["e_p"] = m.e_p;
    j["poisson"] = m.poisson;
    j["clte"] = m.clte;
    j["uoi"] = m.uoi;
    j["fsc"] = m.fsc;
    j["tsc"] = m.tsc;
    return j;
}

inline json to_json(const MoldMaterial& m) {
    json j;
    j["name"] = m.name;
    j["rho"] = m.rho;
    j["heat_capacity"] = m.heat_capacity;
    j["elastic_modulus"] = m.elastic_modulus;
    j["yield_stress"] = m.yield_stress;
    j["poisson"] = m.poisson;
    if (m.mechanical_resistance) j["mechanical_resistance"] = *m.mechanical_resistance;
    if (m.elongation) j["elongation"] = *m.elongation;
    j["clte"] = m.clte;
    j["thermal_diffusivity"] = m.thermal_diffusivity;
    j["thermal_conductivity"] = m.thermal_conductivity;
    return j;
}

}  // namespace detail

inline MaterialLibrary material_library_from_json(const json& j, const std::string& file_context) {
    if (!j.is_object()) throw ValidationError(file_context + ": top level must be an object");
    MaterialLibrary lib;
    std::unordered_set<std::string> names;
    auto claim_name = [&](const std::string& name) {
        if (!names.insert(name).second) {
            throw ValidationError(file_context + ": duplicate record name '" + name + "'");
        }
    };
    const json& thermo = detail::require_array(j, file_context, "thermoplastics");
    for (const json& record : thermo) {
        lib.thermoplastics.push_back(detail::parse_thermoplastic(record, file_context));
        claim_name(lib.thermoplastics.back().name);
    }
    const json& molds = detail::require_array(j, file_context, "mold_materials");
    for (const json& record : molds) {
        lib.mold_materials.push_back(detail::parse_mold_material(record, file_context));
        claim_name(lib.mold_materials.back().name);
    }
    return lib;
}

inline json material_library_to_json(const MaterialLibrary& lib) {
    json j;
    j["thermoplastics"] = json::array();
    for (const auto& m : lib.thermoplastics) j["thermoplastics"].push_back(detail::to_json(m));
    j["mold_materials"] = json::array();
    for (const auto& m : lib.mold_materials) j["mold_materials"].push_back(detail::to_json(m));
    return j;
}

inline MaterialLibrary load_material_library(const std::filesystem::path& path) {
    return material_library_from_json(detail::parse_json_file(path), path.filename().string());
}

inline void save_material_library(const MaterialLibrary& lib, const std::filesystem::path& path) {
    detail::write_text_file(path, material_library_to_json(lib).dump(2) + "\n");
}

}  // namespace moldcool
