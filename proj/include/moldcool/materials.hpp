#pragma once

#include <optional>
#include <string>

#include "moldcool/errors.hpp"

namespace moldcool {

// Temperatures are stored in the unit they are quoted in on data sheets:
// degrees Celsius for process temperatures, Kelvin for the state-equation
// coefficient b5.  Conversions happen at the point of use.
inline constexpr double celsius_kelvin_offset = 273.15;

inline double kelvin(double t_celsius) { return t_celsius + celsius_kelvin_offset; }
inline double celsius(double t_kelvin) { return t_kelvin - celsius_kelvin_offset; }

// Thermal, pvT, mechanical and optical properties of a molded thermoplastic.
struct ThermoplasticMaterial {
    std::string name;
    double alpha_p = 0.0;   // thermal diffusivity [m^2/s]
    double rho_p = 0.0;     // density [kg/m^3]
    double c_p = 0.0;       // specific heat capacity [J/(kg C)]
    double t_melt = 0.0;    // melt temperature [C]
    double t_mold = 0.0;    // recommended mold-surface temperature [C]
    double t_eject = 0.0;   // ejection temperature [C]
    double t_freeze = 0.0;  // freeze (no-flow) temperature [C]
    double b1 = 0.0;        // Tait coefficient: reference volume [m^3/kg]
    double b2 = 0.0;        // Tait coefficient: volume-temperature slope [m^3/(kg K)]
    double b3 = 0.0;        // Tait coefficient: compressibility scale [Pa]
    double b4 = 0.0;        // Tait coefficient: compressibility decay [1/K]
    double b5 = 0.0;        // Tait coefficient: reference temperature [K]
    double e_p = 0.0;       // elastic modulus [MPa]
    double poisson = 0.0;   // Poisson ratio [-]
    double clte = 0.0;      // coefficient of linear thermal expansion [1/K]
    double uoi = 0.0;       // un-oriented refractive index [-]
    double fsc = 0.0;       // flow-induced stress-optical coefficient [cm^2/dyne]
    double tsc = 0.0;       // thermally-induced stress-optical coefficient [cm^2/dyne]
};

// Properties of a mold (tooling) alloy.  mechanical_resistance and elongation
// are absent on data sheets for some alloys and therefore optional.
struct MoldMaterial {
    std::string name;
    double rho = 0.0;                   // density [kg/m^3]
    double heat_capacity = 0.0;         // [J/(kg C)]
    double elastic_modulus = 0.0;       // [MPa]
    double yield_stress = 0.0;          // [MPa]
    double poisson = 0.0;               // [-]
    double clte = 0.0;                  // [1/K]
    double thermal_diffusivity = 0.0;   // [m^2/s]
    double thermal_conductivity = 0.0;  // [W/(m C)]
    std::optional<double> mechanical_resistance;  // [MPa]
    std::optional<double> elongation;             // [%]
};

// Bounding dimensions of the molded part.  The slab models use
// max_thickness as the governing cooling thickness.
struct PartGeometry {
    double max_thickness = 0.0;  // [m]
    double avg_thickness = 0.0;  // [m]
    double width = 0.0;          // [m]
    double length = 0.0;         // [m]
    double height = 0.0;         // [m]
};

namespace detail {

inline void require_positive(double value, const std::string& record, const char* field) {
    if (!(value > 0.0)) {
        throw ValidationError(record + ": field '" + field + "' must be > 0, got " +
                              std::to_string(value));
    }
}

}  // namespace detail

inline void validate(const ThermoplasticMaterial& m) {
    const std::string record = "thermoplastic '" + m.name + "'";
    if (m.name.empty()) throw ValidationError("thermoplastic record: field 'name' must be non-empty");
    detail::require_positive(m.alpha_p, record, "alpha_p");
    detail::require_positive(m.rho_p, record, "rho_p");
    detail::require_positive(m.c_p, record, "c_p");
    detail::require_positive(m.b1, record, "b1");
    detail::require_positive(m.b3, record, "b3");
    detail::require_positive(m.b4, record, "b4");
    detail::require_positive(m.b5, record, "b5");
    detail::require_positive(m.e_p, record, "e_p");
    if (!(m.poisson > 0.0 && m.poisson < 0.5)) {
        throw ValidationError(record + ": field 'poisson' must lie in (0, 0.5)");
    }
    if (!(m.t_mold < m.t_eject && m.t_eject < m.t_freeze && m.t_freeze < m.t_melt)) {
        throw ValidationError(record +
                              ": temperatures must satisfy t_mold < t_eject < t_freeze < t_melt");
    }
}

inline void validate(const MoldMaterial& m) {
    const std::string record = "mold material '" + m.name + "'";
    if (m.name.empty()) throw ValidationError("mold material record: field 'name' must be non-empty");
    detail::require_positive(m.rho, record, "rho");
    detail::require_positive(m.heat_capacity, record, "heat_capacity");
    detail::require_positive(m.elastic_modulus, record, "elastic_modulus");
    detail::require_positive(m.yield_stress, record, "yield_stress");
    detail::require_positive(m.clte, record, "clte");
    detail::require_positive(m.thermal_diffusivity, record, "thermal_diffusivity");
    detail::require_positive(m.thermal_conductivity, record, "thermal_conductivity");
    if (!(m.poisson > 0.0 && m.poisson < 0.5)) {
        throw ValidationError(record + ": field 'poisson' must lie in (0, 0.5)");
    }
    if (m.mechanical_resistance) detail::require_positive(*m.mechanical_resistance, record, "mechanical_resistance");
    if (m.elongation) detail::require_positive(*m.elongation, record, "elongation");
}

inline void validate(const PartGeometry& g) {
    const std::string record = "part geometry";
    detail::require_positive(g.max_thickness, record, "max_thickness");
    detail::require_positive(g.avg_thickness, record, "avg_thickness");
    detail::require_positive(g.width, record, "width");
    detail::require_positive(g.length, record, "length");
    detail::require_positive(g.height, record, "height");
    if (g.avg_thickness > g.max_thickness) {
        throw ValidationError(record + ": field 'avg_thickness' must not exceed max_thickness");
    }
}

// Ratio of governing to average wall thickness; a gauge of how non-uniform
// the part is (1 = uniform plate).
inline double thickness_ratio(const PartGeometry& g) {
    validate(g);
    return g.max_thickness / g.avg_thickness;
}

}  // namespace moldcool
