#pragma once

#include <cmath>

#include "moldcool/errors.hpp"
#include "moldcool/materials.hpp"

namespace moldcool {

// Tait equation of state for a molten / rubbery polymer, single coefficient
// set (b1..b5):
//
//   v(T,P)  = v_o(T) * [1 - C * ln(1 + P / beta(T))]
//   v_o(T)  = b1 + b2 * (T - b5)
//   beta(T) = b3 * exp(-b4 * (T - b5))
//
// with the universal constant C = 0.0894.  T in Kelvin, P in Pascal.
// A single coefficient set cannot also represent the glassy branch; results
// below ambient or above the melt temperature carry within_validity = false
// rather than being clamped or rejected.

inline constexpr double tait_universal_constant = 0.0894;

// Temperature/pressure state at which specific volume is evaluated.
struct PvtState {
    double temperature_k = 0.0;  // [K], > 0
    double pressure_pa = 0.0;    // [Pa], >= 0
};

inline void validate(const PvtState& s) {
    if (!(s.temperature_k > 0.0)) {
        throw ValidationError("PvtState: field 'temperature_k' must be > 0");
    }
    if (s.pressure_pa < 0.0) {
        throw ValidationError("PvtState: field 'pressure_pa' must be >= 0");
    }
}

// Ambient reference state for shrinkage: 20 C, atmospheric (gauge 0).
inline constexpr PvtState shrinkage_reference_state{293.15, 0.0};

// Specific volume plus a marker for the single-coefficient-set validity
// window [20 C, t_melt].  Out-of-window values are extrapolations.
struct VolumeResult {
    double value = 0.0;          // [m^3/kg]
    bool within_validity = true;
};

// Volumetric and linear shrinkage between the ambient reference state and a
// packing/cooling state.
struct ShrinkageResult {
    double v_ref = 0.0;     // [m^3/kg] at the ambient reference state
    double v_state = 0.0;   // [m^3/kg] at the packing/cooling state
    double r_v = 0.0;       // volumetric ratio v_ref / v_state
    double s_linear = 0.0;  // isotropic linear shrinkage 1 - cbrt(r_v)
    bool within_validity = true;
};

namespace detail {

inline bool tait_within_validity(const ThermoplasticMaterial& m, double temperature_k) {
    return temperature_k >= shrinkage_reference_state.temperature_k &&
           temperature_k <= kelvin(m.t_melt);
}

}  // namespace detail

// Zero-pressure specific volume v_o(T).  Throws only when the linear form
// has left the physical range entirely (v <= 0).
inline VolumeResult reference_volume(const ThermoplasticMaterial& m, double temperature_k) {
    if (!(temperature_k > 0.0)) {
        throw ValidationError("reference_volume: temperature must be > 0 K");
    }
    const double v = m.b1 + m.b2 * (temperature_k - m.b5);
    if (!(v > 0.0)) {
        throw ValidationError("reference_volume: non-positive specific volume at " +
                              std::to_string(temperature_k) +
                              " K; temperature is far outside the model range");
    }
    return {v, detail::tait_within_validity(m, temperature_k)};
}

// Pressure-sensitivity parameter beta(T).  Positive for all T.
inline double compressibility(const ThermoplasticMaterial& m, double temperature_k) {
    if (!(temperature_k > 0.0)) {
        throw ValidationError("compressibility: temperature must be > 0 K");
    }
    return m.b3 * std::exp(-m.b4 * (temperature_k - m.b5));
}

// Specific volume at a temperature/pressure state.  At P = 0 this returns
// exactly reference_volume(T).
inline VolumeResult specific_volume(const ThermoplasticMaterial& m, const PvtState& state) {
    validate(state);
    const VolumeResult ref = reference_volume(m, state.temperature_k);
    if (state.pressure_pa == 0.0) return ref;
    const double pressure_term =
        std::log(1.0 + state.pressure_pa / compressibility(m, state.temperature_k));
    const double v = ref.value * (1.0 - tait_universal_constant * pressure_term);
    if (!(v > 0.0)) {
        throw ValidationError("specific_volume: non-positive specific volume; pressure " +
                              std::to_string(state.pressure_pa) + " Pa is outside the model range");
    }
    return {v, ref.within_validity};
}

// Shrinkage of material frozen at pack_state once it has relaxed to the
// ambient reference state.  s_linear is negative when the packed volume is
// below the ambient one (over-packing).
inline ShrinkageResult shrinkage(const ThermoplasticMaterial& m, const PvtState& pack_state) {
    const VolumeResult ref = specific_volume(m, shrinkage_reference_state);
    const VolumeResult at_state = specific_volume(m, pack_state);
    ShrinkageResult r;
    r.v_ref = ref.value;
    r.v_state = at_state.value;
    r.r_v = ref.value / at_state.value;
    r.s_linear = 1.0 - std::cbrt(r.r_v);
    r.within_validity = ref.within_validity && at_state.within_validity;
    return r;
}

}  // namespace moldcool
