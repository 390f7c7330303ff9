#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "moldcool/errors.hpp"

namespace moldcool {

// One-dimensional cooling of a plastic slab between mold walls.
//
// A slab of thickness L starts uniformly at t_melt; both faces are held at
// t_wall.  With the reduced temperature theta = (T - t_wall)/(t_melt - t_wall)
// and the Fourier number Fo = alpha * t / L^2, the midplane follows the
// separation-of-variables series
//
//   theta(Fo) = (4/pi) * sum_{m>=0} (-1)^m / (2m+1) * exp(-(2m+1)^2 pi^2 Fo)
//
// Retaining the first mode only and solving theta = theta_eject for time
// gives the closed-form cooling-time estimate
//
//   t_cool = L^2 / (pi^2 alpha) * ln[ (4/pi) * (t_melt - t_wall) / (t_eject - t_wall) ]
//
// The wall temperature is a single parameter: callers decide whether the
// mold-surface or the coolant temperature is the better boundary value for
// their question.

struct CoolingProblem {
    double thickness = 0.0;  // governing slab thickness L [m], > 0
    double t_melt = 0.0;     // initial (melt) temperature [C]
    double t_wall = 0.0;     // wall temperature held by the mold [C]
    double t_eject = 0.0;    // midplane temperature at which the part can eject [C]
    double alpha_p = 0.0;    // thermal diffusivity of the polymer [m^2/s], > 0
};

inline void validate(const CoolingProblem& p) {
    if (!(p.thickness > 0.0)) throw ValidationError("CoolingProblem: field 'thickness' must be > 0");
    if (!(p.alpha_p > 0.0)) throw ValidationError("CoolingProblem: field 'alpha_p' must be > 0");
    if (!(p.t_wall < p.t_eject && p.t_eject < p.t_melt)) {
        throw ValidationError("CoolingProblem: temperatures must satisfy t_wall < t_eject < t_melt");
    }
}

// Truncation control for the midplane series.  Summation stops once the next
// term would fall below rel_tolerance * |partial sum|, or at max_terms.
struct SeriesOptions {
    int max_terms = 200;
    double rel_tolerance = 1e-12;
};

inline void validate(const SeriesOptions& o) {
    if (o.max_terms < 1) throw ValidationError("SeriesOptions: field 'max_terms' must be >= 1");
    if (!(o.rel_tolerance > 0.0)) {
        throw ValidationError("SeriesOptions: field 'rel_tolerance' must be > 0");
    }
}

struct MidplaneTemperature {
    double temperature_c = 0.0;
    int terms_used = 0;
};

// Midplane temperature of the slab at elapsed time t >= 0.  Uses only
// thickness, t_melt, t_wall and alpha_p from the problem.
inline MidplaneTemperature midplane_temperature(const CoolingProblem& p, double time_s,
                                                const SeriesOptions& options = {}) {
    if (!(p.thickness > 0.0)) throw ValidationError("midplane_temperature: field 'thickness' must be > 0");
    if (!(p.alpha_p > 0.0)) throw ValidationError("midplane_temperature: field 'alpha_p' must be > 0");
    if (time_s < 0.0) throw ValidationError("midplane_temperature: time must be >= 0");
    validate(options);

    constexpr double pi = std::numbers::pi;
    const double fo = p.alpha_p * time_s / (p.thickness * p.thickness);

    double sum = 0.0;
    int terms = 0;
    for (int m = 0; m < options.max_terms; ++m) {
        const double k = 2.0 * m + 1.0;
        const double term = std::exp(-k * k * pi * pi * fo) / k;
        sum += (m % 2 == 0) ? term : -term;
        terms = m + 1;
        const double k_next = k + 2.0;
        const double next_term = std::exp(-k_next * k_next * pi * pi * fo) / k_next;
        if (next_term < options.rel_tolerance * std::abs(sum)) break;
    }
    const double theta = (4.0 / pi) * sum;
    return {p.t_wall + (p.t_melt - p.t_wall) * theta, terms};
}

// Closed-form (one-mode) cooling time.  Throws when t_eject <= t_wall (the
// logarithm's singularity: such a midplane temperature is never reached) and
// when the one-mode midplane already starts at or below t_eject.
inline double cooling_time(const CoolingProblem& p) {
    if (!(p.thickness > 0.0)) throw ValidationError("cooling_time: field 'thickness' must be > 0");
    if (!(p.alpha_p > 0.0)) throw ValidationError("cooling_time: field 'alpha_p' must be > 0");
    if (!(p.t_eject > p.t_wall)) {
        throw ValidationError("cooling_time: t_eject must exceed t_wall; the wall-held slab "
                              "never cools below t_wall");
    }
    if (!(p.t_melt > p.t_wall)) {
        throw ValidationError("cooling_time: t_melt must exceed t_wall");
    }

    constexpr double pi = std::numbers::pi;
    const double log_arg = (4.0 / pi) * (p.t_melt - p.t_wall) / (p.t_eject - p.t_wall);
    if (log_arg < 1.0) {
        throw ValidationError("cooling_time: part is already ejectable at t = 0 in the "
                              "one-mode model (log argument < 1)");
    }
    return p.thickness * p.thickness / (pi * pi * p.alpha_p) * std::log(log_arg);
}

// Explicit finite-difference solution of dT/dt = alpha * d2T/dz2 on [0, L]:
// Dirichlet walls at t_wall, uniform initial condition t_melt, time step
// dt = safety * dz^2 / alpha (stable for safety <= 0.5).  Returns the first
// time the midplane crosses t_eject, linearly interpolated within the
// crossing step.  Deliberately naive -- an independent check on the series
// and the closed form, not a production solver.
inline double fd_cooling_oracle(const CoolingProblem& p, int nodes = 201, double safety = 0.4) {
    validate(p);
    if (nodes < 11 || nodes % 2 == 0) {
        throw ValidationError("fd_cooling_oracle: nodes must be odd and >= 11, got " +
                              std::to_string(nodes));
    }
    if (!(safety > 0.0 && safety <= 0.5)) {
        throw ValidationError("fd_cooling_oracle: safety must lie in (0, 0.5]");
    }

    const double dz = p.thickness / (nodes - 1);
    const double dt = safety * dz * dz / p.alpha_p;
    const double deadline = 10.0 * cooling_time(p);
    const int mid = (nodes - 1) / 2;

    std::vector<double> now(static_cast<std::size_t>(nodes), p.t_melt);
    std::vector<double> next(static_cast<std::size_t>(nodes), p.t_melt);
    now.front() = now.back() = p.t_wall;
    next.front() = next.back() = p.t_wall;

    double time = 0.0;
    double prev_mid = p.t_melt;
    while (time <= deadline) {
        for (int i = 1; i + 1 < nodes; ++i) {
            next[i] = now[i] + safety * (now[i - 1] - 2.0 * now[i] + now[i + 1]);
        }
        now.swap(next);
        time += dt;
        const double cur_mid = now[mid];
        if (cur_mid <= p.t_eject) {
            const double frac = (prev_mid - p.t_eject) / (prev_mid - cur_mid);
            return time - dt + frac * dt;
        }
        prev_mid = cur_mid;
    }
    throw ValidationError("fd_cooling_oracle: midplane did not reach t_eject within 10x the "
                          "closed-form estimate");
}

}  // namespace moldcool
