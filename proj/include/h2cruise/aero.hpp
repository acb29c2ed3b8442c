#pragma once

#include <cmath>

#include "h2cruise/atmosphere.hpp"
#include "h2cruise/errors.hpp"

namespace h2cruise {

// Airframe constants. All SI: areas m^2, weights N.
struct AircraftParams {
    double wing_area = 0.0;       // S, m^2
    double cd0 = 0.0;             // zero-lift drag coefficient
    double k_induced = 0.0;       // induced drag constant K
    double initial_weight = 0.0;  // W0, N
    double fuel_weight = 0.0;     // usable fuel weight, N

    double dry_weight() const { return initial_weight - fuel_weight; }
};

namespace detail {
inline void require_positive_speed(double v) {
    if (!(v > 0.0)) {
        throw DomainError("speed must be positive, got " + std::to_string(v));
    }
}
}  // namespace detail

/// Steady-cruise drag polar: D = 1/2 CD0 rho S v^2 + 2 K w^2 / (rho S v^2).
inline double drag(const AircraftParams& params, const Environment& env,
                   double v, double w) {
    detail::require_positive_speed(v);
    if (!(w > 0.0)) {
        throw DomainError("weight must be positive, got " + std::to_string(w));
    }
    const double q_area = env.air_density * params.wing_area;
    return 0.5 * params.cd0 * q_area * v * v +
           2.0 * params.k_induced * w * w / (q_area * v * v);
}

/// dD/dv = CD0 rho S v - 4 K w^2 / (rho S v^3).
inline double drag_dv(const AircraftParams& params, const Environment& env,
                      double v, double w) {
    detail::require_positive_speed(v);
    const double q_area = env.air_density * params.wing_area;
    return params.cd0 * q_area * v -
           4.0 * params.k_induced * w * w / (q_area * v * v * v);
}

/// dD/dw = 4 K w / (rho S v^2).
inline double drag_dw(const AircraftParams& params, const Environment& env,
                      double v, double w) {
    detail::require_positive_speed(v);
    const double q_area = env.air_density * params.wing_area;
    return 4.0 * params.k_induced * w / (q_area * v * v);
}

/// Speed of minimum drag, where parasite and induced drag are equal.
inline double min_drag_speed(const AircraftParams& params,
                             const Environment& env, double w) {
    const double q_area = env.air_density * params.wing_area;
    return std::pow(4.0 * params.k_induced * w * w / (params.cd0 * q_area * q_area),
                    0.25);
}

}  // namespace h2cruise
