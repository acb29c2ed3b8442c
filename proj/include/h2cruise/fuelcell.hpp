#pragma once

#include <cmath>
#include <string>

#include "h2cruise/aero.hpp"
#include "h2cruise/atmosphere.hpp"
#include "h2cruise/errors.hpp"

namespace h2cruise {

inline constexpr double kMolarMassH2 = 2.016e-3;    // kg/mol, molecular hydrogen
inline constexpr double kFaraday = 96485.332;       // C/mol

// Stack constants. Voltage/resistance are per cell; cells share one current.
struct FuelCellParams {
    double n_cells = 0.0;              // cells in the stack
    double internal_resistance = 0.0;  // r, Ohm per cell
    double open_circuit_voltage = 0.0; // E_oc, V per cell
    double efficiency = 0.0;           // eta, propulsion chain, (0, 1]
    double molar_mass_h2 = kMolarMassH2;
    double faraday = kFaraday;
};

// Envelope report: stack can deliver at most E_oc^2*eta*n/(4r) of net power.
struct PowerFeasibility {
    double max_net_power = 0.0;   // W
    double requested_power = 0.0; // W
    bool feasible = false;
};

/// Largest net (propulsive) power the stack can deliver, E_oc^2*eta*n/(4r).
inline double max_net_power(const FuelCellParams& fc) {
    return fc.open_circuit_voltage * fc.open_circuit_voltage * fc.efficiency *
           fc.n_cells / (4.0 * fc.internal_resistance);
}

namespace detail {

// Discriminant of the current quadratic, E_oc^2 - 4 r P/(eta n). Round-off
// within a 1e-12 relative band below zero is clamped to zero; anything lower
// is a genuine envelope violation.
inline double clamped_discriminant(const FuelCellParams& fc, double net_power) {
    const double e2 = fc.open_circuit_voltage * fc.open_circuit_voltage;
    const double disc =
        e2 - 4.0 * fc.internal_resistance * net_power / (fc.efficiency * fc.n_cells);
    if (disc >= 0.0) return disc;
    if (disc > -1e-12 * e2) return 0.0;
    throw InfeasiblePowerError(
        "net power " + std::to_string(net_power) + " W exceeds stack envelope " +
            std::to_string(max_net_power(fc)) + " W",
        max_net_power(fc), net_power);
}

}  // namespace detail

/// Faraday charge produced in a single cell by consuming m_h kg of hydrogen,
/// Q = 2 F m_h / M_H (two electrons per H2 molecule).
inline double charge_from_mass(const FuelCellParams& fc, double m_h) {
    if (m_h < 0.0) {
        throw DomainError("hydrogen mass must be nonnegative, got " +
                          std::to_string(m_h));
    }
    return 2.0 * fc.faraday * m_h / fc.molar_mass_h2;
}

/// Stack current delivering the given net propulsive power: the smaller root
/// of r I^2 - E_oc I + P/(eta n) = 0. Smaller root keeps Joule losses down.
inline double stack_current(const FuelCellParams& fc, double net_power) {
    if (net_power < 0.0) {
        throw DomainError("net power must be nonnegative, got " +
                          std::to_string(net_power));
    }
    const double disc = detail::clamped_discriminant(fc, net_power);
    return (fc.open_circuit_voltage - std::sqrt(disc)) /
           (2.0 * fc.internal_resistance);
}

/// Cell operating voltage under the affine (ohmic) model, U_c = E_oc - I r.
inline double cell_voltage(const FuelCellParams& fc, double current) {
    const double uc = fc.open_circuit_voltage - current * fc.internal_resistance;
    if (!(uc > 0.0)) {
        throw DomainError("cell voltage nonpositive at I = " +
                          std::to_string(current) + " A; outside ohmic region");
    }
    return uc;
}

/// Magnitude of the aircraft weight decrease rate in cruise, N/s:
/// n M_H g [E_oc - sqrt(E_oc^2 - 4 D r v/(eta n))]/(4 r F).
/// The caller integrates W(t+dt) = W(t) - weight_rate*dt.
inline double weight_rate(const FuelCellParams& fc, const AircraftParams& params,
                          const Environment& env, double v, double w) {
    const double d = drag(params, env, v, w);
    const double disc = detail::clamped_discriminant(fc, d * v);
    return fc.n_cells * fc.molar_mass_h2 * env.gravity *
           (fc.open_circuit_voltage - std::sqrt(disc)) /
           (4.0 * fc.internal_resistance * fc.faraday);
}

/// Time rate of change of single-cell charge (negative while current is
/// drawn), via the expanded form with the drag polar substituted in:
///   Qdot = -E_oc/(2r)
///          + sqrt((eta n E_oc)^2 - 2 eta n r (CD0 rho S v^3 + 4 K w^2/(rho S v)))
///            / (2 eta n r).
/// Algebraically equal to -stack_current(D v); kept as a separate route so the
/// identity can be checked.
inline double charge_rate(const FuelCellParams& fc, const AircraftParams& params,
                          const Environment& env, double v, double w) {
    detail::require_positive_speed(v);
    const double q_area = env.air_density * params.wing_area;
    const double power_term = params.cd0 * q_area * v * v * v +
                              4.0 * params.k_induced * w * w / (q_area * v);
    const double eta_n = fc.efficiency * fc.n_cells;
    const double eoc = fc.open_circuit_voltage;
    const double r = fc.internal_resistance;
    double inner = eta_n * eta_n * eoc * eoc - 2.0 * eta_n * r * power_term;
    if (inner < 0.0) {
        if (inner < -1e-12 * eta_n * eta_n * eoc * eoc) {
            throw InfeasiblePowerError(
                "cruise power exceeds stack envelope at v = " + std::to_string(v),
                max_net_power(fc), 0.5 * power_term);
        }
        inner = 0.0;
    }
    return -eoc / (2.0 * r) + std::sqrt(inner) / (2.0 * eta_n * r);
}

/// Envelope check at a cruise point; reports rather than throwing.
inline PowerFeasibility feasibility(const FuelCellParams& fc,
                                    const AircraftParams& params,
                                    const Environment& env, double v, double w) {
    PowerFeasibility result;
    result.max_net_power = max_net_power(fc);
    result.requested_power = drag(params, env, v, w) * v;
    result.feasible = result.requested_power <= result.max_net_power;
    return result;
}

}  // namespace h2cruise
