#pragma once

#include <string>
#include <vector>

#include "h2cruise/optimizer.hpp"
#include "h2cruise/trajectory.hpp"

namespace h2cruise {

enum class Mode { kSuboptimal, kOptimal };

const char* to_string(Mode mode);

// Integrated cruise mission.
struct MissionResult {
    double t_f = 0.0;            // s
    double fuel_burned_n = 0.0;  // N
    double fuel_burned_kg = 0.0; // kg
    double doc = 0.0;            // C_t*t_f + C_H*fuel_burned_n
    std::vector<CruiseState> samples;
    Mode mode = Mode::kSuboptimal;
    double j_w0 = 0.0;           // converged initial costate (0 in suboptimal)
    // quadratures for conservation checks
    double charge_per_cell = 0.0;   // integral of I dt, C
    double drag_energy = 0.0;       // integral of D*v dt, J
    double electric_energy = 0.0;   // integral of eta*n*U_c*I dt, J
};

struct ParetoPoint {
    double cost_index = 0.0;
    double v_avg = 0.0;          // x_d/t_f, m/s
    double t_f = 0.0;            // s
    double fuel_burned_kg = 0.0; // kg
};

// One entry of a cost-index sweep. Failed points carry the error text and
// leave the numeric fields zeroed.
struct SweepRow {
    double cost_index = 0.0;
    double v_initial = 0.0;      // solved speed at W0, m/s
    ParetoPoint pareto;
    double doc = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool all_ok = false;
};

// Time/fuel deltas between the sweep missions bracketing two target speeds,
// printed next to the published HY4 case-study figures for those speeds.
struct SpeedBandReport {
    double v_lo_kmh = 151.0;
    double v_hi_kmh = 171.0;
    bool lo_found = false;
    bool hi_found = false;
    SweepRow lo;                   // first row with v_initial >= v_lo
    SweepRow hi;                   // first row with v_initial >= v_hi
    double delta_tf_s = 0.0;       // t_f(lo) - t_f(hi)
    double delta_fuel_kg = 0.0;    // fuel(hi) - fuel(lo)
    bool kinematics_consistent = false;  // |t_f - x_d/v_initial| < 1% both rows
    bool matches_reference = false;      // within the published figures
};

// Published HY4 case-study figures for the 151 -> 171 km/h speed increase.
inline constexpr double kReferenceDeltaTimeS = 20.0 * 60.0;
inline constexpr double kReferenceDeltaFuelKg = 5.0;

/// Fly the mission from x = 0 to x_d. Suboptimal mode re-solves the speed at
/// the current weight every step with J_W = 0; optimal mode runs the shooting
/// solver and flies its trajectory. DOC uses (C_t, C_H) when both are given,
/// otherwise (C_I, 1).
MissionResult simulate(const FuelCellParams& fc, const AircraftParams& params,
                       const Environment& env, const CostModel& cost, double x_d,
                       Mode mode, int base_steps = 2000);

/// One solve + mission per grid point. The grid must be nonempty, nonnegative
/// and strictly increasing. Per-point failures are recorded in the row and the
/// sweep continues.
SweepResult sweep_cost_index(const FuelCellParams& fc, const AircraftParams& params,
                             const Environment& env,
                             const std::vector<double>& ci_grid, double x_d,
                             Mode mode, int base_steps = 2000);

/// Locate the sweep rows bracketing the two target speeds and report the
/// time/fuel deltas between them.
SpeedBandReport speed_band_report(const SweepResult& sweep, double x_d,
                                  double v_lo_kmh = 151.0, double v_hi_kmh = 171.0);

/// Render the report as human-readable text lines.
std::string format_speed_band_report(const SpeedBandReport& report);

}  // namespace h2cruise
