#include "h2cruise/integrator.hpp"

#include <array>
#include <cmath>
#include <string>

#include "h2cruise/errors.hpp"

namespace h2cruise {

namespace {

struct Derivatives {
    double xdot = 0.0;
    double wdot = 0.0;   // negative: weight decreases as fuel burns
    double jwdot = 0.0;
    double v = 0.0;
    // quadrature integrands
    double current = 0.0;         // stack current I
    double drag_power = 0.0;      // D*v
    double electric_power = 0.0;  // eta*n*U_c*I
};

}  // namespace

CruiseTrajectory integrate_cruise(const FuelCellParams& fc,
                                  const AircraftParams& params,
                                  const Environment& env, const CostModel& cost,
                                  double x_d, double w0, double jw0,
                                  CostateMode mode, int base_steps) {
    if (!(x_d > 0.0)) {
        throw DomainError("target distance must be positive");
    }
    const double w_floor = params.dry_weight();

    auto rhs = [&](double w, double j_w) {
        Derivatives d;
        const double j_w_solve = (mode == CostateMode::kEvolving) ? j_w : jw0;
        d.v = solve_speed(fc, params, env, cost, w, j_w_solve).v_opt;
        d.xdot = d.v;
        d.wdot = -weight_rate(fc, params, env, d.v, w);
        d.jwdot = (mode == CostateMode::kEvolving)
                      ? (1.0 + j_w) * weight_rate_dw(fc, params, env, d.v, w)
                      : 0.0;
        d.drag_power = drag(params, env, d.v, w) * d.v;
        d.current = stack_current(fc, d.drag_power);
        d.electric_power = fc.efficiency * fc.n_cells *
                           cell_voltage(fc, d.current) * d.current;
        return d;
    };

    CruiseTrajectory traj;
    double t = 0.0, x = 0.0, w = w0, j_w = jw0;

    Derivatives d0 = rhs(w, j_w);
    traj.samples.push_back({t, x, w, d0.v, j_w});

    const double h = (x_d / d0.v) / static_cast<double>(base_steps);
    const long max_steps = 10L * base_steps;
    long steps = 0;

    while (x < x_d * (1.0 - 1e-15)) {
        if (++steps > max_steps) {
            throw ConvergenceError("cruise integration exceeded " +
                                   std::to_string(max_steps) + " steps");
        }
        const Derivatives k1 = rhs(w, j_w);
        double dt = std::min(h, (x_d - x) / k1.v);

        Derivatives k2, k3, k4;
        double x1 = 0.0, w1 = 0.0, jw1 = 0.0;
        // shorten the final step so the trajectory lands on x_d exactly
        for (int attempt = 0; attempt < 4; ++attempt) {
            k2 = rhs(w + 0.5 * dt * k1.wdot, j_w + 0.5 * dt * k1.jwdot);
            k3 = rhs(w + 0.5 * dt * k2.wdot, j_w + 0.5 * dt * k2.jwdot);
            k4 = rhs(w + dt * k3.wdot, j_w + dt * k3.jwdot);
            const double sixth = dt / 6.0;
            x1 = x + sixth * (k1.xdot + 2.0 * k2.xdot + 2.0 * k3.xdot + k4.xdot);
            w1 = w + sixth * (k1.wdot + 2.0 * k2.wdot + 2.0 * k3.wdot + k4.wdot);
            jw1 = j_w + sixth * (k1.jwdot + 2.0 * k2.jwdot + 2.0 * k3.jwdot + k4.jwdot);
            if (dt >= h * (1.0 - 1e-12) || std::abs(x1 - x_d) <= 1e-9) break;
            dt *= (x_d - x) / (x1 - x);
        }

        const double sixth = dt / 6.0;
        traj.charge_per_cell +=
            sixth * (k1.current + 2.0 * k2.current + 2.0 * k3.current + k4.current);
        traj.drag_energy += sixth * (k1.drag_power + 2.0 * k2.drag_power +
                                     2.0 * k3.drag_power + k4.drag_power);
        traj.electric_energy +=
            sixth * (k1.electric_power + 2.0 * k2.electric_power +
                     2.0 * k3.electric_power + k4.electric_power);

        t += dt;
        x = x1;
        w = w1;
        j_w = jw1;

        if (w < w_floor) {
            throw RangeExceededError(
                "fuel exhausted at x = " + std::to_string(x) + " m of " +
                std::to_string(x_d) + " m (weight " + std::to_string(w) +
                " N reached dry weight " + std::to_string(w_floor) + " N)");
        }
        const double v_now = solve_speed(fc, params, env, cost, w,
                                         mode == CostateMode::kEvolving ? j_w : jw0)
                                 .v_opt;
        traj.samples.push_back({t, x, w, v_now, j_w});
    }

    traj.t_f = t;
    traj.final_weight = w;
    traj.final_jw = j_w;
    return traj;
}

}  // namespace h2cruise
