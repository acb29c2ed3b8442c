#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "h2cruise/aero.hpp"
#include "h2cruise/atmosphere.hpp"
#include "h2cruise/fuelcell.hpp"
#include "h2cruise/trajectory.hpp"

namespace h2cruise {

// Trade-off between time cost and fuel cost. cost_index = c_time/c_fuel in
// N/s when the operating cost integrand is C_t + C_H * (fuel weight rate).
struct CostModel {
    double cost_index = 0.0;       // C_I, N/s
    std::optional<double> c_time;  // C_t, cost per second
    std::optional<double> c_fuel;  // C_H, cost per N of fuel

    static CostModel from_index(double ci);
    static CostModel from_rates(double c_time, double c_fuel);
};

enum class RootRejection {
    kNegative,               // nonpositive speed
    kDiscriminantViolating,  // outside the stack power envelope
    kSpuriousFromSquaring,   // polynomial root that fails the unsquared equation
    kNotAMinimum,            // stationary point that is not a local minimum of H
};

const char* to_string(RootRejection reason);

struct RejectedRoot {
    double v = 0.0;
    RootRejection reason{};
};

// Output of the optimal-speed solve with full root diagnostics.
struct SpeedSolution {
    double v_opt = 0.0;             // m/s
    double residual = 0.0;          // optimality equation value at v_opt
    std::vector<double> all_real_roots;
    std::vector<RejectedRoot> rejected_roots;
    double j_w = 0.0;               // costate the solve was run at
    double hamiltonian_value = 0.0; // H at v_opt with J_x eliminated
};

// Shooting output: converged initial costate and the trajectory flown with it.
struct ShootingResult {
    double j_w0 = 0.0;
    CruiseTrajectory trajectory;
    double terminal_jw = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Discriminant of the current quadratic at a cruise point,
/// E_oc^2 - 4 D r v / (eta n). Positive inside the power envelope.
double discriminant(const FuelCellParams& fc, const AircraftParams& params,
                    const Environment& env, double v, double w);

/// Feasible speed interval [v_lo, v_hi] where the discriminant is positive at
/// weight w, located by bisection on the discriminant itself. Throws
/// InfeasiblePowerError when no speed is feasible.
std::pair<double, double> feasible_speed_range(const FuelCellParams& fc,
                                               const AircraftParams& params,
                                               const Environment& env, double w);

/// Left-hand side of the cruise-speed optimality equation:
///   (1+J_W) (M_H g / 2F) [ n (E_oc - X)/(2r) - (D_v v^2 + D v)/(eta X) ] + C_I
/// with X = sqrt(E_oc^2 - 4 D r v/(eta n)). The optimal speed is a positive
/// zero of this expression. Throws when the discriminant is nonpositive.
double optimality_residual(const FuelCellParams& fc, const AircraftParams& params,
                           const Environment& env, const CostModel& cost,
                           double v, double w, double j_w);

/// Coefficients c[0..8] (low to high) of the degree-8 polynomial in v obtained
/// from the optimality equation by isolating the square-root term, squaring,
/// and clearing the 1/v powers. Every admissible zero of the optimality
/// equation is a root of this polynomial; squaring can add spurious roots.
///
/// With c_par = CD0 rho S / 2, c_ind = 2 K w^2/(rho S), A = (1+J_W) M_H g/(2F),
/// alpha = A n/(2r), beta = 4r/(eta n), b = alpha E_oc + C_I:
///   S(v)  = (A c_par/eta) v^4 + alpha E_oc^2 v - 3 (A c_ind/eta)
///   P(v)  = -beta c_par v^4 + E_oc^2 v - beta c_ind      (= v X^2)
///   poly  = S(v)^2 - b^2 v P(v)
Eigen::VectorXd polynomial_coefficients(const FuelCellParams& fc,
                                        const AircraftParams& params,
                                        const Environment& env,
                                        const CostModel& cost, double w,
                                        double j_w);

/// Pointwise cost rate per unit distance, (weight_rate + C_I)/v. Used to pick
/// among multiple admissible roots.
double doc_rate_per_distance(const FuelCellParams& fc, const AircraftParams& params,
                             const Environment& env, const CostModel& cost,
                             double v, double w);

/// Solve the optimality equation for cruise speed at fixed weight and costate
/// (j_w = 0 gives the suboptimal schedule). All real roots of the degree-8
/// polynomial are extracted via the companion matrix, filtered (positive,
/// inside the envelope, unsquared residual below 1e-6*max(1, C_I), local
/// minimum of H), and the survivor with the lowest per-distance cost rate is
/// returned; ties resolve to the smaller speed. Throws NoSolutionError when no
/// admissible root exists and InfeasiblePowerError when the whole speed axis
/// is outside the envelope.
SpeedSolution solve_speed(const FuelCellParams& fc, const AircraftParams& params,
                          const Environment& env, const CostModel& cost, double w,
                          double j_w = 0.0);

/// Position costate J_x that makes dH/dv vanish at (v, w, j_w):
///   J_x = -(1+J_W) M_H g (D_v v + D) / (2 eta F X).
double costate_jx(const FuelCellParams& fc, const AircraftParams& params,
                  const Environment& env, double v, double w, double j_w);

/// Cruise Hamiltonian
///   H = (1+J_W) n M_H g [E_oc - X]/(4 r F) + J_x v + C_I.
/// Vanishes along optimal trajectories (free terminal time).
double hamiltonian(const FuelCellParams& fc, const AircraftParams& params,
                   const Environment& env, const CostModel& cost, double v,
                   double w, double j_x, double j_w);

/// -dH/dW = -(1+J_W) M_H g v D_w / (2 F eta X).
double costate_rate(const FuelCellParams& fc, const AircraftParams& params,
                    const Environment& env, double v, double w, double j_w);

/// Sensitivity of the fuel weight rate to aircraft weight,
/// d(weight_rate)/dW = M_H g v D_w / (2 F eta X). The weight costate of the
/// decreasing-weight cruise dynamics evolves as dJ_W/dt = (1+J_W) * this,
/// which keeps the Hamiltonian conserved along shooting trajectories.
double weight_rate_dw(const FuelCellParams& fc, const AircraftParams& params,
                      const Environment& env, double v, double w);

/// Single-variable shooting on the initial weight costate J_W(0). Each
/// integration step solves the optimality equation at the current (W, J_W),
/// advances x' = v, W' = -weight_rate, J_W' = (1+J_W)*weight_rate_dw by
/// classical RK4, and stops exactly on x = x_d. Secant iteration drives the
/// transversality condition J_W(t_f) = 0 (terminal weight is free). Throws
/// ConvergenceError with the iteration history after max_iterations.
ShootingResult solve_shooting(const FuelCellParams& fc, const AircraftParams& params,
                              const Environment& env, const CostModel& cost,
                              double x_d, double w0, double tol = 1e-10,
                              int max_iterations = 25, int base_steps = 2000);

}  // namespace h2cruise
