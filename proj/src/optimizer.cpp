#include "h2cruise/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "h2cruise/integrator.hpp"
#include "h2cruise/log.hpp"
#include "h2cruise/polynomial.hpp"

namespace h2cruise {

CostModel CostModel::from_index(double ci) {
    if (ci < 0.0) {
        throw DomainError("cost_index must be nonnegative, got " + std::to_string(ci));
    }
    CostModel cost;
    cost.cost_index = ci;
    return cost;
}

CostModel CostModel::from_rates(double c_time, double c_fuel) {
    if (!(c_time >= 0.0) || !(c_fuel > 0.0)) {
        throw DomainError("cost rates require c_time >= 0 and c_fuel > 0");
    }
    CostModel cost;
    cost.cost_index = c_time / c_fuel;
    cost.c_time = c_time;
    cost.c_fuel = c_fuel;
    return cost;
}

const char* to_string(RootRejection reason) {
    switch (reason) {
        case RootRejection::kNegative: return "negative";
        case RootRejection::kDiscriminantViolating: return "discriminant-violating";
        case RootRejection::kSpuriousFromSquaring: return "spurious-from-squaring";
        case RootRejection::kNotAMinimum: return "not-a-minimum";
    }
    return "unknown";
}

double discriminant(const FuelCellParams& fc, const AircraftParams& params,
                    const Environment& env, double v, double w) {
    const double eoc = fc.open_circuit_voltage;
    return eoc * eoc - 4.0 * drag(params, env, v, w) * fc.internal_resistance * v /
                           (fc.efficiency * fc.n_cells);
}

std::pair<double, double> feasible_speed_range(const FuelCellParams& fc,
                                               const AircraftParams& params,
                                               const Environment& env, double w) {
    auto disc = [&](double v) { return discriminant(fc, params, env, v, w); };

    // required net power D*v is minimized at v_md/3^(1/4); if the discriminant
    // is negative there the whole speed axis is infeasible
    const double v_center = (params.k_induced > 0.0)
                                ? min_drag_speed(params, env, w) / std::pow(3.0, 0.25)
                                : 1.0;
    double v_mid = v_center;
    if (disc(v_mid) <= 0.0) {
        const double p_req = drag(params, env, v_mid, w) * v_mid;
        throw InfeasiblePowerError(
            "no feasible cruise speed: minimum required net power " +
                std::to_string(p_req) + " W exceeds stack envelope " +
                std::to_string(max_net_power(fc)) + " W",
            max_net_power(fc), p_req);
    }

    // upper edge: expand then bisect on the discriminant
    double hi = v_mid;
    while (disc(hi * 2.0) > 0.0) hi *= 2.0;
    double lo = hi;
    hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (disc(mid) > 0.0 ? lo : hi) = mid;
    }
    const double v_hi = lo;

    // lower edge: with induced drag the discriminant also goes negative at
    // low speed; without it the envelope extends to v -> 0
    double v_lo = 1e-9;
    if (params.k_induced > 0.0) {
        double a = v_mid;
        while (a > 1e-6 && disc(a * 0.5) > 0.0) a *= 0.5;
        if (disc(a * 0.5) <= 0.0) {
            double bad = a * 0.5, good = a;
            for (int i = 0; i < 200 && (good - bad) > 1e-13 * good; ++i) {
                const double mid = 0.5 * (bad + good);
                (disc(mid) > 0.0 ? good : bad) = mid;
            }
            v_lo = good;
        }
    }
    return {v_lo, v_hi};
}

double optimality_residual(const FuelCellParams& fc, const AircraftParams& params,
                           const Environment& env, const CostModel& cost,
                           double v, double w, double j_w) {
    const double disc = discriminant(fc, params, env, v, w);
    if (!(disc > 0.0)) {
        throw InfeasiblePowerError(
            "optimality equation undefined: discriminant nonpositive at v = " +
                std::to_string(v),
            max_net_power(fc), drag(params, env, v, w) * v);
    }
    const double x_term = std::sqrt(disc);
    const double d = drag(params, env, v, w);
    const double dv = drag_dv(params, env, v, w);
    const double a = (1.0 + j_w) * fc.molar_mass_h2 * env.gravity / (2.0 * fc.faraday);
    return a * (fc.n_cells * (fc.open_circuit_voltage - x_term) /
                    (2.0 * fc.internal_resistance) -
                (dv * v * v + d * v) / (fc.efficiency * x_term)) +
           cost.cost_index;
}

Eigen::VectorXd polynomial_coefficients(const FuelCellParams& fc,
                                        const AircraftParams& params,
                                        const Environment& env,
                                        const CostModel& cost, double w,
                                        double j_w) {
    const double q_area = env.air_density * params.wing_area;
    const double c_par = 0.5 * params.cd0 * q_area;
    const double c_ind = 2.0 * params.k_induced * w * w / q_area;
    const double eoc = fc.open_circuit_voltage;
    const double e2 = eoc * eoc;
    const double a = (1.0 + j_w) * fc.molar_mass_h2 * env.gravity / (2.0 * fc.faraday);
    const double alpha = a * fc.n_cells / (2.0 * fc.internal_resistance);
    const double beta = 4.0 * fc.internal_resistance / (fc.efficiency * fc.n_cells);
    const double b = alpha * eoc + cost.cost_index;

    const double s4 = a * c_par / fc.efficiency;       // v^4 term of S(v)
    const double s1 = alpha * e2;                      // v term
    const double s0 = 3.0 * a * c_ind / fc.efficiency; // minus the constant

    Eigen::VectorXd c = Eigen::VectorXd::Zero(9);
    c[8] = s4 * s4;
    c[5] = 2.0 * s4 * s1 + b * b * beta * c_par;
    c[4] = -2.0 * s4 * s0;
    c[2] = s1 * s1 - b * b * e2;
    c[1] = -2.0 * s1 * s0 + b * b * beta * c_ind;
    c[0] = s0 * s0;
    return c;
}

double doc_rate_per_distance(const FuelCellParams& fc, const AircraftParams& params,
                             const Environment& env, const CostModel& cost,
                             double v, double w) {
    return (weight_rate(fc, params, env, v, w) + cost.cost_index) / v;
}

double costate_jx(const FuelCellParams& fc, const AircraftParams& params,
                  const Environment& env, double v, double w, double j_w) {
    const double disc = discriminant(fc, params, env, v, w);
    const double x_term = std::sqrt(disc);
    return -(1.0 + j_w) * fc.molar_mass_h2 * env.gravity *
           (drag_dv(params, env, v, w) * v + drag(params, env, v, w)) /
           (2.0 * fc.efficiency * fc.faraday * x_term);
}

double hamiltonian(const FuelCellParams& fc, const AircraftParams& params,
                   const Environment& env, const CostModel& cost, double v,
                   double w, double j_x, double j_w) {
    const double disc = discriminant(fc, params, env, v, w);
    if (!(disc > 0.0)) {
        throw InfeasiblePowerError(
            "Hamiltonian undefined: discriminant nonpositive at v = " +
                std::to_string(v),
            max_net_power(fc), drag(params, env, v, w) * v);
    }
    const double x_term = std::sqrt(disc);
    return (1.0 + j_w) * fc.n_cells * fc.molar_mass_h2 * env.gravity *
               (fc.open_circuit_voltage - x_term) /
               (4.0 * fc.internal_resistance * fc.faraday) +
           j_x * v + cost.cost_index;
}

double weight_rate_dw(const FuelCellParams& fc, const AircraftParams& params,
                      const Environment& env, double v, double w) {
    const double disc = discriminant(fc, params, env, v, w);
    const double x_term = std::sqrt(disc);
    return fc.molar_mass_h2 * env.gravity * v * drag_dw(params, env, v, w) /
           (2.0 * fc.faraday * fc.efficiency * x_term);
}

double costate_rate(const FuelCellParams& fc, const AircraftParams& params,
                    const Environment& env, double v, double w, double j_w) {
    return -(1.0 + j_w) * weight_rate_dw(fc, params, env, v, w);
}

namespace {

// Local-minimum test: with J_x pinned by the stationarity condition at v, the
// Hamiltonian must rise on both sides. The probe is shrunk near the envelope
// edges so both evaluations stay feasible.
bool is_local_minimum(const FuelCellParams& fc, const AircraftParams& params,
                      const Environment& env, const CostModel& cost, double v,
                      double w, double j_w, double v_lo, double v_hi) {
    double delta = 1e-3 * v;
    delta = std::min(delta, 0.45 * (v_hi - v));
    delta = std::min(delta, 0.45 * (v - v_lo));
    if (!(delta > 0.0)) return false;
    const double j_x = costate_jx(fc, params, env, v, w, j_w);
    const double h0 = hamiltonian(fc, params, env, cost, v, w, j_x, j_w);
    const double hp = hamiltonian(fc, params, env, cost, v + delta, w, j_x, j_w);
    const double hm = hamiltonian(fc, params, env, cost, v - delta, w, j_x, j_w);
    return hp > h0 && hm > h0;
}

// A couple of Newton steps on the unsquared equation to shed the squaring
// round-off; derivative by central difference. Stays inside (v_lo, v_hi).
double polish_on_residual(const FuelCellParams& fc, const AircraftParams& params,
                          const Environment& env, const CostModel& cost, double v,
                          double w, double j_w, double v_lo, double v_hi) {
    const double tol = 1e-12 * std::max(1.0, cost.cost_index);
    for (int it = 0; it < 8; ++it) {
        const double res = optimality_residual(fc, params, env, cost, v, w, j_w);
        if (std::abs(res) <= tol) break;
        const double h = 1e-7 * v;
        const double vp = std::min(v + h, 0.5 * (v + v_hi));
        const double vm = std::max(v - h, 0.5 * (v + v_lo));
        const double slope =
            (optimality_residual(fc, params, env, cost, vp, w, j_w) -
             optimality_residual(fc, params, env, cost, vm, w, j_w)) /
            (vp - vm);
        if (slope == 0.0) break;
        double next = v - res / slope;
        if (!(next > v_lo && next < v_hi)) break;
        if (std::abs(next - v) <= 1e-15 * v) { v = next; break; }
        v = next;
    }
    return v;
}

}  // namespace

SpeedSolution solve_speed(const FuelCellParams& fc, const AircraftParams& params,
                          const Environment& env, const CostModel& cost, double w,
                          double j_w) {
    if (cost.cost_index < 0.0) {
        throw DomainError("cost_index must be nonnegative");
    }
    const auto [v_lo, v_hi] = feasible_speed_range(fc, params, env, w);

    SpeedSolution solution;
    solution.j_w = j_w;

    const Eigen::VectorXd coeffs =
        polynomial_coefficients(fc, params, env, cost, w, j_w);
    solution.all_real_roots = real_polynomial_roots(coeffs);

    const double spurious_tol = 1e-6 * std::max(1.0, cost.cost_index);
    std::vector<double> admissible;
    for (double root : solution.all_real_roots) {
        if (!(root > 0.0)) {
            solution.rejected_roots.push_back({root, RootRejection::kNegative});
            continue;
        }
        if (!(root > v_lo && root < v_hi) ||
            !(discriminant(fc, params, env, root, w) > 0.0)) {
            solution.rejected_roots.push_back(
                {root, RootRejection::kDiscriminantViolating});
            continue;
        }
        const double res = optimality_residual(fc, params, env, cost, root, w, j_w);
        if (std::abs(res) > spurious_tol) {
            solution.rejected_roots.push_back(
                {root, RootRejection::kSpuriousFromSquaring});
            continue;
        }
        const double refined =
            polish_on_residual(fc, params, env, cost, root, w, j_w, v_lo, v_hi);
        if (!is_local_minimum(fc, params, env, cost, refined, w, j_w, v_lo, v_hi)) {
            solution.rejected_roots.push_back({root, RootRejection::kNotAMinimum});
            continue;
        }
        admissible.push_back(refined);
    }

    if (admissible.empty()) {
        std::ostringstream msg;
        msg << "optimality equation has no admissible positive root at w = " << w
            << " N, C_I = " << cost.cost_index << " (" << solution.all_real_roots.size()
            << " real roots";
        for (const auto& rej : solution.rejected_roots) {
            msg << "; " << rej.v << " " << to_string(rej.reason);
        }
        msg << ")";
        throw NoSolutionError(msg.str());
    }

    // lowest per-distance cost rate wins; ties go to the slower speed
    std::sort(admissible.begin(), admissible.end());
    double best_v = admissible.front();
    double best_rate = doc_rate_per_distance(fc, params, env, cost, best_v, w);
    for (std::size_t i = 1; i < admissible.size(); ++i) {
        const double rate =
            doc_rate_per_distance(fc, params, env, cost, admissible[i], w);
        if (rate < best_rate * (1.0 - 1e-12)) {
            best_rate = rate;
            best_v = admissible[i];
        }
    }

    solution.v_opt = best_v;
    solution.residual = optimality_residual(fc, params, env, cost, best_v, w, j_w);
    solution.hamiltonian_value =
        hamiltonian(fc, params, env, cost, best_v, w,
                    costate_jx(fc, params, env, best_v, w, j_w), j_w);
    return solution;
}

ShootingResult solve_shooting(const FuelCellParams& fc, const AircraftParams& params,
                              const Environment& env, const CostModel& cost,
                              double x_d, double w0, double tol,
                              int max_iterations, int base_steps) {
    if (!(x_d > 0.0)) {
        throw DomainError("target distance must be positive");
    }

    auto terminal_jw = [&](double jw0) {
        return integrate_cruise(fc, params, env, cost, x_d, w0, jw0,
                                CostateMode::kEvolving, base_steps);
    };

    ShootingResult result;
    std::ostringstream history;

    double s_prev = 0.0;
    CruiseTrajectory traj = terminal_jw(s_prev);
    double r_prev = traj.final_jw;
    result.iterations = 1;
    history << "J_W(0)=" << s_prev << " -> J_W(t_f)=" << r_prev;

    // dJ_W(t_f)/dJ_W(0) is close to 1, so the first secant update from the
    // zero guess is nearly exact
    double s_curr = s_prev - r_prev;
    double r_curr = r_prev;
    while (std::abs(r_prev) >= tol) {
        if (result.iterations >= max_iterations) {
            throw ConvergenceError("shooting failed to converge after " +
                                   std::to_string(result.iterations) +
                                   " iterations: " + history.str());
        }
        traj = terminal_jw(s_curr);
        r_curr = traj.final_jw;
        ++result.iterations;
        history << "; J_W(0)=" << s_curr << " -> J_W(t_f)=" << r_curr;
        if (std::abs(r_curr) < tol) {
            s_prev = s_curr;
            r_prev = r_curr;
            break;
        }
        const double denom = r_curr - r_prev;
        if (denom == 0.0) {
            throw ConvergenceError("shooting stalled (flat secant): " + history.str());
        }
        const double s_next = s_curr - r_curr * (s_curr - s_prev) / denom;
        s_prev = s_curr;
        r_prev = r_curr;
        s_curr = s_next;
    }

    log_debug("shooting converged: " + history.str());
    result.j_w0 = s_prev;
    result.trajectory = std::move(traj);
    result.terminal_jw = r_prev;
    result.converged = true;
    return result;
}

}  // namespace h2cruise
