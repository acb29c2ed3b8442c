#pragma once

#include <vector>

namespace h2cruise {

// Instantaneous cruise state. j_w is the weight costate (0 in suboptimal runs).
struct CruiseState {
    double t = 0.0;    // s
    double x = 0.0;    // m
    double w = 0.0;    // N
    double v = 0.0;    // m/s
    double j_w = 0.0;  // dimensionless
};

// Integrated trajectory with the quadratures needed for conservation checks.
struct CruiseTrajectory {
    std::vector<CruiseState> samples;  // full resolution
    double t_f = 0.0;                  // s
    double final_weight = 0.0;         // N
    double final_jw = 0.0;
    double charge_per_cell = 0.0;      // integral of I dt, C
    double drag_energy = 0.0;          // integral of D*v dt, J
    double electric_energy = 0.0;      // integral of eta*n*U_c*I dt, J
};

}  // namespace h2cruise
