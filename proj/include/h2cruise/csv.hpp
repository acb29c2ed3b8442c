#pragma once

#include <string>
#include <vector>

#include "h2cruise/mission.hpp"
#include "h2cruise/trajectory.hpp"

namespace h2cruise {

/// Shortest-faithful decimal with 12 significant digits (%.12g, C locale).
std::string format_g12(double value);

/// Sweep rows as CSV (UTF-8, header, comma separators, LF endings). Columns:
/// cost_index,v_mps,v_kmh,t_f_s,fuel_kg,doc. When any row failed, an extra
/// "error" column is appended (empty on good rows).
std::string sweep_csv(const SweepResult& sweep);

/// Single-solution CSV (same float formatting): cost_index,v_mps,v_kmh,
/// residual,j_w,hamiltonian.
std::string solution_csv(double cost_index, const SpeedSolution& solution);

/// Trajectory CSV: t_s,x_m,w_n,v_mps,j_w; decimated to at most max_rows.
std::string trajectory_csv(const std::vector<CruiseState>& samples,
                           std::size_t max_rows = 2000);

/// Write text to a file, creating parent directories. Throws Error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace h2cruise
