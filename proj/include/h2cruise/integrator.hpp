#pragma once

#include "h2cruise/optimizer.hpp"
#include "h2cruise/trajectory.hpp"

namespace h2cruise {

// Whether the weight costate evolves along the trajectory or stays frozen
// (frozen at 0 reproduces the suboptimal quasi-steady schedule).
enum class CostateMode { kFrozen, kEvolving };

/// Integrate the cruise from x = 0 to x_d at fixed altitude. The speed is
/// re-solved from the optimality equation at every RK4 stage; the final step
/// is shortened to land exactly on x_d. The step size is x_d/(v0*base_steps).
/// Throws RangeExceededError when the weight reaches the dry-weight floor.
CruiseTrajectory integrate_cruise(const FuelCellParams& fc,
                                  const AircraftParams& params,
                                  const Environment& env, const CostModel& cost,
                                  double x_d, double w0, double jw0,
                                  CostateMode mode, int base_steps = 2000);

}  // namespace h2cruise
