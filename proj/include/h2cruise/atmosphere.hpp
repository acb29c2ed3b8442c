#pragma once

#include <cmath>

#include "h2cruise/errors.hpp"

namespace h2cruise {

inline constexpr double kStandardGravity = 9.80665;  // m/s^2

// Ambient conditions at the (fixed) cruise altitude.
struct Environment {
    double altitude_m = 0.0;
    double air_density = 1.225;          // kg/m^3
    double gravity = kStandardGravity;   // m/s^2
};

namespace isa {
inline constexpr double kSeaLevelDensity = 1.225;      // kg/m^3
inline constexpr double kSeaLevelTemperature = 288.15; // K
inline constexpr double kLapseRate = 0.0065;           // K/m
inline constexpr double kGasConstantAir = 287.053;     // J/(kg K)
inline constexpr double kTropopause = 11000.0;         // m
}  // namespace isa

/// ISA troposphere density, rho0*(1 - L*h/T0)^(g/(R*L) - 1). Valid for
/// 0 <= h <= 11000 m; throws OutOfRangeError outside that band.
inline double density_at(double altitude_m) {
    if (!(altitude_m >= 0.0) || altitude_m > isa::kTropopause) {
        throw OutOfRangeError("altitude " + std::to_string(altitude_m) +
                              " m outside troposphere model range [0, 11000] m");
    }
    const double exponent =
        kStandardGravity / (isa::kGasConstantAir * isa::kLapseRate) - 1.0;
    const double theta =
        1.0 - isa::kLapseRate * altitude_m / isa::kSeaLevelTemperature;
    return isa::kSeaLevelDensity * std::pow(theta, exponent);
}

/// Environment with ISA density at the given altitude.
inline Environment environment_at(double altitude_m,
                                  double gravity = kStandardGravity) {
    return Environment{altitude_m, density_at(altitude_m), gravity};
}

}  // namespace h2cruise
