#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h2cruise/aero.hpp"
#include "h2cruise/atmosphere.hpp"
#include "h2cruise/fuelcell.hpp"
#include "h2cruise/mission.hpp"
#include "h2cruise/optimizer.hpp"

namespace h2cruise {

struct OutputConfig {
    std::string directory = ".";
    bool csv = true;
    bool svg = true;
};

// Fully validated run configuration. All values strictly SI; the JSON field
// names carry their units.
struct RunConfig {
    AircraftParams aircraft;
    FuelCellParams fuelcell;
    Environment environment;
    std::optional<CostModel> cost;
    std::optional<std::vector<double>> ci_grid;
    double distance_m = 0.0;
    Mode mode = Mode::kSuboptimal;
    OutputConfig output;
    std::string notes;
};

/// Load and validate a JSON config. Unknown keys are rejected; validation
/// errors name the offending field and the violated constraint; parse errors
/// carry line/column information. Exactly one of environment.altitude_m /
/// environment.air_density_kg_per_m3 must be present.
RunConfig load_config(const std::string& path);

/// Same, from an in-memory JSON string (used by tests).
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");

}  // namespace h2cruise
