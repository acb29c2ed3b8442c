#pragma once

#include <string>
#include <vector>

#include "h2cruise/config.hpp"

namespace h2cruise {

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Feasibility & assumption report for a configuration: power envelope,
// required power across the speed range, ohmic-model validity, discriminant
// margin at the solved cruise point.
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    double max_net_power_w = 0.0;
    double min_required_power_w = 0.0;  // min over v of D*v at W0
    bool all_pass = false;
};

/// Run the feasibility/assumption checks. Report-only: never throws for
/// failed checks.
ValidationReport run_validation(const RunConfig& config);

std::string format_validation_report(const ValidationReport& report);

}  // namespace h2cruise
