#pragma once

#include <string>

namespace h2cruise {

// Verbosity from the H2CRUISE_LOG environment variable:
// unset/0/off = quiet, 1/info = info, 2/debug = everything.
int log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace h2cruise
