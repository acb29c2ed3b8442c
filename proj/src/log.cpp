#include "h2cruise/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

namespace h2cruise {

int log_level() {
    static const int level = [] {
        const char* raw = std::getenv("H2CRUISE_LOG");
        if (raw == nullptr || *raw == '\0') return 0;
        if (std::strcmp(raw, "debug") == 0 || std::strcmp(raw, "2") == 0) return 2;
        if (std::strcmp(raw, "info") == 0 || std::strcmp(raw, "1") == 0) return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[h2cruise info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[h2cruise debug] " << msg << "\n";
}

}  // namespace h2cruise
