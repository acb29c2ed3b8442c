#pragma once

#include <string>
#include <vector>

namespace h2cruise {

// Self-contained SVG line chart; no external renderer involved.
struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
    int width = 720;
    int height = 480;
};

std::string render_line_chart(const LineChart& chart);

}  // namespace h2cruise
