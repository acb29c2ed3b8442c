#include "h2cruise/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace h2cruise {

namespace {

struct Ticks {
    std::vector<double> values;
};

// round tick spacing to 1/2/5 * 10^k
Ticks nice_ticks(double lo, double hi, int target = 6) {
    Ticks ticks;
    if (!(hi > lo)) {
        ticks.values = {lo};
        return ticks;
    }
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    const double start = std::ceil(lo / step) * step;
    for (double v = start; v <= hi + 1e-9 * step; v += step) {
        ticks.values.push_back(v);
    }
    return ticks;
}

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

std::string render_line_chart(const LineChart& chart) {
    const int ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = chart.width - ml - mr;
    const double ph = chart.height - mt - mb;

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!chart.x.empty()) {
        xmin = *std::min_element(chart.x.begin(), chart.x.end());
        xmax = *std::max_element(chart.x.begin(), chart.x.end());
        ymin = *std::min_element(chart.y.begin(), chart.y.end());
        ymax = *std::max_element(chart.y.begin(), chart.y.end());
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width
        << "\" height=\"" << chart.height << "\" viewBox=\"0 0 " << chart.width
        << ' ' << chart.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << chart.width / 2 << "\" y=\"24\" font-family=\"sans-serif\""
        << " font-size=\"16\" text-anchor=\"middle\">" << chart.title << "</text>\n";

    for (double t : nice_ticks(xmin, xmax).values) {
        const double x = px(t);
        svg << "<line x1=\"" << x << "\" y1=\"" << mt << "\" x2=\"" << x
            << "\" y2=\"" << mt + ph << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << mt + ph + 18
            << "\" font-family=\"sans-serif\" font-size=\"11\" "
               "text-anchor=\"middle\">"
            << fmt(t) << "</text>\n";
    }
    for (double t : nice_ticks(ymin, ymax).values) {
        const double y = py(t);
        svg << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << ml + pw
            << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << ml - 6 << "\" y=\"" << y + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << fmt(t) << "</text>\n";
    }

    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << chart.height - 12
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << chart.x_label << "</text>\n";
    svg << "<text x=\"16\" y=\"" << mt + ph / 2
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 16 " << mt + ph / 2 << ")\">" << chart.y_label
        << "</text>\n";

    if (!chart.x.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < chart.x.size(); ++i) {
            if (i) svg << ' ';
            svg << px(chart.x[i]) << ',' << py(chart.y[i]);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace h2cruise
