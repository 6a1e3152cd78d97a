#ifndef IRLAB_UTIL_SVG_HPP
#define IRLAB_UTIL_SVG_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "irlab/util/csv.hpp"
#include "irlab/util/errors.hpp"

namespace irlab::util {

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1060c0";
};

// Minimal line plot: axes, four tick labels, one polyline per series.
// Keeps outputs dependency-free and byte-deterministic.
inline void write_svg_plot(const std::string& path, const std::vector<SvgSeries>& series,
                           const std::string& xlabel, const std::string& ylabel,
                           bool log_x = false) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot open for writing: " + path);

    const double W = 640, H = 420, ml = 70, mr = 20, mt = 20, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double xv = log_x ? std::log10(s.x[i]) : s.x[i];
            xmin = std::min(xmin, xv);
            xmax = std::max(xmax, xv);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (ymin > ymax) { ymin = 0; ymax = 1; }
    if (xmax == xmin) { xmax = xmin + 1; }
    if (ymax == ymin) { ymax = ymin + 1; }

    auto px = [&](double x) {
        double xv = log_x ? std::log10(x) : x;
        return ml + (xv - xmin) / (xmax - xmin) * (W - ml - mr);
    };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    // tick labels (ends only)
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 18 << "\" font-size=\"11\">"
        << format_double(log_x ? std::pow(10.0, xmin) : xmin) << "</text>\n";
    out << "<text x=\"" << W - mr - 60 << "\" y=\"" << H - mb + 18 << "\" font-size=\"11\">"
        << format_double(log_x ? std::pow(10.0, xmax) : xmax) << "</text>\n";
    out << "<text x=\"4\" y=\"" << H - mb << "\" font-size=\"11\">" << format_double(ymin)
        << "</text>\n";
    out << "<text x=\"4\" y=\"" << mt + 12 << "\" font-size=\"11\">" << format_double(ymax)
        << "</text>\n";
    out << "<text x=\"" << (W / 2 - 30) << "\" y=\"" << H - 8 << "\" font-size=\"12\">" << xlabel
        << (log_x ? " (log scale)" : "") << "</text>\n";
    out << "<text x=\"10\" y=\"" << mt - 4 << "\" font-size=\"12\">" << ylabel << "</text>\n";

    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) out << " ";
            out << format_double(px(s.x[i])) << "," << format_double(py(s.y[i]));
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace irlab::util

#endif
