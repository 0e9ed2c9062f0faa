#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ph0/bench.hpp"
#include "ph0/format.hpp"

namespace ph0 {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 620.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 230.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

struct Mapper {
    double x0, x1, y0, y1;   // log10 data ranges

    double sx(double x) const {
        return kMarginLeft + (x - x0) / (x1 - x0) * (kWidth - kMarginLeft - kMarginRight);
    }
    double sy(double y) const {
        return kHeight - kMarginBottom -
               (y - y0) / (y1 - y0) * (kHeight - kMarginTop - kMarginBottom);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string series_label(BenchMode mode, unsigned workers) {
    std::string label(to_string(mode));
    if (mode != BenchMode::Model) {
        label += " w=";
        label += std::to_string(workers);
    }
    return label;
}

} // namespace

std::string emit_plot(const std::vector<BenchRecord>& records,
                      const std::vector<SeriesFit>& fits) {
    if (records.empty()) throw std::invalid_argument("no records to plot");

    // series key (mode, workers) -> ascending-n points in log10 space
    std::map<std::pair<int, unsigned>, std::vector<std::pair<double, double>>> series;
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const SeriesPoint& p : aggregate_means(records)) {
        if (!(p.mean > 0.0) || !std::isfinite(p.mean) || p.n == 0) continue;
        const double x = std::log10(static_cast<double>(p.n));
        const double y = std::log10(p.mean);
        series[{static_cast<int>(p.mode), p.workers}].push_back({x, y});
        x_min = first ? x : std::min(x_min, x);
        x_max = first ? x : std::max(x_max, x);
        y_min = first ? y : std::min(y_min, y);
        y_max = first ? y : std::max(y_max, y);
        first = false;
    }
    if (series.empty()) throw std::invalid_argument("no plottable records");

    if (x_max - x_min < 0.5) {
        x_min -= 0.25;
        x_max += 0.25;
    }
    if (y_max - y_min < 0.5) {
        y_min -= 0.25;
        y_max += 0.25;
    }
    const double x_pad = 0.04 * (x_max - x_min);
    const double y_pad = 0.06 * (y_max - y_min);
    const Mapper m{x_min - x_pad, x_max + x_pad, y_min - y_pad, y_max + y_pad};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // plot frame
    const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
    const double py0 = kMarginTop, py1 = kHeight - kMarginBottom;
    svg += "<rect x=\"" + num(px0) + "\" y=\"" + num(py0) + "\" width=\"" + num(px1 - px0) +
           "\" height=\"" + num(py1 - py0) + "\" fill=\"none\" stroke=\"#333\"/>\n";

    // decade gridlines and labels
    for (int k = static_cast<int>(std::ceil(m.x0)); k <= static_cast<int>(std::floor(m.x1)); ++k) {
        const double x = m.sx(k);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(x) + "\" y2=\"" +
               num(py1) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(py1 + 18) +
               "\" text-anchor=\"middle\" font-size=\"12\">1e" + std::to_string(k) + "</text>\n";
    }
    for (int k = static_cast<int>(std::ceil(m.y0)); k <= static_cast<int>(std::floor(m.y1)); ++k) {
        const double y = m.sy(k);
        svg += "<line x1=\"" + num(px0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(px1) + "\" y2=\"" +
               num(y) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + num(px0 - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-size=\"12\">1e" + std::to_string(k) + "</text>\n";
    }
    svg += "<text x=\"" + num((px0 + px1) / 2) + "\" y=\"" + num(kHeight - 16) +
           "\" text-anchor=\"middle\" font-size=\"14\">n (points)</text>\n";
    svg += "<text x=\"20\" y=\"" + num((py0 + py1) / 2) + "\" text-anchor=\"middle\" font-size=\"14\"" +
           " transform=\"rotate(-90 20 " + num((py0 + py1) / 2) + ")\">seconds / steps</text>\n";

    // reference power laws anchored at the data minimum
    for (int k = 1; k <= 4; ++k) {
        const double ref_x0 = x_min, ref_y0 = y_min;
        double ref_x1 = m.x1;
        double ref_y1 = ref_y0 + k * (ref_x1 - ref_x0);
        if (ref_y1 > m.y1) {
            ref_x1 = ref_x0 + (m.y1 - ref_y0) / k;
            ref_y1 = m.y1;
        }
        svg += "<line class=\"ref\" x1=\"" + num(m.sx(ref_x0)) + "\" y1=\"" + num(m.sy(ref_y0)) +
               "\" x2=\"" + num(m.sx(ref_x1)) + "\" y2=\"" + num(m.sy(ref_y1)) +
               "\" stroke=\"#aaa\" stroke-dasharray=\"2,3\"/>\n";
        svg += "<text x=\"" + num(m.sx(ref_x1) + 4) + "\" y=\"" + num(m.sy(ref_y1)) +
               "\" font-size=\"11\" fill=\"#888\">n^" + std::to_string(k) + "</text>\n";
    }

    // fitted lines
    for (const SeriesFit& sf : fits) {
        // natural-log intercept -> log10 line
        const double b10 = sf.fit.intercept / std::log(10.0);
        const double fy0 = b10 + sf.fit.slope * x_min;
        const double fy1 = b10 + sf.fit.slope * x_max;
        svg += "<line class=\"fit\" x1=\"" + num(m.sx(x_min)) + "\" y1=\"" + num(m.sy(fy0)) +
               "\" x2=\"" + num(m.sx(x_max)) + "\" y2=\"" + num(m.sy(fy1)) +
               "\" stroke=\"#444\" stroke-dasharray=\"6,4\"/>\n";
    }

    // data series
    std::size_t color = 0;
    double legend_y = py0 + 16;
    for (const auto& [key, pts] : series) {
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const auto mode = static_cast<BenchMode>(key.first);
        std::string points_attr;
        for (const auto& [x, y] : pts) {
            points_attr += num(m.sx(x));
            points_attr += ',';
            points_attr += num(m.sy(y));
            points_attr += ' ';
        }
        svg += "<polyline class=\"series\" data-mode=\"" + std::string(to_string(mode)) +
               "\" data-workers=\"" + std::to_string(key.second) + "\" fill=\"none\" stroke=\"" +
               stroke + "\" stroke-width=\"2\" points=\"" + points_attr + "\"/>\n";
        for (const auto& [x, y] : pts)
            svg += "<circle cx=\"" + num(m.sx(x)) + "\" cy=\"" + num(m.sy(y)) +
                   "\" r=\"3\" fill=\"" + stroke + "\"/>\n";

        svg += "<line x1=\"" + num(px1 + 14) + "\" y1=\"" + num(legend_y - 4) + "\" x2=\"" +
               num(px1 + 44) + "\" y2=\"" + num(legend_y - 4) + "\" stroke=\"" + stroke +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(px1 + 50) + "\" y=\"" + num(legend_y) +
               "\" font-size=\"12\">" + series_label(mode, key.second) + "</text>\n";
        legend_y += 18;
        ++color;
    }

    // fitted-slope legend entries
    for (const SeriesFit& sf : fits) {
        svg += "<text x=\"" + num(px1 + 14) + "\" y=\"" + num(legend_y) +
               "\" font-size=\"12\" fill=\"#444\">fit " + series_label(sf.mode, sf.workers) +
               ": slope " + num(sf.fit.slope) + "</text>\n";
        legend_y += 18;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace ph0
