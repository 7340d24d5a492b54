#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsc/errors.hpp"
#include "gsc/report.hpp"

namespace gsc {

namespace detail {

inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

inline constexpr const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2d8a4e", "#8a5bb8"};

// Fixed-geometry line chart with the plotted values repeated in a text table
// underneath, so the file is self-describing without a viewer.
inline std::string line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, const std::vector<Series>& series) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    size_t total_rows = 0;
    for (const auto& s : series) {
        total_rows += s.points.size();
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    double ypad = (ymax - ymin) * 0.08;
    ymin -= ypad;
    ymax += ypad;

    const double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    double table_h = 18.0 * (total_rows + series.size() + 1);
    double full_h = H + table_h + 20;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(W) + "\" height=\"" +
           fmt_num(full_h) + "\" viewBox=\"0 0 " + fmt_num(W) + " " + fmt_num(full_h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt_num(W / 2) + "\" y=\"22\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">" + title + "</text>\n";
    out += "<line x1=\"" + fmt_num(L) + "\" y1=\"" + fmt_num(H - B) + "\" x2=\"" + fmt_num(W - R) +
           "\" y2=\"" + fmt_num(H - B) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt_num(L) + "\" y1=\"" + fmt_num(T) + "\" x2=\"" + fmt_num(L) +
           "\" y2=\"" + fmt_num(H - B) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        double xv = xmin + (xmax - xmin) * t / 4.0;
        double yv = ymin + (ymax - ymin) * t / 4.0;
        out += "<text x=\"" + fmt_num(px(xv)) + "\" y=\"" + fmt_num(H - B + 18) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" + fmt_num(xv) + "</text>\n";
        out += "<text x=\"" + fmt_num(L - 6) + "\" y=\"" + fmt_num(py(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + fmt_num(yv) + "</text>\n";
        out += "<line x1=\"" + fmt_num(L) + "\" y1=\"" + fmt_num(py(yv)) + "\" x2=\"" + fmt_num(W - R) +
               "\" y2=\"" + fmt_num(py(yv)) + "\" stroke=\"#dddddd\"/>\n";
    }
    out += "<text x=\"" + fmt_num((L + W - R) / 2) + "\" y=\"" + fmt_num(H - 12) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" + x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + fmt_num((T + H - B) / 2) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" transform=\"rotate(-90 16 " +
           fmt_num((T + H - B) / 2) + ")\">" + y_label + "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % 4];
        std::string pts;
        for (auto [x, y] : series[si].points) {
            if (!pts.empty()) pts += " ";
            pts += fmt_num(px(x)) + "," + fmt_num(py(y));
        }
        out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        for (auto [x, y] : series[si].points)
            out += "<circle cx=\"" + fmt_num(px(x)) + "\" cy=\"" + fmt_num(py(y)) +
                   "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        out += "<text x=\"" + fmt_num(W - R - 4) + "\" y=\"" + fmt_num(T + 16.0 * (si + 1)) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\" fill=\"" + color + "\">" +
               series[si].name + "</text>\n";
    }

    double ty = H + 10;
    out += "<text x=\"" + fmt_num(L) + "\" y=\"" + fmt_num(ty) +
           "\" font-family=\"monospace\" font-size=\"12\">data</text>\n";
    for (const auto& s : series) {
        ty += 18;
        out += "<text x=\"" + fmt_num(L) + "\" y=\"" + fmt_num(ty) +
               "\" font-family=\"monospace\" font-size=\"11\">" + s.name + "</text>\n";
        for (auto [x, y] : s.points) {
            ty += 18;
            out += "<text x=\"" + fmt_num(L + 16) + "\" y=\"" + fmt_num(ty) +
                   "\" font-family=\"monospace\" font-size=\"11\">" + fmt_num(x) + "  " + fmt_num(y) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace detail

// Renders a report to a standalone SVG chart; dispatch is by schema field.
inline std::string render_plot(const ordered_json& report) {
    if (!report.contains("schema") || !report["schema"].is_string())
        throw SchemaError("plot: report has no schema field");
    std::string schema = report["schema"].get<std::string>();

    std::vector<detail::Series> series;
    std::string title, xl, yl;
    if (schema == kSchemaRate) {
        title = "coding rate vs n";
        xl = "n";
        yl = "rate (bits per pair)";
        static constexpr const char* keys[] = {"bound_rate", "exact_rate", "bracket_low",
                                               "bracket_high"};
        for (const char* key : keys) {
            detail::Series s;
            s.name = key;
            for (const auto& row : report.at("rows"))
                if (row.contains(key))
                    s.points.push_back({row.at("n").get<double>(), row.at(key).get<double>()});
            if (!s.points.empty()) series.push_back(std::move(s));
        }
    } else if (schema == kSchemaWright) {
        title = "count ratio vs n";
        xl = "n";
        yl = "exact / smooth";
        detail::Series s;
        s.name = "ratio";
        for (const auto& row : report.at("rows"))
            s.points.push_back({row.at("n").get<double>(), row.at("ratio").get<double>()});
        series.push_back(std::move(s));
    } else if (schema == kSchemaBerry) {
        title = "normal-approximation deviation";
        xl = "m";
        yl = "D * sqrt(m)";
        detail::Series s;
        s.name = "deviation_scaled";
        for (const auto& row : report.at("rows"))
            s.points.push_back(
                {row.at("m").get<double>(), row.at("deviation_scaled").get<double>()});
        series.push_back(std::move(s));
        detail::Series lim;
        lim.name = "limit";
        double a = report.at("a_config").get<double>();
        for (const auto& row : report.at("rows"))
            lim.points.push_back({row.at("m").get<double>(), a});
        series.push_back(std::move(lim));
    } else {
        throw SchemaError("plot: unknown report schema '" + schema + "'");
    }
    if (series.empty() || series[0].points.empty())
        throw SchemaError("plot: report contains no plottable rows");
    return detail::line_chart(title, xl, yl, series);
}

}  // namespace gsc
