// Copyright 2026 The rydcz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file io.hpp
///
/// CSV tables with a `#` metadata header, and deterministic SVG line plots.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace rydcz {

inline constexpr const char* kCsvFormat = "rydcz-csv/1";

/// %.12g, with "nan"/"inf" spelled out.
inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells) {
        if (cells.size() != columns.size()) throw std::invalid_argument("table row has wrong number of cells");
        rows.push_back(std::move(cells));
    }
    void add_row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        for (double v : values) cells.push_back(format_number(v));
        add_row(std::move(cells));
    }

    std::size_t column(const std::string& name) const {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end()) throw std::invalid_argument("table has no column '" + name + "'");
        return static_cast<std::size_t>(it - columns.begin());
    }

    std::vector<double> numeric(const std::string& name) const {
        const std::size_t c = column(name);
        std::vector<double> out;
        for (const auto& r : rows) out.push_back(std::stod(r[c]));
        return out;
    }
};

/// Writes "# <format>", one "# key: value" line per metadata entry (values as
/// compact JSON), the header row and the data rows.
inline void write_csv(std::ostream& os, const Table& t, const nlohmann::json& meta) {
    os << "# " << kCsvFormat << "\n";
    if (meta.is_object()) {
        for (auto it = meta.begin(); it != meta.end(); ++it) os << "# " << it.key() << ": " << it.value().dump() << "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
}

/// Parses what write_csv produces; metadata lines are skipped.
inline Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header) {
            t.columns = cells;
            header = true;
        } else {
            t.add_row(std::move(cells));
        }
    }
    return t;
}

struct PlotSpec {
    std::string title;
    std::string x_column;
    std::vector<std::string> y_columns;
    std::string x_label;
    std::string y_label;
    double y_scale = 1.0;  // display factor; stored data is never scaled
    bool log_y = false;
};

namespace detail {

inline std::string svg_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

inline std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace detail

/// 640 x 400 SVG with one polyline (or marker, for a single row) per series.
inline std::string emit_plot(const Table& t, const PlotSpec& spec) {
    if (t.rows.empty()) throw std::invalid_argument("emit_plot: empty table");
    if (spec.y_columns.empty()) throw std::invalid_argument("emit_plot: no series");
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    constexpr double W = 640, H = 400, L = 70, R = 150, T = 40, B = 50;

    const auto xs = t.numeric(spec.x_column);
    std::vector<std::vector<double>> ys;
    double ymin = INFINITY, ymax = -INFINITY;
    for (const auto& c : spec.y_columns) {
        auto y = t.numeric(c);
        for (auto& v : y) {
            v *= spec.y_scale;
            if (spec.log_y) v = v > 0 ? std::log10(v) : NAN;
            if (std::isfinite(v)) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
        ys.push_back(std::move(y));
    }
    double xmin = *std::min_element(xs.begin(), xs.end());
    double xmax = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(ymin)) ymin = 0.0, ymax = 1.0;
    if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
    if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\" "
          "font-family=\"DejaVu Sans, sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
    os << "<text x=\"" << detail::fixed(W / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << detail::svg_escape(spec.title) << "</text>\n";
    os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << (W - L - R) << "\" height=\"" << (H - T - B)
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        os << "<text x=\"" << detail::fixed(px(xv)) << "\" y=\"" << detail::fixed(H - B + 16)
           << "\" text-anchor=\"middle\">" << format_number(std::round(xv * 1e4) / 1e4) << "</text>\n";
        const std::string ylab = spec.log_y ? "1e" + detail::fixed(yv, 1) : format_number(std::round(yv * 1e4) / 1e4);
        os << "<text x=\"" << detail::fixed(L - 6) << "\" y=\"" << detail::fixed(py(yv) + 4)
           << "\" text-anchor=\"end\">" << ylab << "</text>\n";
    }
    os << "<text x=\"" << detail::fixed(L + (W - L - R) / 2) << "\" y=\"" << detail::fixed(H - 12)
       << "\" text-anchor=\"middle\">" << detail::svg_escape(spec.x_label.empty() ? spec.x_column : spec.x_label)
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << detail::fixed(T + (H - T - B) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << detail::fixed(T + (H - T - B) / 2) << ")\">" << detail::svg_escape(spec.y_label) << "</text>\n";

    for (std::size_t s = 0; s < ys.size(); ++s) {
        const char* color = palette[s % 6];
        if (xs.size() == 1) {
            if (std::isfinite(ys[s][0])) {
                os << "<circle cx=\"" << detail::fixed(px(xs[0])) << "\" cy=\"" << detail::fixed(py(ys[s][0]))
                   << "\" r=\"4\" fill=\"" << color << "\"/>\n";
            }
        } else {
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            bool first = true;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (!std::isfinite(ys[s][i])) continue;
                os << (first ? "" : " ") << detail::fixed(px(xs[i])) << "," << detail::fixed(py(ys[s][i]));
                first = false;
            }
            os << "\"/>\n";
        }
        const double ly = T + 16 + 18 * static_cast<double>(s);
        os << "<line x1=\"" << detail::fixed(W - R + 10) << "\" y1=\"" << detail::fixed(ly) << "\" x2=\""
           << detail::fixed(W - R + 30) << "\" y2=\"" << detail::fixed(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << detail::fixed(W - R + 36) << "\" y=\"" << detail::fixed(ly + 4) << "\">"
           << detail::svg_escape(spec.y_columns[s]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace rydcz
