// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "linkbench/error.hpp"
#include "linkbench/sweep.hpp"

namespace linkbench::sweep {

PlotStyle default_style(const SweepSpec& spec, const Table& table) {
    PlotStyle s;
    s.title = table.title;
    s.log_x = spec.log_x;
    s.log_y = spec.log_y;
    s.reverse_x = spec.reverse_x;
    switch (spec.kind) {
        case SweepKind::EnergyVsLength:
            s.x_column = "length_mm";
            s.y_columns = {"electrical_fj_per_bit", "optical_fj_per_bit"};
            if (!table.rows.empty()) {
                // Only draw the DSP curve when it differs from the bare link.
                const auto e = table.numeric_column("electrical_fj_per_bit");
                const auto d = table.numeric_column("electrical_dsp_fj_per_bit");
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (std::isfinite(d[i]) && d[i] != e[i]) {
                        s.y_columns.push_back("electrical_dsp_fj_per_bit");
                        break;
                    }
            }
            s.x_label = "Link length (mm)";
            s.y_label = "Energy (fJ/bit)";
            s.log_y = true;
            break;
        case SweepKind::BwDensityVsPitch:
            s.x_column = "pitch_um";
            s.y_columns = {"theoretical_gbyte_s_mm2", "realizable_gbyte_s_mm2"};
            for (const auto& c : table.columns)
                if (c.rfind("optical_wdm", 0) == 0) s.y_columns.push_back(c);
            s.x_label = "Bump pitch (um)";
            s.y_label = "Bandwidth density (GB/s/mm^2)";
            s.log_y = true;
            break;
        case SweepKind::TotalBwVsEdge:
            s.x_column = "die_edge_mm";
            s.y_columns = {"electrical_3d_gbyte_s", "optical_3d_gbyte_s", "optical_shoreline_gbyte_s"};
            s.x_label = "Die edge (mm)";
            s.y_label = "Total bandwidth (GB/s)";
            s.log_y = true;
            break;
        case SweepKind::WdmSweep:
            s.x_column = "n_wdm";
            s.y_columns = {"optical_total_gbyte_s", "electrical_total_gbyte_s"};
            s.x_label = "WDM channels per TSOV";
            s.y_label = "Total bandwidth (GB/s)";
            break;
        case SweepKind::PitchMatch:
            s.x_column = "pitch_um";
            s.y_columns = {"electrical_total_gbyte_s", "optical_total_gbyte_s"};
            s.x_label = "Electrical bump pitch (um)";
            s.y_label = "Total bandwidth (GB/s)";
            s.log_y = true;
            break;
        case SweepKind::OmaVsCap:
            s.x_column = "c_total_ff";
            s.y_columns = {"oma_sensitivity_dbm"};
            s.x_label = "Total TIA input capacitance (fF)";
            s.y_label = "RX OMA sensitivity (dBm)";
            break;
        case SweepKind::FomTable:
            s.x_column = "link_length_mm";
            s.y_columns = {"fom"};
            s.x_label = "Link length (mm)";
            s.y_label = "FoM (Gbps/mm)/(pJ/bit)*(mm/ns)";
            s.log_x = true;
            s.log_y = true;
            s.markers_only = true;
            s.label_column = "name";
            break;
    }
    return s;
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Scale {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;
    bool reversed = false;
    double pix_lo = 0.0;
    double pix_hi = 1.0;

    double map(double v) const {
        const double t0 = log ? std::log10(lo) : lo;
        const double t1 = log ? std::log10(hi) : hi;
        double t = ((log ? std::log10(v) : v) - t0) / (t1 - t0);
        if (reversed) t = 1.0 - t;
        return pix_lo + t * (pix_hi - pix_lo);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
                const double v = std::pow(10.0, e);
                if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
            }
            return out;
        }
        const double span = hi - lo;
        const double raw = span / 6.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0})
            if (raw <= m * mag) {
                step = m * mag;
                break;
            }
        for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step)
            out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
        return out;
    }
};

Scale make_scale(std::vector<double> values, bool log, bool reversed, double pix_lo, double pix_hi) {
    Scale s;
    s.log = log;
    s.reversed = reversed;
    s.pix_lo = pix_lo;
    s.pix_hi = pix_hi;
    values.erase(std::remove_if(values.begin(), values.end(),
                                [log](double v) { return !std::isfinite(v) || (log && v <= 0.0); }),
                 values.end());
    if (values.empty()) return s;
    s.lo = *std::min_element(values.begin(), values.end());
    s.hi = *std::max_element(values.begin(), values.end());
    if (log) {
        s.lo = std::pow(10.0, std::floor(std::log10(s.lo)));
        s.hi = std::pow(10.0, std::ceil(std::log10(s.hi)));
        if (s.hi <= s.lo) s.hi = s.lo * 10.0;
    } else if (s.hi == s.lo) {
        const double pad = s.lo == 0.0 ? 1.0 : std::abs(s.lo) * 0.1;
        s.lo -= pad;
        s.hi += pad;
    } else {
        const double pad = 0.05 * (s.hi - s.lo);
        s.lo -= pad;
        s.hi += pad;
    }
    return s;
}

}  // namespace

std::string render_svg(const Table& table, const PlotStyle& style) {
    if (table.rows.empty()) throw ValidationError("emit_plot: table is empty");
    const auto xs = table.numeric_column(style.x_column);
    std::vector<std::vector<double>> ys;
    std::vector<double> all_y;
    for (const auto& c : style.y_columns) {
        ys.push_back(table.numeric_column(c));
        all_y.insert(all_y.end(), ys.back().begin(), ys.back().end());
    }

    const Scale sx = make_scale(xs, style.log_x, style.reverse_x, kLeft, kWidth - kRight);
    const Scale sy = make_scale(all_y, style.log_y, false, kHeight - kBottom, kTop);
    const auto usable = [](double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); };

    std::ostringstream os;
    os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")" << kHeight
       << R"(" font-family="sans-serif" font-size="12">)" << '\n';
    os << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
    os << R"(<text x=")" << px(kLeft) << R"(" y="24" font-size="15">)" << escape(style.title) << "</text>\n";

    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    os << R"(<rect x=")" << px(x0) << R"(" y=")" << px(y1) << R"(" width=")" << px(x1 - x0) << R"(" height=")"
       << px(y0 - y1) << R"(" fill="none" stroke="black"/>)" << '\n';
    for (double t : sx.ticks()) {
        const double p = sx.map(t);
        os << R"(<line x1=")" << px(p) << R"(" y1=")" << px(y0) << R"(" x2=")" << px(p) << R"(" y2=")" << px(y1)
           << R"(" stroke="#dddddd"/>)" << '\n';
        os << R"(<text x=")" << px(p) << R"(" y=")" << px(y0 + 16) << R"(" text-anchor="middle">)" << fmt(t)
           << "</text>\n";
    }
    for (double t : sy.ticks()) {
        const double p = sy.map(t);
        os << R"(<line x1=")" << px(x0) << R"(" y1=")" << px(p) << R"(" x2=")" << px(x1) << R"(" y2=")" << px(p)
           << R"(" stroke="#dddddd"/>)" << '\n';
        os << R"(<text x=")" << px(x0 - 6) << R"(" y=")" << px(p + 4) << R"(" text-anchor="end">)" << fmt(t)
           << "</text>\n";
    }
    os << R"(<text x=")" << px(0.5 * (x0 + x1)) << R"(" y=")" << px(kHeight - 18) << R"(" text-anchor="middle">)"
       << escape(style.x_label) << "</text>\n";
    os << R"(<text x="18" y=")" << px(0.5 * (y0 + y1)) << R"(" text-anchor="middle" transform="rotate(-90 18 )"
       << px(0.5 * (y0 + y1)) << ")\">" << escape(style.y_label) << "</text>\n";

    std::vector<std::string> labels;
    if (!style.label_column.empty()) {
        const auto c = table.column(style.label_column);
        for (const auto& row : table.rows) {
            const auto* s = std::get_if<std::string>(&row[c]);
            labels.push_back(s ? *s : std::string());
        }
    }

    for (std::size_t k = 0; k < ys.size(); ++k) {
        const char* color = kColors[k % std::size(kColors)];
        std::ostringstream pts;
        std::size_t n = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!usable(xs[i], style.log_x) || !usable(ys[k][i], style.log_y)) continue;
            const double px_ = sx.map(xs[i]);
            const double py_ = sy.map(ys[k][i]);
            pts << (n++ ? " " : "") << px(px_) << "," << px(py_);
            os << R"(<circle cx=")" << px(px_) << R"(" cy=")" << px(py_) << R"(" r="3" fill=")" << color << R"("/>)"
               << '\n';
            if (!labels.empty() && !labels[i].empty())
                os << R"(<text x=")" << px(px_ + 5) << R"(" y=")" << px(py_ - 5) << R"(" font-size="10">)"
                   << escape(labels[i]) << "</text>\n";
        }
        if (!style.markers_only && n > 1)
            os << R"(<polyline fill="none" stroke=")" << color << R"(" stroke-width="1.5" points=")" << pts.str()
               << R"("/>)" << '\n';
        const double ly = kTop + 10.0 + 18.0 * static_cast<double>(k);
        os << R"(<line x1=")" << px(x1 + 12) << R"(" y1=")" << px(ly) << R"(" x2=")" << px(x1 + 32) << R"(" y2=")"
           << px(ly) << R"(" stroke=")" << color << R"(" stroke-width="2"/>)" << '\n';
        os << R"(<text x=")" << px(x1 + 36) << R"(" y=")" << px(ly + 4) << R"(" font-size="10">)"
           << escape(style.y_columns[k]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_plot(const Table& table, const PlotStyle& style, const std::string& path) {
    const std::string svg = render_svg(table, style);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write plot file '" + path + "'");
    out << svg;
    if (!out) throw IoError("failed writing plot file '" + path + "'");
}

}  // namespace linkbench::sweep
