// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "linkbench/scenario.hpp"
#include "linkbench/sweep_spec.hpp"

namespace linkbench::sweep {

/// Empty, number, integer, text or flag.
using Cell = std::variant<std::monostate, double, long, std::string, bool>;

struct Table {
    SweepKind kind = SweepKind::EnergyVsLength;
    std::string title;
    std::vector<std::string> columns;  // names carry units, e.g. "length_mm"
    std::vector<std::vector<Cell>> rows;

    std::size_t column(const std::string& name) const;  // throws if absent
    std::vector<double> numeric_column(const std::string& name) const;  // NaN for non-numbers
};

struct RunOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    /// Optional evaluation order (a permutation of axis indices); results are
    /// always merged back in axis order.
    std::vector<std::size_t> evaluation_order;
};

/// Evaluate one sweep. Per-point model errors land in the `error` column.
Table run_sweep(const SweepSpec& spec, const Scenario& scenario, const RunOptions& opts = {});

std::string format_number(double v);  // %.6g, "inf"/"-inf"/"nan" spelled out

/// RFC 4180 CSV preceded by `#` provenance comment lines.
void write_csv(std::ostream& out, const Table& table, const std::vector<std::string>& provenance = {});
std::string to_csv(const Table& table, const std::vector<std::string>& provenance = {});

/// Provenance lines for a scenario: tool version, scenario name and hash.
std::vector<std::string> provenance_lines(const Scenario& scenario, const SweepSpec* spec = nullptr);

struct PlotStyle {
    std::string title;
    std::string x_column;
    std::vector<std::string> y_columns;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    bool reverse_x = false;
    bool markers_only = false;
    std::string label_column;  // optional point labels (scatter plots)
};

/// Default figure style for a sweep's table.
PlotStyle default_style(const SweepSpec& spec, const Table& table);

/// Static SVG line/scatter plot. Throws ValidationError on an empty table.
std::string render_svg(const Table& table, const PlotStyle& style);
void emit_plot(const Table& table, const PlotStyle& style, const std::string& path);

}  // namespace linkbench::sweep
