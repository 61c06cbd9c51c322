// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace linkbench::sweep {

enum class SweepKind { EnergyVsLength, BwDensityVsPitch, TotalBwVsEdge, WdmSweep, PitchMatch, OmaVsCap, FomTable };

std::string_view to_string(SweepKind kind);
SweepKind parse_sweep_kind(std::string_view name);

/// Axis variable each kind sweeps; empty for fom_table.
std::string_view axis_name_for(SweepKind kind);

struct Axis {
    std::string name;
    std::vector<double> values;
};

/// start, start + step, ... up to stop (inclusive within 1e-9 step).
/// Throws ValidationError for step <= 0 or stop < start.
std::vector<double> expand_range(double start, double stop, double step);

struct SweepSpec {
    SweepKind kind = SweepKind::EnergyVsLength;
    Axis axis;
    std::string output;          // file stem, e.g. "fig3_energy"
    std::vector<double> series;  // extra series (WDM counts for bw_density_vs_pitch)
    std::string note;
    bool log_x = false;
    bool log_y = false;
    bool reverse_x = false;
};

/// Throws ValidationError when the axis is empty or mismatched to the kind.
void validate(const SweepSpec& spec);

}  // namespace linkbench::sweep
