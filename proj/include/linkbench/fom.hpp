// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <span>
#include <string>
#include <vector>

namespace linkbench::fom {

/// One interconnect technology, stored in Gb/s based units:
/// areal density in Gb/s/mm^2, shoreline density in Gb/s/mm, energy in
/// pJ/bit, reach in mm and latency in ns.
struct TechnologyEntry {
    std::string name;
    double areal_bw_density_gbps_mm2 = 0.0;
    double shoreline_bw_density_gbps_mm = 0.0;
    double energy_efficiency_pj_per_bit = 0.0;
    double link_length_mm = 0.0;
    double link_latency_ns = 0.0;
    std::string source_note;

    /// Areal over shoreline density (1/mm).
    double bandwidth_efficiency() const { return areal_bw_density_gbps_mm2 / shoreline_bw_density_gbps_mm; }
};

void validate(const TechnologyEntry& e);

/// (bandwidth efficiency / energy efficiency) * (length / latency).
double compute_fom(const TechnologyEntry& e);

struct RankedEntry {
    TechnologyEntry entry;
    double fom = 0.0;
};

/// Sorted by FoM descending, ties by name ascending. An empty database
/// yields an empty table.
std::vector<RankedEntry> rank_technologies(std::span<const TechnologyEntry> db);

/// Small illustrative database; every value is an estimate and carries a
/// source note saying so.
std::vector<TechnologyEntry> sample_database();

}  // namespace linkbench::fom
