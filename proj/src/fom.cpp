// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/fom.hpp"

#include <algorithm>
#include <cmath>

#include "linkbench/error.hpp"

namespace linkbench::fom {

void validate(const TechnologyEntry& e) {
    const auto positive = [&](double v, const char* field) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("technology '" + e.name + "': " + field + " must be finite and > 0");
    };
    positive(e.areal_bw_density_gbps_mm2, "areal_bw_density");
    positive(e.shoreline_bw_density_gbps_mm, "shoreline_bw_density");
    positive(e.energy_efficiency_pj_per_bit, "energy_efficiency");
    positive(e.link_length_mm, "link_length");
    positive(e.link_latency_ns, "link_latency");
}

double compute_fom(const TechnologyEntry& e) {
    validate(e);
    return e.bandwidth_efficiency() / e.energy_efficiency_pj_per_bit * (e.link_length_mm / e.link_latency_ns);
}

std::vector<RankedEntry> rank_technologies(std::span<const TechnologyEntry> db) {
    std::vector<RankedEntry> out;
    out.reserve(db.size());
    for (const auto& e : db) out.push_back({e, compute_fom(e)});
    std::stable_sort(out.begin(), out.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.fom != b.fom) return a.fom > b.fom;
        return a.entry.name < b.entry.name;
    });
    return out;
}

std::vector<TechnologyEntry> sample_database() {
    // Rough, publicly-derivable orders of magnitude; not survey data.
    return {
        {"2.5D copper interposer (est.)", 1000.0, 1000.0, 0.5, 2.0, 0.5, "estimate"},
        {"3D hybrid-bond copper (est.)", 7400.0, 300.0, 0.05, 0.02, 0.05, "estimate"},
        {"3D optical TSOV, 32 WDM (est.)", 6144.0, 250.0, 0.1, 50.0, 1.0, "estimate"},
        {"Co-packaged optics (est.)", 600.0, 400.0, 2.0, 1000.0, 6.0, "estimate"},
        {"Long-reach SerDes (est.)", 100.0, 300.0, 5.0, 100.0, 10.0, "estimate"},
        {"Pluggable optics (est.)", 20.0, 50.0, 15.0, 10000.0, 60.0, "estimate"},
    };
}

}  // namespace linkbench::fom
