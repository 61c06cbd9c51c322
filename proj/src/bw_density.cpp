// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/bw_density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "linkbench/error.hpp"
#include "linkbench/units.hpp"

namespace linkbench::bw {

std::string_view to_string(BumpPattern p) { return p == BumpPattern::Hex ? "hex" : "square"; }

BumpPattern parse_bump_pattern(std::string_view name) {
    if (name == "hex") return BumpPattern::Hex;
    if (name == "square") return BumpPattern::Square;
    throw ValidationError("unknown bump pattern '" + std::string(name) + "' (expected hex or square)");
}

double bump_efficiency(BumpPattern p) { return p == BumpPattern::Hex ? 1.15 : 1.0; }

void validate(const BumpArraySpec& s) {
    using detail::require;
    require(s.bump_pitch_um > 0.0, "bump: pitch must be > 0");
    require(s.die_edge_mm > 0.0, "bump: die_edge must be > 0");
    require(s.channel_datarate_gbps > 0.0, "bump: channel_datarate must be > 0");
    require(s.overhead_total >= 0.0 && s.overhead_total <= 1.0, "bump: overhead_total must be in [0, 1]");
}

void validate(const TsovWdmSpec& s) {
    using detail::require;
    require(s.tsov_ratio >= 0.0 && s.tsov_ratio <= 1.0, "tsov: tsov_ratio must be in [0, 1]");
    require(s.n_wdm >= 1, "tsov: n_wdm must be >= 1");
    require(s.channel_datarate_gbps > 0.0, "tsov: channel_datarate must be > 0");
}

BumpDensity bump_density(double bump_pitch_um) {
    detail::require(bump_pitch_um > 0.0, "bump_density: pitch must be > 0");
    const double per_side = 1000.0 / bump_pitch_um;
    BumpDensity d;
    d.per_mm2 = per_side * per_side;
    d.count = static_cast<long>(units::robust_floor(d.per_mm2));
    return d;
}

BumpDensity bump_density(const BumpArraySpec& s) { return bump_density(s.bump_pitch_um); }

DensityValue theoretical_bw_density(const BumpArraySpec& s) {
    validate(s);
    const double pitch_mm = s.bump_pitch_um * 1e-3;
    return {s.channel_datarate_gbps / (pitch_mm * pitch_mm)};
}

double realizable_bw_density(const BumpArraySpec& s) {
    validate(s);
    return static_cast<double>(bump_density(s).count) * s.channel_datarate_gbps * bump_efficiency(s.pattern) *
           (1.0 - s.overhead_total) / kBitsPerByte;
}

OpticalDensity optical_bw_density(const BumpArraySpec& bump, const TsovWdmSpec& tsov) {
    validate(bump);
    validate(tsov);
    OpticalDensity out;
    out.tsov_per_mm2 = static_cast<long>(units::robust_floor(bump_density(bump).per_mm2 * tsov.tsov_ratio));
    out.no_tsov = out.tsov_per_mm2 == 0;
    out.gbyte_s_mm2 =
        static_cast<double>(out.tsov_per_mm2) * tsov.n_wdm * tsov.channel_datarate_gbps / kBitsPerByte;
    return out;
}

PitchProfileTable::PitchProfileTable(std::vector<PitchProfileRow> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
    using detail::require;
    require(!rows_.empty(), "pitch profile: table has no rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        std::ostringstream where;
        where << "pitch profile row " << i << ": ";
        require(r.pitch_min_um > 0.0 && r.pitch_max_um > r.pitch_min_um, where.str() + "need 0 < pitch_min < pitch_max");
        require(r.max_datarate_gbps > 0.0, where.str() + "max_datarate must be > 0");
        require(r.overhead_total >= 0.0 && r.overhead_total < 1.0, where.str() + "overhead_total must be in [0, 1)");
        if (i > 0)
            require(rows_[i - 1].pitch_max_um == r.pitch_min_um,
                    where.str() + "bands must be contiguous and ordered (previous pitch_max != pitch_min)");
    }
}

PitchProfileTable PitchProfileTable::builtin() {
    // Reconstructed schedule. Overheads are data ~3% + repair ~10% (dense 3D
    // only) + a pitch-dependent power/ground share. The 40-130 um band is
    // pinned to the published HBM-pitch point: 55 um -> 32 Gb/s, 0.39, hex.
    return PitchProfileTable(
        {
            {1.0, 10.0, 4.0, 0.23, BumpPattern::Square, "3D: data 0.03 + repair 0.10 + P/G 0.10"},
            {10.0, 25.0, 4.0, 0.33, BumpPattern::Square, "3D: data 0.03 + repair 0.10 + P/G 0.20"},
            {25.0, 40.0, 12.0, 0.43, BumpPattern::Hex, "2.5D: data 0.03 + P/G and shielding 0.40"},
            {40.0, 130.0, 32.0, 0.39, BumpPattern::Hex, "2D: data 0.03 + P/G and shielding 0.36"},
        },
        "builtin-reconstructed");
}

const PitchProfileRow& PitchProfileTable::lookup(double pitch_um) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        const bool last = i + 1 == rows_.size();
        if (pitch_um >= r.pitch_min_um && (pitch_um < r.pitch_max_um || (last && pitch_um == r.pitch_max_um)))
            return r;
    }
    std::ostringstream os;
    os << "unsupported pitch " << pitch_um << " um: profile '" << name_ << "' covers [" << min_pitch_um() << ", "
       << max_pitch_um() << "] um";
    throw UnsupportedPitchError(os.str());
}

BumpArraySpec PitchProfileTable::resolve(double pitch_um, double die_edge_mm) const {
    const auto& row = lookup(pitch_um);
    BumpArraySpec s;
    s.bump_pitch_um = pitch_um;
    s.pattern = row.pattern;
    s.die_edge_mm = die_edge_mm;
    s.channel_datarate_gbps = row.max_datarate_gbps;
    s.overhead_total = row.overhead_total;
    return s;
}

double total_bandwidth_3d(double density_gbyte_s_mm2, double die_edge_mm) {
    detail::require(die_edge_mm > 0.0, "total_bandwidth_3d: die_edge must be > 0");
    return density_gbyte_s_mm2 * die_edge_mm * die_edge_mm;
}

double total_bandwidth_3d(const BumpArraySpec& bump, const TsovWdmSpec& tsov, BandwidthModel model,
                          double die_edge_mm) {
    const double density = model == BandwidthModel::Electrical ? realizable_bw_density(bump)
                                                               : optical_bw_density(bump, tsov).gbyte_s_mm2;
    return total_bandwidth_3d(density, die_edge_mm);
}

ShorelineBandwidth total_bandwidth_shoreline(double die_edge_mm, double fiber_pitch_um, int n_wdm,
                                             double datarate_gbps) {
    using detail::require;
    require(die_edge_mm > 0.0, "total_bandwidth_shoreline: die_edge must be > 0");
    require(fiber_pitch_um > 0.0, "total_bandwidth_shoreline: fiber_pitch must be > 0");
    require(n_wdm >= 1 && datarate_gbps > 0.0, "total_bandwidth_shoreline: need n_wdm >= 1 and datarate > 0");
    ShorelineBandwidth out;
    out.fibers = static_cast<long>(units::robust_floor(4.0 * die_edge_mm * 1000.0 / fiber_pitch_um));
    out.no_fibers = out.fibers == 0;
    out.gbyte_s = static_cast<double>(out.fibers) * n_wdm * datarate_gbps / kBitsPerByte;
    return out;
}

std::vector<PitchMatchRow> matching_pitch_table(const BumpArraySpec& optical_bump, const TsovWdmSpec& optical_tsov,
                                                std::span<const double> candidate_pitches_um,
                                                const PitchProfileTable& table) {
    const double edge = optical_bump.die_edge_mm;
    const double optical_total =
        total_bandwidth_3d(optical_bw_density(optical_bump, optical_tsov).gbyte_s_mm2, edge);
    std::vector<PitchMatchRow> out;
    out.reserve(candidate_pitches_um.size());
    for (double pitch : candidate_pitches_um) {
        PitchMatchRow row;
        row.pitch_um = pitch;
        row.optical_total_gbyte_s = optical_total;
        try {
            row.electrical_total_gbyte_s = total_bandwidth_3d(realizable_bw_density(table.resolve(pitch, edge)), edge);
            row.beats_optical = row.electrical_total_gbyte_s > optical_total;
            row.within_one_percent =
                std::abs(row.electrical_total_gbyte_s - optical_total) <= 0.01 * std::max(optical_total, 1e-300);
        } catch (const ModelError& e) {
            row.error = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

double break_even_pitch(double target_gbyte_s_mm2, const PitchProfileTable& table) {
    double best = 0.0;
    for (const auto& row : table.rows()) {
        const double per_bump = row.max_datarate_gbps * bump_efficiency(row.pattern) * (1.0 - row.overhead_total) /
                                kBitsPerByte;
        // Need floor((1000/p)^2) >= n_needed  <=>  p <= 1000 / sqrt(n_needed).
        const double n_needed = std::max(1.0, std::ceil(target_gbyte_s_mm2 / per_bump - 1e-12));
        const double p_max = std::min(1000.0 / std::sqrt(n_needed), row.pitch_max_um);
        if (p_max >= row.pitch_min_um) best = std::max(best, p_max);
    }
    return best;
}

}  // namespace linkbench::bw
