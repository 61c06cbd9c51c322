// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linkbench::bw {

enum class BumpPattern { Square, Hex };

std::string_view to_string(BumpPattern p);
BumpPattern parse_bump_pattern(std::string_view name);

/// Packing correction: 1.15 for hexagonal arrays, 1.0 for square.
double bump_efficiency(BumpPattern p);

/// Byte convention used throughout: 1 GB/s = 8 Gb/s.
inline constexpr double kBitsPerByte = 8.0;

struct BumpArraySpec {
    double bump_pitch_um = 55.0;
    BumpPattern pattern = BumpPattern::Hex;
    double die_edge_mm = 1.0;
    double channel_datarate_gbps = 32.0;
    double overhead_total = 0.39;
};

void validate(const BumpArraySpec& s);

struct BumpDensity {
    double per_mm2 = 0.0;  // square-lattice estimate (1000 / pitch)^2
    long count = 0;        // whole bumps per mm^2, truncated
};

BumpDensity bump_density(double bump_pitch_um);
BumpDensity bump_density(const BumpArraySpec& s);

struct DensityValue {
    double gbit_s_mm2 = 0.0;
    double gbyte_s_mm2() const { return gbit_s_mm2 / kBitsPerByte; }
};

/// Datarate / pitch^2.
DensityValue theoretical_bw_density(const BumpArraySpec& s);

/// count * datarate * eta_bump * (1 - overhead) / 8, GB/s/mm^2.
double realizable_bw_density(const BumpArraySpec& s);

struct TsovWdmSpec {
    double tsov_ratio = 0.02;
    int n_wdm = 32;
    double channel_datarate_gbps = 32.0;
};

void validate(const TsovWdmSpec& s);

struct OpticalDensity {
    double gbyte_s_mm2 = 0.0;
    long tsov_per_mm2 = 0;
    bool no_tsov = false;  // warning: the ratio rounds down to zero TSOVs
};

/// floor(bump density * R_tsov) * N_wdm * datarate / 8.
OpticalDensity optical_bw_density(const BumpArraySpec& bump, const TsovWdmSpec& tsov);

/// One pitch band of the UCIe-3D style schedule. The band is
/// [pitch_min_um, pitch_max_um); the last band also includes its upper edge.
struct PitchProfileRow {
    double pitch_min_um = 0.0;
    double pitch_max_um = 0.0;
    double max_datarate_gbps = 0.0;
    double overhead_total = 0.0;
    BumpPattern pattern = BumpPattern::Square;
    std::string note;
};

class PitchProfileTable {
   public:
    PitchProfileTable() = default;
    explicit PitchProfileTable(std::vector<PitchProfileRow> rows, std::string name = "custom");

    /// Reconstructed schedule shipped with the tool; also in data/pitch_profile.json.
    static PitchProfileTable builtin();

    const PitchProfileRow& lookup(double pitch_um) const;
    const std::vector<PitchProfileRow>& rows() const { return rows_; }
    const std::string& name() const { return name_; }
    double min_pitch_um() const { return rows_.front().pitch_min_um; }
    double max_pitch_um() const { return rows_.back().pitch_max_um; }

    /// Build a fully resolved bump spec for `pitch_um`.
    BumpArraySpec resolve(double pitch_um, double die_edge_mm = 1.0) const;

   private:
    std::vector<PitchProfileRow> rows_;
    std::string name_;
};

enum class BandwidthModel { Electrical, Optical };

/// Areal interconnect: density * die_edge^2, GB/s.
double total_bandwidth_3d(double density_gbyte_s_mm2, double die_edge_mm);
double total_bandwidth_3d(const BumpArraySpec& bump, const TsovWdmSpec& tsov, BandwidthModel model,
                          double die_edge_mm);

struct ShorelineBandwidth {
    double gbyte_s = 0.0;
    long fibers = 0;
    bool no_fibers = false;
};

/// Edge-coupled fibre array around the full perimeter:
/// floor(4 * edge / fiber_pitch) * N_wdm * datarate / 8.
ShorelineBandwidth total_bandwidth_shoreline(double die_edge_mm, double fiber_pitch_um, int n_wdm,
                                             double datarate_gbps);

struct PitchMatchRow {
    double pitch_um = 0.0;
    double electrical_total_gbyte_s = 0.0;
    double optical_total_gbyte_s = 0.0;
    bool beats_optical = false;
    bool within_one_percent = false;
    std::string error;
};

/// Electrical-only totals at each candidate pitch against a fixed optical
/// baseline of the same die size. Unsupported pitches carry an error string.
std::vector<PitchMatchRow> matching_pitch_table(const BumpArraySpec& optical_bump, const TsovWdmSpec& optical_tsov,
                                                std::span<const double> candidate_pitches_um,
                                                const PitchProfileTable& table);

/// Largest pitch whose realizable electrical density still reaches
/// `target_gbyte_s_mm2` under `table`; 0 when no pitch does. When a whole
/// band qualifies the band's (exclusive) upper edge is returned.
double break_even_pitch(double target_gbyte_s_mm2, const PitchProfileTable& table);

}  // namespace linkbench::bw
