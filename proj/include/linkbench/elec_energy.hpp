// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linkbench/tline.hpp"

namespace linkbench::elec {

/// Copper point-to-point link: capacitive driver, CPW channel, fixed-cost
/// receiver. `activity_factor` and `min_receiver_swing_mv` are calibration
/// constants (see tools/calibrate.cpp).
struct ElectricalLinkParams {
    double bit_rate_gbps = 8.0;
    double vdd_v = 1.0;
    tline::CpwGeometry geometry{};
    double receiver_energy_fj = 60.0;
    double activity_factor = 0.5;
    double min_receiver_swing_mv = 35.6337;
};

void validate(const ElectricalLinkParams& p);

enum class DspBlockKind { FEC, CTLE, DFE, CDR };

std::string_view to_string(DspBlockKind kind);
DspBlockKind parse_dsp_block_kind(std::string_view name);

struct DspBlockCost {
    DspBlockKind kind;
    double fixed_cost_fj = 0.0;
    double per_db_cost_fj = 0.0;
};

/// Published energy costs of high-speed link components (fJ/bit, or
/// fJ/bit/dB for the DFE).
std::vector<DspBlockCost> default_dsp_costs();

/// Default-cost entry for one block kind.
DspBlockCost dsp_block(DspBlockKind kind);

/// Sum of fixed costs plus per-dB costs times the channel loss.
double dsp_energy(std::span<const DspBlockCost> blocks, double channel_loss_db);

struct DriverOperatingPoint {
    double line_capacitance_ff = 0.0;
    double channel_loss_db = 0.0;  // at Nyquist
    double launch_swing_v = 0.0;
    double driver_energy_fj = 0.0;
    bool feasible = true;  // launch swing fits under vdd
};

double nyquist_hz(const ElectricalLinkParams& p);

/// Driver state needed to deliver min_receiver_swing across `length_mm`.
DriverOperatingPoint driver_operating_point(const ElectricalLinkParams& p, double length_mm);

/// Channel loss in dB at Nyquist for the given length.
double channel_loss_db(const ElectricalLinkParams& p, double length_mm);

/// Driver + receiver energy, or nullopt when the required launch swing
/// exceeds vdd (the channel cannot close without equalisation).
std::optional<double> try_electrical_energy_per_bit(const ElectricalLinkParams& p, double length_mm);

/// Same as the try_ form but throws InfeasibleLinkError.
double electrical_energy_per_bit(const ElectricalLinkParams& p, double length_mm);

}  // namespace linkbench::elec
