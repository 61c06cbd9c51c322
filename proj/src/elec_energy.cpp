// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/elec_energy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "linkbench/error.hpp"

namespace linkbench::elec {

void validate(const ElectricalLinkParams& p) {
    using detail::require;
    require(p.bit_rate_gbps > 0.0, "electrical: bit_rate must be > 0");
    require(p.vdd_v > 0.0, "electrical: vdd must be > 0");
    require(p.receiver_energy_fj >= 0.0, "electrical: receiver_energy must be >= 0");
    require(p.activity_factor > 0.0 && p.activity_factor <= 1.0, "electrical: activity_factor must be in (0, 1]");
    require(p.min_receiver_swing_mv > 0.0, "electrical: min_receiver_swing must be > 0");
    tline::validate(p.geometry);
}

std::string_view to_string(DspBlockKind kind) {
    switch (kind) {
        case DspBlockKind::FEC: return "FEC";
        case DspBlockKind::CTLE: return "CTLE";
        case DspBlockKind::DFE: return "DFE";
        case DspBlockKind::CDR: return "CDR";
    }
    return "?";
}

DspBlockKind parse_dsp_block_kind(std::string_view name) {
    for (auto kind : {DspBlockKind::FEC, DspBlockKind::CTLE, DspBlockKind::DFE, DspBlockKind::CDR})
        if (std::equal(name.begin(), name.end(), to_string(kind).begin(), to_string(kind).end(),
                       [](char a, char b) { return std::toupper(static_cast<unsigned char>(a)) == b; }))
            return kind;
    throw ValidationError("unknown DSP block '" + std::string(name) + "' (expected FEC, CTLE, DFE or CDR)");
}

std::vector<DspBlockCost> default_dsp_costs() {
    return {
        {DspBlockKind::FEC, 20.0, 0.0},
        {DspBlockKind::DFE, 0.0, 27.0},
        {DspBlockKind::CTLE, 50.0, 0.0},
        {DspBlockKind::CDR, 1900.0, 0.0},
    };
}

DspBlockCost dsp_block(DspBlockKind kind) {
    for (const auto& b : default_dsp_costs())
        if (b.kind == kind) return b;
    throw ValidationError("no default cost for DSP block");
}

double dsp_energy(std::span<const DspBlockCost> blocks, double channel_loss_db) {
    detail::require(channel_loss_db >= 0.0, "dsp_energy: channel loss must be >= 0 dB");
    double total = 0.0;
    for (const auto& b : blocks) total += b.fixed_cost_fj + b.per_db_cost_fj * channel_loss_db;
    return total;
}

double nyquist_hz(const ElectricalLinkParams& p) { return 0.5 * p.bit_rate_gbps * 1e9; }

double channel_loss_db(const ElectricalLinkParams& p, double length_mm) {
    detail::require(length_mm >= 0.0, "channel_loss: length must be >= 0");
    return tline::cpw_attenuation(p.geometry, nyquist_hz(p)) * length_mm / 10.0;
}

DriverOperatingPoint driver_operating_point(const ElectricalLinkParams& p, double length_mm) {
    validate(p);
    detail::require(length_mm >= 0.0, "electrical_energy_per_bit: length must be >= 0");
    DriverOperatingPoint op;
    // F/m * mm -> fF
    op.line_capacitance_ff = tline::line_capacitance_per_m(p.geometry) * length_mm * 1e-3 * 1e15;
    op.channel_loss_db = channel_loss_db(p, length_mm);
    const double h = std::pow(10.0, -op.channel_loss_db / 20.0);
    op.launch_swing_v = p.min_receiver_swing_mv * 1e-3 / h;
    op.feasible = op.launch_swing_v <= p.vdd_v;
    op.driver_energy_fj = p.activity_factor * op.line_capacitance_ff * p.vdd_v * op.launch_swing_v;
    return op;
}

std::optional<double> try_electrical_energy_per_bit(const ElectricalLinkParams& p, double length_mm) {
    const auto op = driver_operating_point(p, length_mm);
    if (!op.feasible) return std::nullopt;
    return op.driver_energy_fj + p.receiver_energy_fj;
}

double electrical_energy_per_bit(const ElectricalLinkParams& p, double length_mm) {
    const auto op = driver_operating_point(p, length_mm);
    if (!op.feasible) {
        std::ostringstream os;
        os << "link infeasible at " << length_mm << " mm: launch swing " << op.launch_swing_v
           << " V exceeds vdd " << p.vdd_v << " V (" << op.channel_loss_db << " dB channel loss)";
        throw InfeasibleLinkError(os.str());
    }
    return op.driver_energy_fj + p.receiver_energy_fj;
}

}  // namespace linkbench::elec
