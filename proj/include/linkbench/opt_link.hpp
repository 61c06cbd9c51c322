// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <functional>
#include <optional>
#include <span>

#include "linkbench/elec_energy.hpp"
#include "linkbench/rx_model.hpp"

namespace linkbench::optical {

/// Off-chip-laser silicon photonic link.
struct OpticalLinkParams {
    double waveguide_loss_db_per_cm = 1.0;
    double coupler_loss_db = 3.0;
    int n_couplers = 2;
    double modulator_loss_db = 1.0;
    double detector_responsivity_a_per_w = 1.0;
    double laser_wpe = 0.30;
    double c_mod_ff = 50.0;
    double c_load_ff = 7.0;
    double mod_driver_energy_fj = 50.0;
    double rx_energy_fj = 33.293;  // 0.5 * 7 fF * 1 V^2 + 29.793 fJ TIA
    double link_margin_db = 2.0;
    double extinction_ratio_db = 7.7;
};

void validate(const OpticalLinkParams& p);

/// Receiver energy from the detector load plus a fixed TIA cost:
/// activity * C_load * vdd^2 + tia_energy.
double receiver_energy(double c_load_ff, double vdd_v, double activity_factor, double tia_energy_fj);

/// Waveguide + couplers + modulator, dB.
double optical_path_loss(const OpticalLinkParams& p, double length_mm);

/// Laser electrical power in microwatts needed to put `sensitivity_oma_dbm`
/// (plus margin) on the detector after `path_loss_db`.
double required_laser_electrical_power(double sensitivity_oma_dbm, double path_loss_db,
                                       const OpticalLinkParams& p);

/// Laser + modulator driver + receiver, fJ/bit.
double optical_energy_per_bit(const OpticalLinkParams& p, double length_mm, double bit_rate_gbps,
                              double sensitivity_oma_dbm);

/// Receiver sensitivity for this link: the rx noise model evaluated at the
/// detector load capacitance, with the link's responsivity, extinction
/// ratio and bit rate substituted.
double link_sensitivity_dbm(const rx::RxNoiseParams& rx, const OpticalLinkParams& p, double bit_rate_gbps);

enum class Dominance { Crossover, OpticalEverywhere, ElectricalEverywhere };

struct PartitionResult {
    std::optional<double> length_mm;
    Dominance dominance = Dominance::ElectricalEverywhere;
};

struct PartitionOptions {
    double max_length_mm = 100.0;
    double scan_step_mm = 0.1;
    double tolerance_mm = 1e-3;
};

/// Smallest length in [0, max] where electrical(L) >= optical(L): bracketing
/// scan then bisection. A zero-length result means optical wins everywhere.
PartitionResult find_crossover(const std::function<double(double)>& electrical_fj,
                               const std::function<double(double)>& optical_fj, const PartitionOptions& opts = {});

/// Electrical energy including the given DSP blocks; +inf where the bare
/// channel cannot close.
double electrical_with_dsp(const elec::ElectricalLinkParams& e, std::span<const elec::DspBlockCost> dsp,
                           double length_mm);

PartitionResult partition_length(const elec::ElectricalLinkParams& e, const OpticalLinkParams& o,
                                 std::span<const elec::DspBlockCost> dsp_blocks, double sensitivity_oma_dbm,
                                 const PartitionOptions& opts = {});

}  // namespace linkbench::optical
