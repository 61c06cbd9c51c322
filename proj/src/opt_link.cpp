// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/opt_link.hpp"

#include <cmath>
#include <limits>

#include "linkbench/error.hpp"
#include "linkbench/units.hpp"

namespace linkbench::optical {

void validate(const OpticalLinkParams& p) {
    using detail::require;
    require(p.waveguide_loss_db_per_cm >= 0.0, "optical: waveguide_loss must be >= 0");
    require(p.coupler_loss_db >= 0.0, "optical: coupler_loss must be >= 0");
    require(p.n_couplers >= 0, "optical: n_couplers must be >= 0");
    require(p.modulator_loss_db >= 0.0, "optical: modulator_loss must be >= 0");
    require(p.detector_responsivity_a_per_w > 0.0, "optical: detector_responsivity must be > 0");
    require(p.laser_wpe > 0.0 && p.laser_wpe <= 1.0, "optical: laser_wpe must be in (0, 1]");
    require(p.c_mod_ff >= 0.0 && p.c_load_ff >= 0.0, "optical: capacitances must be >= 0");
    require(p.mod_driver_energy_fj >= 0.0 && p.rx_energy_fj >= 0.0, "optical: energies must be >= 0");
    require(p.link_margin_db >= 0.0, "optical: link_margin must be >= 0");
    require(p.extinction_ratio_db >= 0.0, "optical: extinction_ratio must be >= 0 dB");
}

double receiver_energy(double c_load_ff, double vdd_v, double activity_factor, double tia_energy_fj) {
    return activity_factor * c_load_ff * vdd_v * vdd_v + tia_energy_fj;
}

double optical_path_loss(const OpticalLinkParams& p, double length_mm) {
    detail::require(length_mm >= 0.0, "optical_path_loss: length must be >= 0");
    return p.waveguide_loss_db_per_cm * length_mm / 10.0 + p.n_couplers * p.coupler_loss_db + p.modulator_loss_db;
}

double required_laser_electrical_power(double sensitivity_oma_dbm, double path_loss_db, const OpticalLinkParams& p) {
    const double source_oma_dbm = sensitivity_oma_dbm + path_loss_db + p.link_margin_db;
    const double source_oma_uw = units::dbm_to_mw(source_oma_dbm) * 1e3;
    const double avg_uw = source_oma_uw * rx::average_to_oma_ratio(p.extinction_ratio_db);
    return avg_uw / p.laser_wpe;
}

double optical_energy_per_bit(const OpticalLinkParams& p, double length_mm, double bit_rate_gbps,
                              double sensitivity_oma_dbm) {
    detail::require(bit_rate_gbps > 0.0, "optical_energy_per_bit: bit_rate must be > 0");
    const double laser_uw = required_laser_electrical_power(sensitivity_oma_dbm, optical_path_loss(p, length_mm), p);
    // uW / (Gb/s) = fJ/bit
    return laser_uw / bit_rate_gbps + p.mod_driver_energy_fj + p.rx_energy_fj;
}

double link_sensitivity_dbm(const rx::RxNoiseParams& rx_params, const OpticalLinkParams& p, double bit_rate_gbps) {
    rx::RxNoiseParams local = rx_params;
    local.responsivity_a_per_w = p.detector_responsivity_a_per_w;
    local.extinction_ratio_db = p.extinction_ratio_db;
    local.bit_rate_gbps = bit_rate_gbps;
    return rx::oma_sensitivity(p.c_load_ff, local);
}

PartitionResult find_crossover(const std::function<double(double)>& electrical_fj,
                               const std::function<double(double)>& optical_fj, const PartitionOptions& opts) {
    detail::require(opts.max_length_mm > 0.0 && opts.scan_step_mm > 0.0 && opts.tolerance_mm > 0.0,
                    "partition_length: max length, scan step and tolerance must be > 0");
    const auto electrical_wins_or_ties = [&](double l) { return electrical_fj(l) >= optical_fj(l); };

    if (electrical_wins_or_ties(0.0)) return {0.0, Dominance::OpticalEverywhere};

    double lo = 0.0;
    const auto steps = static_cast<long>(std::ceil(opts.max_length_mm / opts.scan_step_mm));
    for (long i = 1; i <= steps; ++i) {
        const double hi = std::min(opts.max_length_mm, static_cast<double>(i) * opts.scan_step_mm);
        if (electrical_wins_or_ties(hi)) {
            double left = lo;
            double right = hi;
            while (right - left > opts.tolerance_mm) {
                const double mid = 0.5 * (left + right);
                (electrical_wins_or_ties(mid) ? right : left) = mid;
            }
            return {0.5 * (left + right), Dominance::Crossover};
        }
        lo = hi;
    }
    return {std::nullopt, Dominance::ElectricalEverywhere};
}

double electrical_with_dsp(const elec::ElectricalLinkParams& e, std::span<const elec::DspBlockCost> dsp,
                           double length_mm) {
    const auto bare = elec::try_electrical_energy_per_bit(e, length_mm);
    if (!bare) return std::numeric_limits<double>::infinity();
    return *bare + elec::dsp_energy(dsp, elec::channel_loss_db(e, length_mm));
}

PartitionResult partition_length(const elec::ElectricalLinkParams& e, const OpticalLinkParams& o,
                                 std::span<const elec::DspBlockCost> dsp_blocks, double sensitivity_oma_dbm,
                                 const PartitionOptions& opts) {
    elec::validate(e);
    validate(o);
    return find_crossover([&](double l) { return electrical_with_dsp(e, dsp_blocks, l); },
                          [&](double l) { return optical_energy_per_bit(o, l, e.bit_rate_gbps, sensitivity_oma_dbm); },
                          opts);
}

}  // namespace linkbench::optical
