// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/rx_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "linkbench/error.hpp"
#include "linkbench/units.hpp"

namespace linkbench::rx {

void validate(const RxNoiseParams& p) {
    using detail::require;
    require(p.target_ber > 0.0 && p.target_ber < 0.5, "rx: target_ber must be in (0, 0.5)");
    require(p.responsivity_a_per_w > 0.0, "rx: responsivity must be > 0");
    require(p.pd_capacitance_ff >= 0.0 && p.bump_capacitance_ff >= 0.0 && p.tia_input_capacitance_ff >= 0.0,
            "rx: capacitances must be >= 0");
    require(p.pd_dark_current_na >= 0.0, "rx: dark current must be >= 0");
    require(p.bit_rate_gbps > 0.0, "rx: bit_rate must be > 0");
    require(p.noise_bandwidth_factor > 0.0, "rx: noise_bandwidth_factor must be > 0");
    require(p.tia_noise_coefficient >= 0.0, "rx: tia_noise_coefficient must be >= 0");
    require(p.tia_feedback_resistance_ohm > 0.0, "rx: tia_feedback_resistance must be > 0");
    require(p.extinction_ratio_db > 0.0, "rx: extinction_ratio must be > 0 dB");
    require(p.temperature_k > 0.0, "rx: temperature must be > 0");
}

double ber_from_q(double q) { return 0.5 * std::erfc(q / std::numbers::sqrt2); }

double q_from_ber(double ber) {
    if (!(ber > 0.0 && ber < 0.5)) {
        std::ostringstream os;
        os << "q_from_ber: ber must be in (0, 0.5), got " << ber;
        throw DomainError(os.str());
    }
    // ber_from_q is strictly decreasing on [0, inf); ber_from_q(40) ~ 1e-350.
    double lo = 0.0;
    double hi = 40.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (ber_from_q(mid) > ber)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double average_to_oma_ratio(double extinction_ratio_db) {
    if (!(extinction_ratio_db > 0.0))
        throw DomainError("extinction ratio of 0 dB implies infinite average power");
    const double inv_er = 1.0 / units::db_to_power_ratio(extinction_ratio_db);
    return 0.5 * (1.0 + inv_er) / (1.0 - inv_er);
}

NoiseBreakdown noise_at(double oma_w, double c_total_ff, const RxNoiseParams& p, const NoiseMask& mask) {
    const double nbw = p.noise_bandwidth_factor * p.bit_rate_gbps * 1e9;
    const double i_avg = p.responsivity_a_per_w * oma_w * average_to_oma_ratio(p.extinction_ratio_db);
    const double c_f = c_total_ff * 1e-15;
    const double q = units::kElectronCharge;
    NoiseBreakdown n;
    if (mask.shot) n.shot = 2.0 * q * i_avg * nbw;
    if (mask.rin) n.rin = units::db_to_power_ratio(p.rin_db_per_hz) * i_avg * i_avg * nbw;
    if (mask.dark) n.dark = 2.0 * q * p.pd_dark_current_na * 1e-9 * nbw;
    if (mask.tia_thermal) n.tia += 4.0 * units::kBoltzmann * p.temperature_k / p.tia_feedback_resistance_ohm * nbw;
    if (mask.tia_capacitive) n.tia += p.tia_noise_coefficient * c_f * c_f * nbw * nbw * nbw;
    return n;
}

double q_at(double oma_w, double c_total_ff, const RxNoiseParams& p, const NoiseMask& mask) {
    return p.responsivity_a_per_w * oma_w / std::sqrt(noise_at(oma_w, c_total_ff, p, mask).total());
}

Sensitivity solve_sensitivity(double c_total_ff, const RxNoiseParams& p, const NoiseMask& mask) {
    validate(p);
    if (!(c_total_ff >= p.pd_capacitance_ff))
        throw ValidationError("oma_sensitivity: total capacitance must be >= PD capacitance");
    const double q_target = q_from_ber(p.target_ber);
    const double r = p.responsivity_a_per_w;

    double oma = q_target * std::sqrt(noise_at(0.0, c_total_ff, p, mask).total()) / r;
    constexpr int kMaxIterations = 1000;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const double next = q_target * std::sqrt(noise_at(oma, c_total_ff, p, mask).total()) / r;
        if (!std::isfinite(next)) break;
        const bool done = std::abs(next - oma) <= 1e-14 * next;
        oma = next;
        if (done) {
            if (!(oma > 0.0)) throw ConvergenceError("oma_sensitivity: all noise sources are zero");
            return {units::mw_to_dbm(oma * 1e3), oma, it};
        }
    }
    std::ostringstream os;
    os << "oma_sensitivity: fixed-point iteration did not converge after " << kMaxIterations
       << " iterations (c_total=" << c_total_ff << " fF, last OMA=" << oma
       << " W, RIN=" << p.rin_db_per_hz << " dB/Hz); the RIN term likely exceeds the Q budget";
    throw ConvergenceError(os.str());
}

double oma_sensitivity(double c_total_ff, const RxNoiseParams& p) {
    return solve_sensitivity(c_total_ff, p).oma_dbm;
}

double capacitance_stackup(double pd_ff, double bump_ff, double tia_ff) {
    detail::require(pd_ff >= 0.0 && bump_ff >= 0.0 && tia_ff >= 0.0, "capacitance_stackup: inputs must be >= 0");
    return pd_ff + bump_ff + tia_ff;
}

}  // namespace linkbench::rx
