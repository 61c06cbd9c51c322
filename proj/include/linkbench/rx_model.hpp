// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

namespace linkbench::rx {

/// Photodetector + TIA noise parameters for an NRZ optical receiver.
///
/// The PD numbers are for a monolithic Ge detector (0.08 fF, 0.72 nA,
/// 0.93 A/W). The TIA input-referred noise is modelled as
///
///     i_n^2 = 4kT/R_f * NBW + coef * C_total^2 * NBW^3
///
/// with NBW = noise_bandwidth_factor * bit_rate. `tia_noise_coefficient` and
/// `tia_feedback_resistance_ohm` are calibration constants, see
/// tools/calibrate.cpp.
struct RxNoiseParams {
    double pd_capacitance_ff = 0.08;
    double pd_dark_current_na = 0.72;
    double responsivity_a_per_w = 0.93;
    double rin_db_per_hz = -140.0;
    double bit_rate_gbps = 32.0;
    double target_ber = 1e-12;
    double bump_capacitance_ff = 7.2;        // DBI bump, Q3D extraction at 5 GHz
    double tia_input_capacitance_ff = 20.72;
    double noise_bandwidth_factor = 0.7;
    double tia_noise_coefficient = 1.38272e-15;  // A^2 / (F^2 Hz^3)
    double tia_feedback_resistance_ohm = 5000.0;
    double extinction_ratio_db = 7.7;
    double temperature_k = 300.0;
};

void validate(const RxNoiseParams& p);

/// Gaussian BER for a given Q, 0.5 * erfc(Q / sqrt 2).
double ber_from_q(double q);

/// Inverse of ber_from_q by bracketed bisection. Throws DomainError unless
/// 0 < ber < 0.5.
double q_from_ber(double ber);

/// Variance contributions (A^2) at a given OMA.
struct NoiseBreakdown {
    double shot = 0.0;
    double rin = 0.0;
    double dark = 0.0;
    double tia = 0.0;
    double total() const { return shot + rin + dark + tia; }
};

/// Which terms enter the noise sum; used to isolate sources in analysis.
struct NoiseMask {
    bool shot = true;
    bool rin = true;
    bool dark = true;
    bool tia_thermal = true;
    bool tia_capacitive = true;
};

/// Average optical power over OMA for a given extinction ratio,
/// (ER + 1) / (2 (ER - 1)); tends to 1/2 as ER -> inf.
double average_to_oma_ratio(double extinction_ratio_db);

NoiseBreakdown noise_at(double oma_w, double c_total_ff, const RxNoiseParams& p,
                        const NoiseMask& mask = {});

/// Q realised at a given OMA: R * OMA / sigma_total.
double q_at(double oma_w, double c_total_ff, const RxNoiseParams& p, const NoiseMask& mask = {});

struct Sensitivity {
    double oma_dbm = 0.0;
    double oma_w = 0.0;
    int iterations = 0;
};

/// OMA sensitivity for total TIA input capacitance c_total_ff.
/// Solves Q * sigma(OMA) = R * OMA by fixed-point iteration; throws
/// ConvergenceError when RIN alone would exceed the Q budget.
Sensitivity solve_sensitivity(double c_total_ff, const RxNoiseParams& p, const NoiseMask& mask = {});

double oma_sensitivity(double c_total_ff, const RxNoiseParams& p);

/// PD + bump + TIA input capacitance.
double capacitance_stackup(double pd_ff, double bump_ff, double tia_ff);

}  // namespace linkbench::rx
