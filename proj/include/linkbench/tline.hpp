// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <Eigen/Core>

namespace linkbench::tline {

/// Coplanar-waveguide cross-section on a silicon interposer.
///
/// Lateral dimensions are in micrometres. Defaults are the interposer line
/// used for the copper-vs-optical energy comparison; the metal thickness,
/// conductivity and loss tangent are conventional BEOL copper/oxide values.
struct CpwGeometry {
    double line_width_um = 2.0;
    double gap_to_ground_um = 2.0;
    double metal_thickness_um = 2.0;
    double metal_conductivity_s_per_m = 5.8e7;  // may be +inf (lossless metal)
    double dielectric_eps_r = 3.9;
    double dielectric_loss_tangent = 0.004;
};

/// Throws ValidationError when a length is non-positive, eps_r < 1 or the
/// loss tangent is outside [0, 1).
void validate(const CpwGeometry& geom);

/// Magnitude-only frequency response of a channel of fixed length.
struct ChannelResponse {
    Eigen::ArrayXd frequency_hz;
    Eigen::ArrayXd magnitude;
    Eigen::ArrayXd alpha_db_per_cm;
};

/// Quasi-static effective permittivity, (1 + eps_r) / 2.
double effective_permittivity(const CpwGeometry& geom);

/// K(k)/K(k') by Hilberg's closed form (relative error well below 1e-4).
double elliptic_ratio(double k);

/// Complete elliptic integral of the first kind K(k), modulus k, by AGM.
double elliptic_k(double k);

/// Conformal-mapping CPW impedance in ohms:
/// Z0 = 30*pi / sqrt(eps_eff) * K(k') / K(k), k = w / (w + 2s).
double cpw_char_impedance(const CpwGeometry& geom);

/// Line capacitance per metre, C' = sqrt(eps_eff) / (c0 * Z0).
double line_capacitance_per_m(const CpwGeometry& geom);

struct AttenuationBreakdown {
    double conductor_db_per_cm = 0.0;
    double dielectric_db_per_cm = 0.0;
    double total_db_per_cm() const { return conductor_db_per_cm + dielectric_db_per_cm; }
};

/// Conductor + dielectric loss at one frequency. The conductor term is the
/// quadrature sum of the DC resistance floor and the skin-effect loss.
AttenuationBreakdown cpw_attenuation_breakdown(const CpwGeometry& geom, double freq_hz);

double cpw_attenuation(const CpwGeometry& geom, double freq_hz);

/// Vectorised attenuation over a frequency grid, dB/cm.
Eigen::ArrayXd cpw_attenuation(const CpwGeometry& geom, const Eigen::ArrayXd& freq_hz);

/// |H| for a given loss and length: 10^(-alpha * length / 20).
template <typename Scalar>
Scalar vtf_from_alpha(Scalar alpha_db_per_cm, Scalar length_mm) {
    using std::pow;
    return pow(Scalar(10), -alpha_db_per_cm * (length_mm / Scalar(10)) / Scalar(20));
}

double vtf(const CpwGeometry& geom, double length_mm, double freq_hz);

/// Log-spaced grid, `points` samples from f_min to f_max inclusive.
Eigen::ArrayXd log_frequency_grid(double f_min_hz, double f_max_hz, Eigen::Index points = 64);

/// Default analysis grid: 64 log points, 10 MHz up to twice Nyquist.
Eigen::ArrayXd default_frequency_grid(double bit_rate_gbps);

ChannelResponse channel_response(const CpwGeometry& geom, double length_mm,
                                 const Eigen::ArrayXd& freq_hz);

}  // namespace linkbench::tline
