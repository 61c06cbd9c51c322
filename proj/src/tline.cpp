// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/tline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "linkbench/error.hpp"
#include "linkbench/units.hpp"

namespace linkbench::tline {

using std::numbers::pi;

void validate(const CpwGeometry& g) {
    using detail::require;
    require(g.line_width_um > 0.0, "cpw: line_width must be > 0 (invalid geometry)");
    require(g.gap_to_ground_um > 0.0, "cpw: gap_to_ground must be > 0 (invalid geometry)");
    require(g.metal_thickness_um > 0.0, "cpw: metal_thickness must be > 0");
    require(g.metal_conductivity_s_per_m > 0.0, "cpw: metal_conductivity must be > 0");
    require(g.dielectric_eps_r >= 1.0, "cpw: dielectric_eps_r must be >= 1");
    require(g.dielectric_loss_tangent >= 0.0 && g.dielectric_loss_tangent < 1.0,
            "cpw: dielectric_loss_tangent must be in [0, 1)");
}

double effective_permittivity(const CpwGeometry& g) { return 0.5 * (1.0 + g.dielectric_eps_r); }

double elliptic_ratio(double k) {
    if (k <= 1.0 / std::numbers::sqrt2) {
        const double sqrt_kp = std::sqrt(std::sqrt(1.0 - k * k));
        return pi / std::log(2.0 * (1.0 + sqrt_kp) / (1.0 - sqrt_kp));
    }
    const double sqrt_k = std::sqrt(k);
    return std::log(2.0 * (1.0 + sqrt_k) / (1.0 - sqrt_k)) / pi;
}

double elliptic_k(double k) {
    double a = 1.0;
    double b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-15 * a; ++i) {
        const double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
    }
    return pi / (2.0 * a);
}

namespace {

double aspect_k(const CpwGeometry& g) {
    return g.line_width_um / (g.line_width_um + 2.0 * g.gap_to_ground_um);
}

// DC resistance of the signal strip only; the ground planes are taken as
// wide enough that their return resistance is negligible.
double dc_alpha_np_per_m(const CpwGeometry& g, double z0) {
    if (std::isinf(g.metal_conductivity_s_per_m)) return 0.0;
    const double area_m2 = g.line_width_um * 1e-6 * g.metal_thickness_um * 1e-6;
    const double r_dc = 1.0 / (g.metal_conductivity_s_per_m * area_m2);
    return r_dc / (2.0 * z0);
}

// Skin-effect conductor loss of a CPW (Owyang-Wu / Gupta closed form).
double skin_alpha_np_per_m(const CpwGeometry& g, double freq_hz) {
    if (freq_hz <= 0.0 || std::isinf(g.metal_conductivity_s_per_m)) return 0.0;
    const double rs = std::sqrt(pi * freq_hz * units::kMu0 / g.metal_conductivity_s_per_m);
    const double a = 0.5 * g.line_width_um * 1e-6;
    const double b = a + g.gap_to_ground_um * 1e-6;
    const double t = g.metal_thickness_um * 1e-6;
    const double k = a / b;
    const double kp = std::sqrt(1.0 - k * k);
    // The edge-singularity logs go negative for metal much thicker than the
    // strip; clamp them at zero to stay within the formula's validity range.
    const auto edge = [&](double half) {
        const double arg = 8.0 * pi * half * (1.0 - k) / (t * (1.0 + k));
        return (pi + std::log(std::max(arg, 1.0))) / half;
    };
    const double prefactor = rs * std::sqrt(effective_permittivity(g)) /
                             (480.0 * pi * elliptic_k(k) * elliptic_k(kp) * (1.0 - k * k));
    return prefactor * (edge(a) + edge(b));
}

double dielectric_alpha_np_per_m(const CpwGeometry& g, double freq_hz) {
    // Infinite-substrate CPW: half the field sits in the dielectric, so the
    // filling factor (eps_eff - 1)/(eps_r - 1) is exactly 1/2.
    const double eps_eff = effective_permittivity(g);
    return pi * freq_hz / units::kSpeedOfLight * g.dielectric_eps_r * g.dielectric_loss_tangent /
           (2.0 * std::sqrt(eps_eff));
}

}  // namespace

double cpw_char_impedance(const CpwGeometry& g) {
    validate(g);
    return 30.0 * pi / std::sqrt(effective_permittivity(g)) / elliptic_ratio(aspect_k(g));
}

double line_capacitance_per_m(const CpwGeometry& g) {
    return std::sqrt(effective_permittivity(g)) / (units::kSpeedOfLight * cpw_char_impedance(g));
}

AttenuationBreakdown cpw_attenuation_breakdown(const CpwGeometry& g, double freq_hz) {
    if (!(freq_hz >= 0.0)) throw ValidationError("cpw_attenuation: frequency must be >= 0");
    const double z0 = cpw_char_impedance(g);
    const double dc = dc_alpha_np_per_m(g, z0);
    const double ac = skin_alpha_np_per_m(g, freq_hz);
    AttenuationBreakdown out;
    // np/m -> dB/cm
    out.conductor_db_per_cm = std::hypot(dc, ac) * units::kNeperToDb / 100.0;
    out.dielectric_db_per_cm = dielectric_alpha_np_per_m(g, freq_hz) * units::kNeperToDb / 100.0;
    return out;
}

double cpw_attenuation(const CpwGeometry& g, double freq_hz) {
    return cpw_attenuation_breakdown(g, freq_hz).total_db_per_cm();
}

Eigen::ArrayXd cpw_attenuation(const CpwGeometry& g, const Eigen::ArrayXd& freq_hz) {
    return freq_hz.unaryExpr([&g](double f) { return cpw_attenuation(g, f); });
}

double vtf(const CpwGeometry& g, double length_mm, double freq_hz) {
    if (!(length_mm >= 0.0)) throw ValidationError("vtf: length must be >= 0");
    return vtf_from_alpha(cpw_attenuation(g, freq_hz), length_mm);
}

Eigen::ArrayXd log_frequency_grid(double f_min_hz, double f_max_hz, Eigen::Index points) {
    detail::require(f_min_hz > 0.0 && f_max_hz >= f_min_hz, "frequency grid: need 0 < f_min <= f_max");
    detail::require(points >= 1, "frequency grid: need at least one point");
    if (points == 1) return Eigen::ArrayXd::Constant(1, f_min_hz);
    const Eigen::ArrayXd exponents =
        Eigen::ArrayXd::LinSpaced(points, std::log10(f_min_hz), std::log10(f_max_hz));
    return Eigen::pow(10.0, exponents);
}

Eigen::ArrayXd default_frequency_grid(double bit_rate_gbps) {
    const double nyquist_hz = 0.5 * bit_rate_gbps * 1e9;
    return log_frequency_grid(10e6, 2.0 * nyquist_hz, 64);
}

ChannelResponse channel_response(const CpwGeometry& g, double length_mm, const Eigen::ArrayXd& freq_hz) {
    if (!(length_mm >= 0.0)) throw ValidationError("channel_response: length must be >= 0");
    ChannelResponse out;
    out.frequency_hz = freq_hz;
    out.alpha_db_per_cm = cpw_attenuation(g, freq_hz);
    out.magnitude = Eigen::pow(10.0, -out.alpha_db_per_cm * (length_mm / 10.0) / 20.0);
    return out;
}

}  // namespace linkbench::tline
