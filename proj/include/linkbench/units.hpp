// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace linkbench::units {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kMu0 = 1.25663706212e-6;        // H/m
inline constexpr double kElectronCharge = 1.602176634e-19;
inline constexpr double kBoltzmann = 1.380649e-23;
inline constexpr double kNeperToDb = 8.685889638065036;  // 20/ln(10)

template <typename Scalar>
Scalar db_to_power_ratio(Scalar db) {
    using std::pow;
    return pow(Scalar(10), db / Scalar(10));
}

template <typename Scalar>
Scalar power_ratio_to_db(Scalar ratio) {
    using std::log10;
    return Scalar(10) * log10(ratio);
}

/// dBm -> milliwatts.
template <typename Scalar>
Scalar dbm_to_mw(Scalar dbm) {
    return db_to_power_ratio(dbm);
}

template <typename Scalar>
Scalar mw_to_dbm(Scalar mw) {
    return power_ratio_to_db(mw);
}

/// Floor that tolerates representation error just below an integer
/// (e.g. 5.999999999999999 from 300 * 0.02).
inline double robust_floor(double x) { return std::floor(x + 1e-9); }

}  // namespace linkbench::units
