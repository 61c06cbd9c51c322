// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <cmath>

#include "linkbench/error.hpp"
#include "linkbench/rx_model.hpp"
#include "linkbench/units.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace linkbench;
using rx::RxNoiseParams;

TEST_SUITE("rx_model") {

TEST_CASE("Q at 1e-12 against the integrated-tail oracle") {
    const double ref = oracle::q_for_ber(1e-12);
    CHECK(ref == doctest::Approx(7.034483825301132).epsilon(1e-9));
    CHECK(std::abs(rx::q_from_ber(1e-12) - ref) < 1e-3);
    CHECK(std::abs(rx::q_from_ber(1e-12) - ref) < 1e-9);
}

TEST_CASE("BER/Q round trip") {
    for (double ber : {1e-3, 1e-6, 1e-9, 1e-12, 1e-15}) {
        const double back = rx::ber_from_q(rx::q_from_ber(ber));
        CHECK(std::abs(back - ber) / ber < 1e-6);
    }
    for (double q : {0.5, 3.0, 6.0, 7.0}) CHECK(rx::q_from_ber(rx::ber_from_q(q)) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("BER domain") {
    CHECK_THROWS_AS(rx::q_from_ber(0.5), DomainError);
    CHECK_THROWS_AS(rx::q_from_ber(0.0), DomainError);
    CHECK_THROWS_AS(rx::q_from_ber(-1.0), DomainError);
}

TEST_CASE("calibration anchor and held-out 28 fF point") {
    const RxNoiseParams p;
    const double s3 = rx::oma_sensitivity(3.2, p);
    const double s28 = rx::oma_sensitivity(28.0, p);
    CHECK(std::abs(s3 - (-24.2)) <= 0.1);
    CHECK(std::abs((s28 - s3) - 8.36) <= 0.3);
}

TEST_CASE("dark-current-only sensitivity has a closed form") {
    const RxNoiseParams p;
    rx::NoiseMask m;
    m.shot = m.rin = m.tia_thermal = m.tia_capacitive = false;
    const double q = rx::q_from_ber(p.target_ber);
    const double nbw = p.noise_bandwidth_factor * p.bit_rate_gbps * 1e9;
    const double sigma = std::sqrt(2.0 * units::kElectronCharge * p.pd_dark_current_na * 1e-9 * nbw);
    const auto s = rx::solve_sensitivity(10.0, p, m);
    CHECK(s.oma_w == doctest::Approx(q * sigma / p.responsivity_a_per_w).epsilon(1e-12));
}

TEST_CASE("shot + dark sensitivity solves the reduced quadratic") {
    const RxNoiseParams p;
    rx::NoiseMask m;
    m.rin = m.tia_thermal = m.tia_capacitive = false;
    const double q = rx::q_from_ber(p.target_ber);
    const double nbw = p.noise_bandwidth_factor * p.bit_rate_gbps * 1e9;
    const double er = std::pow(10.0, p.extinction_ratio_db / 10.0);
    const double avg_per_oma = (er + 1.0) / (2.0 * (er - 1.0));
    const double r = p.responsivity_a_per_w;
    const double qe = units::kElectronCharge;
    // (R x)^2 = Q^2 (2 q R avg x NBW + 2 q I_d NBW)
    const double a = r * r;
    const double b = -q * q * 2.0 * qe * r * avg_per_oma * nbw;
    const double c = -q * q * 2.0 * qe * p.pd_dark_current_na * 1e-9 * nbw;
    const double x = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
    CHECK(rx::solve_sensitivity(10.0, p, m).oma_w == doctest::Approx(x).epsilon(1e-10));
}

TEST_CASE("noise terms") {
    const RxNoiseParams p;
    const auto n0 = rx::noise_at(0.0, 3.2, p);
    CHECK(n0.shot == 0.0);
    CHECK(n0.rin == 0.0);
    CHECK(n0.dark > 0.0);
    CHECK(n0.tia > 0.0);
    const auto n1 = rx::noise_at(1e-5, 3.2, p);
    CHECK(n1.shot > 0.0);
    CHECK(n1.rin > 0.0);
    CHECK(rx::noise_at(0.0, 28.0, p).tia > n0.tia);
}

TEST_CASE("sensitivity monotonic in capacitance") {
    CHECK(props::oma_monotonic(41).failures == 0);
}

TEST_CASE("capacitance stack-up") {
    CHECK(rx::capacitance_stackup(0.08, 7.2, 20.72) == doctest::Approx(28.0));
    CHECK(rx::capacitance_stackup(0, 0, 0) == 0.0);
    CHECK(rx::capacitance_stackup(0.08, 31.6, 20.72) > rx::capacitance_stackup(0.08, 7.2, 20.72));
    CHECK_THROWS_AS(rx::capacitance_stackup(-1.0, 7.2, 20.72), ValidationError);
}

TEST_CASE("fixed point reports non-convergence") {
    RxNoiseParams p;
    p.rin_db_per_hz = 30.0;  // RIN noise grows faster than the signal
    CHECK_THROWS_AS(rx::solve_sensitivity(3.2, p), ModelError);
}

TEST_CASE("invalid parameters") {
    RxNoiseParams p;
    p.responsivity_a_per_w = 0.0;
    CHECK_THROWS_AS(rx::validate(p), ValidationError);
    p = {};
    CHECK_THROWS_AS(rx::oma_sensitivity(0.01, p), ValidationError);  // below the PD capacitance
}

}  // TEST_SUITE
