// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "linkbench/elec_energy.hpp"
#include "linkbench/error.hpp"
#include "linkbench/opt_link.hpp"
#include "linkbench/rx_model.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace linkbench;
using optical::OpticalLinkParams;

TEST_SUITE("opt_link") {

TEST_CASE("path loss arithmetic") {
    const OpticalLinkParams p;
    CHECK(optical::optical_path_loss(p, 10.0) == doctest::Approx(8.0));
    OpticalLinkParams z;
    z.coupler_loss_db = 0.0;
    z.modulator_loss_db = 0.0;
    CHECK(optical::optical_path_loss(z, 0.0) == 0.0);
}

TEST_CASE("laser budget matches the longhand convention") {
    const OpticalLinkParams p;
    const double uw = optical::required_laser_electrical_power(-24.2, 13.98, p);
    CHECK(uw == doctest::Approx(oracle::laser_uw(-24.2, 13.98, 2.0, 7.7, 0.30)).epsilon(1e-12));
    CHECK(uw == doctest::Approx(353.8338919).epsilon(1e-9));
    CHECK(std::abs(uw / 263.95 - 1.0) <= 0.35);
}

TEST_CASE("laser budget limits") {
    OpticalLinkParams p;
    p.link_margin_db = 0.0;
    p.laser_wpe = 1.0;
    p.extinction_ratio_db = std::numeric_limits<double>::infinity();
    const double oma_uw = std::pow(10.0, -24.2 / 10.0) * 1e3;
    CHECK(optical::required_laser_electrical_power(-24.2, 0.0, p) == doctest::Approx(oma_uw / 2.0));

    const OpticalLinkParams d;
    const double a = optical::required_laser_electrical_power(-20.0, 5.0, d);
    const double b = optical::required_laser_electrical_power(-20.0, 15.0, d);
    CHECK(b / a == doctest::Approx(10.0).epsilon(1e-12));

    p.extinction_ratio_db = 0.0;
    CHECK_THROWS_AS(optical::required_laser_electrical_power(-24.2, 0.0, p), DomainError);
}

TEST_CASE("modulator term in isolation") {
    OpticalLinkParams p;
    p.rx_energy_fj = 0.0;
    const double e = optical::optical_energy_per_bit(p, 0.0, 8.0, -300.0);
    CHECK(e == doctest::Approx(50.0));
}

TEST_CASE("receiver energy is activity * C * vdd^2 + TIA") {
    CHECK(optical::receiver_energy(7.0, 1.0, 0.5, 29.793) == doctest::Approx(33.293));
    CHECK(optical::receiver_energy(7.0, 1.0, 0.5, 29.793) == doctest::Approx(OpticalLinkParams{}.rx_energy_fj));
}

TEST_CASE("calibrated partition lengths") {
    const elec::ElectricalLinkParams e;
    const OpticalLinkParams o;
    const rx::RxNoiseParams r;
    const double sens = optical::link_sensitivity_dbm(r, o, e.bit_rate_gbps);
    const auto bare = optical::partition_length(e, o, {}, sens);
    REQUIRE(bare.dominance == optical::Dominance::Crossover);
    CHECK(*bare.length_mm == doctest::Approx(15.1).epsilon(1.0 / 15.1));
    CHECK(std::abs(*bare.length_mm - 15.1) < 0.01);

    const std::vector<elec::DspBlockCost> dfe{elec::dsp_block(elec::DspBlockKind::DFE)};
    const auto eq = optical::partition_length(e, o, dfe, sens);
    REQUIRE(eq.dominance == optical::Dominance::Crossover);
    CHECK(std::abs(*eq.length_mm - 2.5) < 0.01);
}

TEST_CASE("crossover degenerate cases") {
    const auto zero = optical::find_crossover([](double l) { return 60.0 + l; }, [](double) { return 0.0; });
    CHECK(zero.dominance == optical::Dominance::OpticalEverywhere);
    CHECK(*zero.length_mm == 0.0);

    const auto never = optical::find_crossover([](double) { return 1.0; }, [](double) { return 2.0; });
    CHECK(never.dominance == optical::Dominance::ElectricalEverywhere);
    CHECK_FALSE(never.length_mm.has_value());

    const auto line = optical::find_crossover([](double l) { return 10.0 * l; }, [](double) { return 33.3; });
    REQUIRE(line.length_mm.has_value());
    CHECK(*line.length_mm == doctest::Approx(3.33).epsilon(1e-3));
}

TEST_CASE("infeasible electrical lengths count as +inf") {
    const elec::ElectricalLinkParams e;
    CHECK(std::isinf(optical::electrical_with_dsp(e, {}, 500.0)));
}

TEST_CASE("optical curve is flat with lossless waveguides") {
    CHECK(props::optical_flatness(3).failures == 0);
}

TEST_CASE("parameter validation") {
    OpticalLinkParams p;
    p.waveguide_loss_db_per_cm = -1.0;
    CHECK_THROWS_AS(optical::validate(p), ValidationError);
    p = {};
    p.laser_wpe = 0.0;
    CHECK_THROWS_AS(optical::validate(p), ValidationError);
    p = {};
    p.laser_wpe = 1.2;
    CHECK_THROWS_AS(optical::validate(p), ValidationError);
}

}  // TEST_SUITE
