// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <cmath>
#include <vector>

#include "linkbench/elec_energy.hpp"
#include "linkbench/error.hpp"
#include "linkbench/tline.hpp"

using namespace linkbench;
using elec::DspBlockKind;

TEST_SUITE("elec_energy") {

TEST_CASE("zero length costs only the receiver floor") {
    const elec::ElectricalLinkParams p;
    CHECK(elec::electrical_energy_per_bit(p, 0.0) == doctest::Approx(60.0));
}

TEST_CASE("driver energy is activity * C_line * vdd * V_launch") {
    const elec::ElectricalLinkParams p;
    const double len = 7.0;
    const auto op = elec::driver_operating_point(p, len);
    const double c_ff = tline::line_capacitance_per_m(p.geometry) * len * 1e-3 * 1e15;
    const double loss = tline::cpw_attenuation(p.geometry, 4e9) * len / 10.0;
    const double v_launch = p.min_receiver_swing_mv * 1e-3 / std::pow(10.0, -loss / 20.0);
    CHECK(op.line_capacitance_ff == doctest::Approx(c_ff));
    CHECK(op.channel_loss_db == doctest::Approx(loss));
    CHECK(op.launch_swing_v == doctest::Approx(v_launch));
    CHECK(op.driver_energy_fj == doctest::Approx(p.activity_factor * c_ff * p.vdd_v * v_launch));
    CHECK(elec::electrical_energy_per_bit(p, len) == doctest::Approx(op.driver_energy_fj + 60.0));
}

TEST_CASE("energy increases with length") {
    const elec::ElectricalLinkParams p;
    for (double l = 0.5; l < 40.0; l *= 1.7)
        CHECK(elec::electrical_energy_per_bit(p, 2.0 * l) > elec::electrical_energy_per_bit(p, l));
}

TEST_CASE("Nyquist is half the bit rate") {
    elec::ElectricalLinkParams p;
    CHECK(elec::nyquist_hz(p) == 4e9);
    p.bit_rate_gbps = 32.0;
    CHECK(elec::nyquist_hz(p) == 16e9);
}

TEST_CASE("launch swing above vdd is infeasible") {
    const elec::ElectricalLinkParams p;
    const double long_line = 200.0;
    CHECK_FALSE(elec::driver_operating_point(p, long_line).feasible);
    CHECK_FALSE(elec::try_electrical_energy_per_bit(p, long_line).has_value());
    CHECK_THROWS_AS(elec::electrical_energy_per_bit(p, long_line), InfeasibleLinkError);
    CHECK(elec::try_electrical_energy_per_bit(p, 5.0).has_value());
}

TEST_CASE("DSP block table values") {
    const std::vector<elec::DspBlockCost> fcc{elec::dsp_block(DspBlockKind::FEC), elec::dsp_block(DspBlockKind::CTLE),
                                              elec::dsp_block(DspBlockKind::CDR)};
    CHECK(elec::dsp_energy(fcc, 0.0) == doctest::Approx(1970.0));
    CHECK(elec::dsp_energy(fcc, 17.0) == doctest::Approx(1970.0));
    const std::vector<elec::DspBlockCost> dfe{elec::dsp_block(DspBlockKind::DFE)};
    CHECK(elec::dsp_energy(dfe, 10.0) == doctest::Approx(270.0));
    CHECK(elec::dsp_energy({}, 10.0) == 0.0);
    CHECK_THROWS_AS(elec::dsp_energy(dfe, -1.0), ValidationError);
    CHECK(elec::default_dsp_costs().size() == 4);
}

TEST_CASE("DSP names round-trip and reject junk") {
    for (auto k : {DspBlockKind::FEC, DspBlockKind::CTLE, DspBlockKind::DFE, DspBlockKind::CDR})
        CHECK(elec::parse_dsp_block_kind(elec::to_string(k)) == k);
    CHECK(elec::parse_dsp_block_kind("dfe") == DspBlockKind::DFE);
    CHECK_THROWS_AS(elec::parse_dsp_block_kind("FFE"), ValidationError);
}

TEST_CASE("invalid parameters are rejected") {
    elec::ElectricalLinkParams p;
    p.bit_rate_gbps = 0.0;
    CHECK_THROWS_AS(elec::validate(p), ValidationError);
    p = {};
    p.activity_factor = 1.5;
    CHECK_THROWS_AS(elec::validate(p), ValidationError);
    p = {};
    CHECK_THROWS_AS(elec::electrical_energy_per_bit(p, -1.0), ValidationError);
}

}  // TEST_SUITE
