// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <cmath>
#include <vector>

#include "linkbench/bw_density.hpp"
#include "linkbench/error.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace linkbench;
using bw::BumpArraySpec;
using bw::BumpPattern;

TEST_SUITE("bw_density") {

TEST_CASE("bump density at 55 um") {
    const auto d = bw::bump_density(55.0);
    CHECK(d.per_mm2 == doctest::Approx(330.5785123966943).epsilon(1e-14));
    CHECK(d.count == 330);
    CHECK(bw::bump_density(1000.0).per_mm2 == 1.0);
    CHECK(bw::bump_density(1000.0).count == 1);
}

TEST_CASE("theoretical density") {
    BumpArraySpec s;
    s.pattern = BumpPattern::Square;
    const auto t = bw::theoretical_bw_density(s);
    CHECK(t.gbit_s_mm2 == doctest::Approx(32.0 / (0.055 * 0.055)));
    CHECK(t.gbyte_s_mm2() == doctest::Approx(1322.31).epsilon(1e-5));
    s.channel_datarate_gbps = 64.0;
    CHECK(bw::theoretical_bw_density(s).gbit_s_mm2 == doctest::Approx(2.0 * t.gbit_s_mm2));
    s.bump_pitch_um = 1000.0;
    s.channel_datarate_gbps = 8.0;
    CHECK(bw::theoretical_bw_density(s).gbit_s_mm2 == doctest::Approx(8.0));
}

TEST_CASE("realizable density worked example") {
    const BumpArraySpec s;  // 55 um, hex, OH 0.39, 32 Gb/s
    CHECK(std::abs(bw::realizable_bw_density(s) - 925.98) <= 0.01);
    CHECK(bw::realizable_bw_density(s) == doctest::Approx(oracle::realizable_gbyte(55, true, 32, 0.39)));
    BumpArraySpec sq = s;
    sq.pattern = BumpPattern::Square;
    CHECK(bw::realizable_bw_density(sq) == doctest::Approx(925.98 / 1.15).epsilon(1e-5));
    CHECK(bw::realizable_bw_density(sq) == doctest::Approx(805.2).epsilon(1e-4));
    BumpArraySpec full = s;
    full.overhead_total = 1.0;
    CHECK(bw::realizable_bw_density(full) == 0.0);
}

TEST_CASE("optical TSOV density") {
    const BumpArraySpec bump;
    bw::TsovWdmSpec t;
    auto o = bw::optical_bw_density(bump, t);
    CHECK(o.tsov_per_mm2 == 6);
    CHECK(o.gbyte_s_mm2 == 768.0);
    t.n_wdm = 39;
    CHECK(bw::optical_bw_density(bump, t).gbyte_s_mm2 == 936.0);
    t.tsov_ratio = 0.0;
    o = bw::optical_bw_density(bump, t);
    CHECK(o.gbyte_s_mm2 == 0.0);
    CHECK(o.no_tsov);
}

TEST_CASE("total bandwidth, areal") {
    CHECK(bw::total_bandwidth_3d(925.98, 1.0) == doctest::Approx(925.98));
    CHECK(bw::total_bandwidth_3d(925.98, 2.0) == doctest::Approx(4 * 925.98));
    const BumpArraySpec bump;
    const bw::TsovWdmSpec t;
    CHECK(bw::total_bandwidth_3d(bump, t, bw::BandwidthModel::Optical, 10.0) == doctest::Approx(76800.0));
    CHECK(bw::total_bandwidth_3d(bump, t, bw::BandwidthModel::Electrical, 1.0) == doctest::Approx(925.98).epsilon(1e-5));
}

TEST_CASE("total bandwidth, shoreline") {
    const auto s = bw::total_bandwidth_shoreline(1.0, 127.0, 32, 32.0);
    CHECK(s.fibers == 31);
    CHECK(s.gbyte_s == doctest::Approx(3968.0));
    const auto d = bw::total_bandwidth_shoreline(2.0, 127.0, 32, 32.0);
    CHECK(std::abs(d.fibers - 2 * s.fibers) <= 1);
    const auto none = bw::total_bandwidth_shoreline(1.0, 1e9, 32, 32.0);
    CHECK(none.gbyte_s == 0.0);
    CHECK(none.no_fibers);
}

TEST_CASE("pitch profile lookups") {
    const auto t = bw::PitchProfileTable::builtin();
    const auto& r55 = t.lookup(55.0);
    CHECK(r55.max_datarate_gbps == 32.0);
    CHECK(r55.overhead_total == 0.39);
    CHECK(r55.pattern == BumpPattern::Hex);
    CHECK(t.lookup(130.0).max_datarate_gbps == 32.0);  // upper edge of the last band is inclusive
    CHECK(t.lookup(10.0).overhead_total == 0.33);       // band edges belong to the upper band
    CHECK_THROWS_AS(t.lookup(0.5), UnsupportedPitchError);
    CHECK_THROWS_AS(t.lookup(131.0), UnsupportedPitchError);
    const auto s = t.resolve(55.0, 1.0);
    CHECK(bw::realizable_bw_density(s) == doctest::Approx(925.98).epsilon(1e-5));
}

TEST_CASE("pitch profile construction is validated") {
    using Row = bw::PitchProfileRow;
    CHECK_THROWS_AS(bw::PitchProfileTable(std::vector<Row>{}), ValidationError);
    CHECK_THROWS_AS(bw::PitchProfileTable({Row{1, 10, 4, 0.2, BumpPattern::Square, ""},
                                           Row{12, 20, 4, 0.2, BumpPattern::Square, ""}}),
                    ValidationError);
    CHECK_THROWS_AS(bw::PitchProfileTable({Row{10, 1, 4, 0.2, BumpPattern::Square, ""}}), ValidationError);
    CHECK_NOTHROW(bw::PitchProfileTable({Row{1, 10, 4, 0.2, BumpPattern::Square, ""},
                                         Row{10, 20, 8, 0.3, BumpPattern::Hex, ""}}));
}

TEST_CASE("pitch match against the 5% optical baseline") {
    const auto t = bw::PitchProfileTable::builtin();
    const BumpArraySpec bump;
    bw::TsovWdmSpec tsov;
    tsov.tsov_ratio = 0.05;
    const std::vector<double> pitches{1, 2, 4, 9, 16, 25, 32, 45, 55, 70, 110};
    const auto rows = bw::matching_pitch_table(bump, tsov, pitches, t);
    REQUIRE(rows.size() == pitches.size());
    for (const auto& r : rows) {
        CHECK(r.optical_total_gbyte_s == doctest::Approx(2048.0));
        CHECK(r.error.empty());
        if (r.pitch_um <= 9.0) CHECK(r.beats_optical);
        if (r.pitch_um >= 25.0) CHECK_FALSE(r.beats_optical);
    }
    const std::vector<double> bad{0.5, 9.0};
    const auto mixed = bw::matching_pitch_table(bump, tsov, bad, t);
    CHECK_FALSE(mixed[0].error.empty());
    CHECK(mixed[1].error.empty());

    bw::TsovWdmSpec none = tsov;
    none.tsov_ratio = 0.0;
    for (const auto& r : bw::matching_pitch_table(bump, none, pitches, t)) CHECK(r.beats_optical);
}

TEST_CASE("break-even pitch agrees with a brute-force scan") {
    const auto t = bw::PitchProfileTable::builtin();
    const double target = 2048.0;
    const double p = bw::break_even_pitch(target, t);
    CHECK(p == doctest::Approx(1000.0 / std::sqrt(6114.0)).epsilon(1e-12));
    CHECK(p == doctest::Approx(12.78902).epsilon(1e-6));

    // Largest pitch on a 1e-4 um grid whose longhand density reaches the target.
    double scan = 0.0;
    for (double q = 1.0; q <= 130.0; q += 1e-4) {
        const auto& row = t.lookup(q);
        if (oracle::realizable_gbyte(q, row.pattern == BumpPattern::Hex, row.max_datarate_gbps, row.overhead_total) >=
            target)
            scan = q;
    }
    CHECK(std::abs(scan - p) < 2e-4);

    const std::vector<double> one{p};
    BumpArraySpec bump;
    bw::TsovWdmSpec tsov;
    tsov.tsov_ratio = 0.05;
    const auto row = bw::matching_pitch_table(bump, tsov, one, t).front();
    CHECK(row.within_one_percent);
    CHECK(row.electrical_total_gbyte_s == doctest::Approx(2048.19).epsilon(1e-4));
}

TEST_CASE("pattern names") {
    CHECK(bw::parse_bump_pattern("hex") == BumpPattern::Hex);
    CHECK(bw::parse_bump_pattern("square") == BumpPattern::Square);
    CHECK_THROWS_AS(bw::parse_bump_pattern("triangle"), ValidationError);
    CHECK(bw::bump_efficiency(BumpPattern::Hex) == 1.15);
    CHECK(bw::bump_efficiency(BumpPattern::Square) == 1.0);
}

TEST_CASE("input validation") {
    BumpArraySpec s;
    s.bump_pitch_um = 0.0;
    CHECK_THROWS_AS(bw::realizable_bw_density(s), ValidationError);
    s = {};
    s.overhead_total = 1.2;
    CHECK_THROWS_AS(bw::validate(s), ValidationError);
    bw::TsovWdmSpec t;
    t.tsov_ratio = 1.5;
    CHECK_THROWS_AS(bw::validate(t), ValidationError);
    t = {};
    t.n_wdm = 0;
    CHECK_THROWS_AS(bw::validate(t), ValidationError);
}

TEST_CASE("scaling properties") {
    CHECK(props::quadratic_pitch_scaling(21).failures == 0);
    CHECK(props::area_vs_shoreline(22).failures == 0);
    CHECK(props::hex_square_ratio(23).failures == 0);
}

}  // TEST_SUITE
