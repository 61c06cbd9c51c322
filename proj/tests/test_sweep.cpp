// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "linkbench/error.hpp"
#include "linkbench/scenario.hpp"
#include "linkbench/sweep.hpp"
#include "test_util.hpp"

using namespace linkbench;
using sweep::SweepKind;

namespace {
sweep::SweepSpec spec_of(SweepKind kind, std::vector<double> values) {
    sweep::SweepSpec s;
    s.kind = kind;
    s.axis.name = std::string(sweep::axis_name_for(kind));
    s.axis.values = std::move(values);
    s.output = std::string(sweep::to_string(kind));
    return s;
}
}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("energy sweep crosses between 15 and 16 mm") {
    const Scenario sc = load_scenario();
    std::vector<double> lengths(50);
    std::iota(lengths.begin(), lengths.end(), 1.0);
    const auto t = sweep::run_sweep(spec_of(SweepKind::EnergyVsLength, lengths), sc);
    REQUIRE(t.rows.size() == 50);
    const auto e = t.numeric_column("electrical_fj_per_bit");
    const auto o = t.numeric_column("optical_fj_per_bit");
    for (std::size_t i = 0; i < 15; ++i) CHECK(e[i] < o[i]);
    for (std::size_t i = 15; i < 25; ++i) CHECK(e[i] > o[i]);
}

TEST_CASE("infeasible rows carry an error instead of aborting") {
    const Scenario sc = load_scenario();
    const auto t = sweep::run_sweep(spec_of(SweepKind::EnergyVsLength, {1.0, 400.0}), sc);
    REQUIRE(t.rows.size() == 2);
    const auto err = t.column("error");
    CHECK(std::get<std::string>(t.rows[0][err]).empty());
    CHECK_FALSE(std::get<std::string>(t.rows[1][err]).empty());
}

TEST_CASE("wdm sweep at 5% is monotonic") {
    LoadOptions o;
    o.overrides = {"tsov.tsov_ratio=0.05"};
    const Scenario sc = load_scenario(o);
    const auto t = sweep::run_sweep(spec_of(SweepKind::WdmSweep, {4, 8, 16, 32}), sc);
    const auto v = t.numeric_column("optical_total_gbyte_s");
    REQUIRE(v.size() == 4);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
    CHECK(v.back() == 2048.0);
}

TEST_CASE("density sweep flags unsupported pitches per row") {
    const Scenario sc = load_scenario();
    const auto t = sweep::run_sweep(spec_of(SweepKind::BwDensityVsPitch, {0.5, 55.0, 500.0}), sc);
    const auto err = t.column("error");
    CHECK_FALSE(std::get<std::string>(t.rows[0][err]).empty());
    CHECK(std::get<std::string>(t.rows[1][err]).empty());
    CHECK_FALSE(std::get<std::string>(t.rows[2][err]).empty());
    CHECK(t.numeric_column("realizable_gbyte_s_mm2")[1] == doctest::Approx(925.98).epsilon(1e-5));
}

TEST_CASE("empty axis is rejected before evaluation") {
    const Scenario sc = load_scenario();
    CHECK_THROWS_AS(sweep::run_sweep(spec_of(SweepKind::WdmSweep, {}), sc), ValidationError);
}

TEST_CASE("evaluation order and thread count do not change the output") {
    const Scenario sc = load_scenario();
    const auto spec = spec_of(SweepKind::OmaVsCap, {1, 2, 3, 5, 8, 13, 21, 34});
    const std::string ref = sweep::to_csv(sweep::run_sweep(spec, sc, {1, {}}));
    std::vector<std::size_t> order(spec.axis.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(5);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(sweep::to_csv(sweep::run_sweep(spec, sc, {4, order})) == ref);
    }
    CHECK(sweep::to_csv(sweep::run_sweep(spec, sc)) == ref);
}

TEST_CASE("number formatting") {
    CHECK(sweep::format_number(925.98) == "925.98");
    CHECK(sweep::format_number(-0.0) == "0");
    CHECK(sweep::format_number(1e6) == "1e+06");
    CHECK(sweep::format_number(INFINITY) == "inf");
    CHECK(sweep::format_number(-INFINITY) == "-inf");
    CHECK(sweep::format_number(NAN) == "nan");
}

TEST_CASE("CSV quoting and provenance") {
    sweep::Table t;
    t.columns = {"name", "value"};
    t.rows = {{std::string("a,b"), 1.5}, {std::string("say \"hi\""), 2.0}};
    const std::string csv = sweep::to_csv(t, {"note"});
    CHECK(csv == "# note\r\nname,value\r\n\"a,b\",1.5\r\n\"say \"\"hi\"\"\",2\r\n");
    const auto lines = sweep::provenance_lines(load_scenario());
    REQUIRE_FALSE(lines.empty());
    CHECK(lines[0].find("linkbench") != std::string::npos);
}

TEST_CASE("fom table ranks the database") {
    const Scenario sc = load_scenario();
    const auto t = sweep::run_sweep(spec_of(SweepKind::FomTable, {}), sc);
    CHECK(t.rows.size() == sc.technologies.size());
    const auto f = t.numeric_column("fom");
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] <= f[i - 1]);
}

TEST_CASE("plots render, including a single point") {
    const Scenario sc = load_scenario();
    const auto spec = spec_of(SweepKind::OmaVsCap, {3.2});
    const auto t = sweep::run_sweep(spec, sc);
    const std::string svg = sweep::render_svg(t, sweep::default_style(spec, t));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    testutil::TempDir dir;
    CHECK_NOTHROW(sweep::emit_plot(t, sweep::default_style(spec, t), (dir.path() / "p.svg").string()));
    CHECK_THROWS_AS(sweep::emit_plot(t, sweep::default_style(spec, t), (dir.path() / "no/such/dir/p.svg").string()),
                    IoError);
}

TEST_CASE("range expansion") {
    const auto v = sweep::expand_range(1.0, 2.0, 0.1);
    CHECK(v.size() == 11);
    CHECK(v.back() == doctest::Approx(2.0));
    CHECK_THROWS_AS(sweep::expand_range(1.0, 2.0, 0.0), ValidationError);
    CHECK_THROWS_AS(sweep::expand_range(2.0, 1.0, 0.1), ValidationError);
}

}  // TEST_SUITE
