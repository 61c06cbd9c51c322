// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <doctest.h>

#include <vector>

#include "linkbench/error.hpp"
#include "linkbench/fom.hpp"
#include "properties.hpp"

using namespace linkbench;
using fom::TechnologyEntry;

TEST_SUITE("fom") {

TEST_CASE("unit entry has FoM 1") {
    CHECK(fom::compute_fom({"unit", 1, 1, 1, 1, 1, ""}) == 1.0);
}

TEST_CASE("worked entry from a 1 mm die") {
    // bandwidth efficiency 4 /mm, / 0.5 pJ/bit, * 1 mm / 0.01 ns
    const TechnologyEntry e{"ucie", 925.98 * 8, 925.98 * 8 / 4, 0.5, 1.0, 0.01, ""};
    CHECK(e.bandwidth_efficiency() == doctest::Approx(4.0));
    CHECK(fom::compute_fom(e) == doctest::Approx(800.0));
}

TEST_CASE("ranking sorts by FoM then name") {
    const std::vector<TechnologyEntry> db{
        {"b", 1, 1, 1, 1, 1, ""},
        {"ten", 10, 1, 1, 1, 1, ""},
        {"a", 1, 1, 1, 1, 1, ""},
    };
    const auto r = fom::rank_technologies(db);
    REQUIRE(r.size() == 3);
    CHECK(r[0].fom == 10.0);
    CHECK(r[0].entry.name == "ten");
    CHECK(r[1].entry.name == "a");
    CHECK(r[2].entry.name == "b");
    CHECK(fom::rank_technologies({}).empty());
}

TEST_CASE("invalid entries") {
    CHECK_THROWS_AS(fom::compute_fom({"z", 1, 0, 1, 1, 1, ""}), ValidationError);
    CHECK_THROWS_AS(fom::compute_fom({"z", 1, 1, -1, 1, 1, ""}), ValidationError);
    CHECK_THROWS_AS(fom::compute_fom({"z", 1, 1, 1, 1, 0, ""}), ValidationError);
}

TEST_CASE("sample database entries are marked as estimates") {
    const auto db = fom::sample_database();
    CHECK(db.size() >= 4);
    for (const auto& e : db) {
        CHECK(e.source_note == "estimate");
        CHECK_NOTHROW(fom::compute_fom(e));
    }
}

TEST_CASE("length/latency co-scaling invariance") {
    CHECK(props::fom_scale_invariance(31).failures == 0);
}

}  // TEST_SUITE
