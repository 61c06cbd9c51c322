// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linkbench/bw_density.hpp"
#include "linkbench/elec_energy.hpp"
#include "linkbench/fom.hpp"
#include "linkbench/opt_link.hpp"
#include "linkbench/rx_model.hpp"
#include "linkbench/sweep_spec.hpp"

namespace linkbench {

struct LaserBudgetSpec {
    double c_total_ff = 3.2;
    double path_loss_db = 13.98;
    int n_channels = 32;
};

/// Fully resolved analysis inputs.
///
/// Scenarios are layered as JSON: built-in defaults, then a scenario file,
/// then command-line overrides. Every key is checked against a fixed
/// schema and unit-bearing keys carry their unit as a suffix
/// (`_mm`, `_db_per_cm`, `_fj`, ...).
struct Scenario {
    std::string name = "default";
    std::string version = "1";

    elec::ElectricalLinkParams electrical{};
    std::vector<elec::DspBlockCost> dsp_blocks;  // opt-in, empty by default

    optical::OpticalLinkParams optical{};
    double tia_energy_fj = 29.793;
    double max_length_mm = 100.0;

    bw::BumpArraySpec bump{};
    double fiber_pitch_um = 127.0;
    bw::TsovWdmSpec tsov{};
    bw::PitchProfileTable pitch_profile = bw::PitchProfileTable::builtin();

    rx::RxNoiseParams rx{};
    LaserBudgetSpec laser_budget{};

    std::vector<fom::TechnologyEntry> technologies;
    std::vector<sweep::SweepSpec> sweeps;

    /// Canonical merged JSON the scenario was built from.
    nlohmann::json source;
};

/// The default scenario as JSON (also shipped as data/default.json).
nlohmann::json default_scenario_json();

/// Deep-merge `overlay` into `base`, rejecting keys the schema does not
/// know. `path` prefixes diagnostics (e.g. "$").
void merge_strict(nlohmann::json& base, const nlohmann::json& overlay, const std::string& path = "$");

/// Apply `section.key=value`. The value is parsed as JSON when possible,
/// otherwise taken as a string.
void apply_override(nlohmann::json& doc, std::string_view assignment);

/// Convert a merged document into a Scenario, validating all invariants.
/// Relative file references resolve against `base_dir`.
Scenario scenario_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

struct LoadOptions {
    std::optional<std::filesystem::path> scenario_file;
    std::vector<std::string> overrides;
    std::optional<std::filesystem::path> pitch_profile_override;
};

/// defaults < scenario file < overrides. EPIC_LINKBENCH_PROFILE, when set,
/// replaces the scenario's pitch profile unless an explicit override is given.
Scenario load_scenario(const LoadOptions& opts = {});

nlohmann::json read_json_file(const std::filesystem::path& path);

bw::PitchProfileTable pitch_profile_from_json(const nlohmann::json& doc, const std::string& name = "custom");
nlohmann::json pitch_profile_to_json(const bw::PitchProfileTable& table);
bw::PitchProfileTable load_pitch_profile(const std::filesystem::path& path);

std::vector<fom::TechnologyEntry> technologies_from_json(const nlohmann::json& doc);
std::vector<fom::TechnologyEntry> load_technology_db(const std::filesystem::path& path);

/// 16 hex digits of FNV-1a over the canonical JSON dump.
std::string scenario_hash(const nlohmann::json& doc);

}  // namespace linkbench
