// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "linkbench/error.hpp"

namespace linkbench {

using nlohmann::json;
namespace fs = std::filesystem;

json default_scenario_json() {
    // Calibrated constants (activity_factor, min_receiver_swing_mv,
    // tia_energy_fj, tia_noise_coefficient, tia_feedback_resistance_ohm)
    // come from tools/calibrate.cpp and are frozen here.
    return json::parse(R"({
  "metadata": {"name": "default", "version": "1", "note": ""},
  "electrical": {
    "bit_rate_gbps": 8.0,
    "vdd_v": 1.0,
    "line_width_um": 2.0,
    "gap_to_ground_um": 2.0,
    "metal_thickness_um": 2.0,
    "metal_conductivity_s_per_m": 5.8e7,
    "dielectric_eps_r": 3.9,
    "dielectric_loss_tangent": 0.004,
    "receiver_energy_fj": 60.0,
    "activity_factor": 0.5,
    "min_receiver_swing_mv": 35.6337,
    "dsp_blocks": []
  },
  "optical": {
    "waveguide_loss_db_per_cm": 1.0,
    "coupler_loss_db": 3.0,
    "n_couplers": 2,
    "modulator_loss_db": 1.0,
    "detector_responsivity_a_per_w": 1.0,
    "laser_wpe": 0.30,
    "c_mod_ff": 50.0,
    "c_load_ff": 7.0,
    "mod_driver_energy_fj": 50.0,
    "tia_energy_fj": 29.793,
    "link_margin_db": 2.0,
    "extinction_ratio_db": 7.7,
    "max_length_mm": 100.0
  },
  "bump": {
    "bump_pitch_um": 55.0,
    "pattern": "hex",
    "die_edge_mm": 1.0,
    "channel_datarate_gbps": 32.0,
    "overhead_total": 0.39,
    "fiber_pitch_um": 127.0
  },
  "tsov": {
    "tsov_ratio": 0.02,
    "n_wdm": 32,
    "channel_datarate_gbps": 32.0
  },
  "rx": {
    "pd_capacitance_ff": 0.08,
    "pd_dark_current_na": 0.72,
    "responsivity_a_per_w": 0.93,
    "rin_db_per_hz": -140.0,
    "bit_rate_gbps": 32.0,
    "target_ber": 1e-12,
    "bump_capacitance_ff": 7.2,
    "tia_input_capacitance_ff": 20.72,
    "noise_bandwidth_factor": 0.7,
    "tia_noise_coefficient": 1.38272e-15,
    "tia_feedback_resistance_ohm": 5000.0,
    "extinction_ratio_db": 7.7,
    "temperature_k": 300.0
  },
  "laser_budget": {
    "c_total_ff": 3.2,
    "path_loss_db": 13.98,
    "n_channels": 32
  },
  "pitch_profile": "builtin",
  "fom_database": "builtin",
  "sweeps": []
})");
}

namespace {

constexpr std::array kUnitSuffixes = {
    "_s_per_m", "_db_per_cm", "_db_per_hz", "_a_per_w", "_gbps", "_dbm", "_ohm", "_db", "_mm",
    "_um",      "_fj",        "_mv",        "_ff",      "_na",   "_v",   "_k",
};

std::string unit_stem(const std::string& key) {
    for (std::string_view suffix : kUnitSuffixes) {
        if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
            return key.substr(0, key.size() - suffix.size());
    }
    return key;
}

bool same_kind(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) return true;
    return a.type() == b.type();
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

}  // namespace

void merge_strict(json& base, const json& overlay, const std::string& path) {
    if (!overlay.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : overlay.items()) {
        const std::string here = path + "." + key;
        if (!base.contains(key)) {
            const std::string stem = unit_stem(key);
            for (const auto& [known, unused] : base.items()) {
                (void)unused;
                if (unit_stem(known) == stem)
                    fail(here, "unit mismatch, expected key '" + known + "' (units are encoded in the key suffix)");
            }
            fail(here, "unknown key");
        }
        json& target = base[key];
        if (!same_kind(target, value)) {
            // A handful of keys accept either a string reference or inline data.
            const bool reference_or_inline = (key == "pitch_profile" || key == "fom_database") &&
                                             (value.is_string() || value.is_object() || value.is_array());
            if (!reference_or_inline)
                fail(here, std::string("expected ") + target.type_name() + ", got " + value.type_name());
            target = value;
            continue;
        }
        if (target.is_object() && key != "pitch_profile" && key != "fom_database")
            merge_strict(target, value, here);
        else
            target = value;
    }
}

void apply_override(json& doc, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ValidationError("override '" + std::string(assignment) + "' must look like section.key=value");
    const std::string dotted(assignment.substr(0, eq));
    const std::string raw(assignment.substr(eq + 1));

    json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) value = raw;

    // Rebuild a nested overlay and merge it so the same strict checks apply.
    json overlay = value;
    std::vector<std::string> parts;
    std::stringstream ss(dotted);
    for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) overlay = json{{*it, overlay}};
    merge_strict(doc, overlay, "$(override)");
}

namespace {

double number(const json& section, const char* key, const std::string& path) {
    const auto& v = section.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    const double d = v.get<double>();
    if (std::isnan(d)) fail(path + "." + key, "NaN is not allowed");
    return d;
}

int integer(const json& section, const char* key, const std::string& path) {
    const double d = number(section, key, path);
    if (std::floor(d) != d || std::abs(d) > 1e9) fail(path + "." + key, "expected an integer");
    return static_cast<int>(d);
}

std::string string(const json& section, const char* key, const std::string& path) {
    const auto& v = section.at(key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

sweep::SweepSpec sweep_from_json(const json& j, const std::string& path) {
    static const json kTemplate = {{"kind", ""},   {"axis", json::object()}, {"output", ""},
                                   {"series", json::array()}, {"note", ""}, {"log_x", false},
                                   {"log_y", false}, {"reverse_x", false}};
    json merged = kTemplate;
    if (!j.is_object()) fail(path, "expected an object");
    json rest = j;
    rest.erase("axis");  // axis keys are checked below
    merge_strict(merged, rest, path);
    if (j.contains("axis")) {
        if (!j.at("axis").is_object()) fail(path + ".axis", "expected an object");
        merged["axis"] = j.at("axis");
    }

    sweep::SweepSpec s;
    s.kind = with_path(path + ".kind", [&] { return sweep::parse_sweep_kind(string(merged, "kind", path)); });
    s.output = string(merged, "output", path);
    if (s.output.empty()) s.output = std::string(sweep::to_string(s.kind));
    s.note = string(merged, "note", path);
    s.log_x = merged.at("log_x").get<bool>();
    s.log_y = merged.at("log_y").get<bool>();
    s.reverse_x = merged.at("reverse_x").get<bool>();
    for (const auto& v : merged.at("series")) {
        if (!v.is_number()) fail(path + ".series", "expected numbers");
        s.series.push_back(v.get<double>());
    }

    const json& axis = merged.at("axis");
    const std::string axis_path = path + ".axis";
    s.axis.name = std::string(sweep::axis_name_for(s.kind));
    for (const auto& [key, value] : axis.items()) {
        if (key != "name" && key != "start" && key != "stop" && key != "step" && key != "values")
            fail(axis_path + "." + key, "unknown key");
        (void)value;
    }
    if (axis.contains("name")) s.axis.name = string(axis, "name", axis_path);
    if (axis.contains("values")) {
        if (axis.contains("start") || axis.contains("stop") || axis.contains("step"))
            fail(axis_path, "give either values or start/stop/step, not both");
        if (!axis.at("values").is_array()) fail(axis_path + ".values", "expected an array");
        for (const auto& v : axis.at("values")) {
            if (!v.is_number()) fail(axis_path + ".values", "expected numbers");
            s.axis.values.push_back(v.get<double>());
        }
    } else if (axis.contains("start") || axis.contains("stop") || axis.contains("step")) {
        if (!(axis.contains("start") && axis.contains("stop") && axis.contains("step")))
            fail(axis_path, "range form needs start, stop and step");
        s.axis.values = with_path(axis_path, [&] {
            return sweep::expand_range(number(axis, "start", axis_path), number(axis, "stop", axis_path),
                                       number(axis, "step", axis_path));
        });
    }
    with_path(path, [&] {
        sweep::validate(s);
        return 0;
    });
    return s;
}

fs::path resolve_relative(const std::string& ref, const fs::path& base_dir) {
    fs::path p(ref);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return p;
}

}  // namespace

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

bw::PitchProfileTable pitch_profile_from_json(const json& doc, const std::string& name) {
    static const json kRow = {{"pitch_min_um", 0.0},      {"pitch_max_um", 0.0}, {"max_datarate_gbps", 0.0},
                              {"overhead_total", 0.0},    {"pattern", ""},       {"note", ""}};
    json top = {{"name", name}, {"note", ""}, {"rows", json::array()}};
    merge_strict(top, doc, "$pitch_profile");
    std::vector<bw::PitchProfileRow> rows;
    std::size_t i = 0;
    for (const auto& r : top.at("rows")) {
        const std::string path = "$pitch_profile.rows[" + std::to_string(i++) + "]";
        json row = kRow;
        merge_strict(row, r, path);
        for (const char* required : {"pitch_min_um", "pitch_max_um", "max_datarate_gbps", "overhead_total", "pattern"})
            if (!r.contains(required)) fail(path, std::string("missing key '") + required + "'");
        bw::PitchProfileRow out;
        out.pitch_min_um = number(row, "pitch_min_um", path);
        out.pitch_max_um = number(row, "pitch_max_um", path);
        out.max_datarate_gbps = number(row, "max_datarate_gbps", path);
        out.overhead_total = number(row, "overhead_total", path);
        out.pattern = with_path(path, [&] { return bw::parse_bump_pattern(string(row, "pattern", path)); });
        out.note = string(row, "note", path);
        rows.push_back(std::move(out));
    }
    return with_path("$pitch_profile", [&] { return bw::PitchProfileTable(std::move(rows), top.at("name")); });
}

json pitch_profile_to_json(const bw::PitchProfileTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows())
        rows.push_back({{"pitch_min_um", r.pitch_min_um},
                        {"pitch_max_um", r.pitch_max_um},
                        {"max_datarate_gbps", r.max_datarate_gbps},
                        {"overhead_total", r.overhead_total},
                        {"pattern", std::string(bw::to_string(r.pattern))},
                        {"note", r.note}});
    return {{"name", table.name()}, {"note", ""}, {"rows", rows}};
}

bw::PitchProfileTable load_pitch_profile(const fs::path& path) {
    return pitch_profile_from_json(read_json_file(path), path.stem().string());
}

std::vector<fom::TechnologyEntry> technologies_from_json(const json& doc) {
    const json* list = &doc;
    if (doc.is_object()) {
        for (const auto& [key, unused] : doc.items()) {
            (void)unused;
            if (key != "technologies" && key != "note") fail("$fom_database." + key, "unknown key");
        }
        if (!doc.contains("technologies")) fail("$fom_database", "missing key 'technologies'");
        list = &doc.at("technologies");
    }
    if (!list->is_array()) fail("$fom_database.technologies", "expected an array");

    std::vector<fom::TechnologyEntry> out;
    std::size_t i = 0;
    for (const auto& e : *list) {
        const std::string path = "$fom_database.technologies[" + std::to_string(i++) + "]";
        if (!e.is_object()) fail(path, "expected an object");
        fom::TechnologyEntry t;
        bool have_areal = false;
        bool have_shore = false;
        for (const auto& [key, value] : e.items()) {
            (void)value;
            if (key == "name") t.name = string(e, "name", path);
            else if (key == "source_note") t.source_note = string(e, "source_note", path);
            else if (key == "areal_bw_density_gbps_per_mm2") t.areal_bw_density_gbps_mm2 = number(e, "areal_bw_density_gbps_per_mm2", path), have_areal = true;
            else if (key == "areal_bw_density_gbyteps_per_mm2") t.areal_bw_density_gbps_mm2 = 8.0 * number(e, "areal_bw_density_gbyteps_per_mm2", path), have_areal = true;
            else if (key == "shoreline_bw_density_gbps_per_mm") t.shoreline_bw_density_gbps_mm = number(e, "shoreline_bw_density_gbps_per_mm", path), have_shore = true;
            else if (key == "shoreline_bw_density_gbyteps_per_mm") t.shoreline_bw_density_gbps_mm = 8.0 * number(e, "shoreline_bw_density_gbyteps_per_mm", path), have_shore = true;
            else if (key == "energy_efficiency_pj_per_bit") t.energy_efficiency_pj_per_bit = number(e, "energy_efficiency_pj_per_bit", path);
            else if (key == "link_length_mm") t.link_length_mm = number(e, "link_length_mm", path);
            else if (key == "link_latency_ns") t.link_latency_ns = number(e, "link_latency_ns", path);
            else fail(path + "." + key, "unknown key");
        }
        if (t.name.empty()) fail(path, "missing key 'name'");
        if (!have_areal || !have_shore) fail(path, "needs areal and shoreline bandwidth densities");
        with_path(path, [&] {
            fom::validate(t);
            return 0;
        });
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<fom::TechnologyEntry> load_technology_db(const fs::path& path) {
    return technologies_from_json(read_json_file(path));
}

Scenario scenario_from_json(const json& doc, const fs::path& base_dir) {
    // Make sure every key is present and nothing unknown sneaks in.
    json full = default_scenario_json();
    merge_strict(full, doc);

    Scenario s;
    s.source = full;
    const auto& meta = full.at("metadata");
    s.name = string(meta, "name", "$.metadata");
    s.version = string(meta, "version", "$.metadata");

    {
        const std::string p = "$.electrical";
        const auto& e = full.at("electrical");
        auto& out = s.electrical;
        out.bit_rate_gbps = number(e, "bit_rate_gbps", p);
        out.vdd_v = number(e, "vdd_v", p);
        out.geometry.line_width_um = number(e, "line_width_um", p);
        out.geometry.gap_to_ground_um = number(e, "gap_to_ground_um", p);
        out.geometry.metal_thickness_um = number(e, "metal_thickness_um", p);
        out.geometry.metal_conductivity_s_per_m = number(e, "metal_conductivity_s_per_m", p);
        out.geometry.dielectric_eps_r = number(e, "dielectric_eps_r", p);
        out.geometry.dielectric_loss_tangent = number(e, "dielectric_loss_tangent", p);
        out.receiver_energy_fj = number(e, "receiver_energy_fj", p);
        out.activity_factor = number(e, "activity_factor", p);
        out.min_receiver_swing_mv = number(e, "min_receiver_swing_mv", p);
        for (const auto& b : e.at("dsp_blocks")) {
            if (!b.is_string()) fail(p + ".dsp_blocks", "expected block names");
            s.dsp_blocks.push_back(with_path(p + ".dsp_blocks", [&] {
                return elec::dsp_block(elec::parse_dsp_block_kind(b.get<std::string>()));
            }));
        }
        with_path(p, [&] {
            elec::validate(out);
            return 0;
        });
    }
    {
        const std::string p = "$.optical";
        const auto& o = full.at("optical");
        auto& out = s.optical;
        out.waveguide_loss_db_per_cm = number(o, "waveguide_loss_db_per_cm", p);
        out.coupler_loss_db = number(o, "coupler_loss_db", p);
        out.n_couplers = integer(o, "n_couplers", p);
        out.modulator_loss_db = number(o, "modulator_loss_db", p);
        out.detector_responsivity_a_per_w = number(o, "detector_responsivity_a_per_w", p);
        out.laser_wpe = number(o, "laser_wpe", p);
        out.c_mod_ff = number(o, "c_mod_ff", p);
        out.c_load_ff = number(o, "c_load_ff", p);
        out.mod_driver_energy_fj = number(o, "mod_driver_energy_fj", p);
        s.tia_energy_fj = number(o, "tia_energy_fj", p);
        if (s.tia_energy_fj < 0.0) fail(p + ".tia_energy_fj", "must be >= 0");
        out.link_margin_db = number(o, "link_margin_db", p);
        out.extinction_ratio_db = number(o, "extinction_ratio_db", p);
        out.rx_energy_fj = optical::receiver_energy(out.c_load_ff, s.electrical.vdd_v, s.electrical.activity_factor,
                                                    s.tia_energy_fj);
        s.max_length_mm = number(o, "max_length_mm", p);
        if (!(s.max_length_mm > 0.0)) fail(p + ".max_length_mm", "must be > 0");
        with_path(p, [&] {
            optical::validate(out);
            return 0;
        });
    }
    {
        const std::string p = "$.bump";
        const auto& b = full.at("bump");
        auto& out = s.bump;
        out.bump_pitch_um = number(b, "bump_pitch_um", p);
        out.pattern = with_path(p, [&] { return bw::parse_bump_pattern(string(b, "pattern", p)); });
        out.die_edge_mm = number(b, "die_edge_mm", p);
        out.channel_datarate_gbps = number(b, "channel_datarate_gbps", p);
        out.overhead_total = number(b, "overhead_total", p);
        s.fiber_pitch_um = number(b, "fiber_pitch_um", p);
        if (!(s.fiber_pitch_um > 0.0)) fail(p + ".fiber_pitch_um", "must be > 0");
        with_path(p, [&] {
            bw::validate(out);
            return 0;
        });
    }
    {
        const std::string p = "$.tsov";
        const auto& t = full.at("tsov");
        s.tsov.tsov_ratio = number(t, "tsov_ratio", p);
        s.tsov.n_wdm = integer(t, "n_wdm", p);
        s.tsov.channel_datarate_gbps = number(t, "channel_datarate_gbps", p);
        with_path(p, [&] {
            bw::validate(s.tsov);
            return 0;
        });
    }
    {
        const std::string p = "$.rx";
        const auto& r = full.at("rx");
        auto& out = s.rx;
        out.pd_capacitance_ff = number(r, "pd_capacitance_ff", p);
        out.pd_dark_current_na = number(r, "pd_dark_current_na", p);
        out.responsivity_a_per_w = number(r, "responsivity_a_per_w", p);
        out.rin_db_per_hz = number(r, "rin_db_per_hz", p);
        out.bit_rate_gbps = number(r, "bit_rate_gbps", p);
        out.target_ber = number(r, "target_ber", p);
        out.bump_capacitance_ff = number(r, "bump_capacitance_ff", p);
        out.tia_input_capacitance_ff = number(r, "tia_input_capacitance_ff", p);
        out.noise_bandwidth_factor = number(r, "noise_bandwidth_factor", p);
        out.tia_noise_coefficient = number(r, "tia_noise_coefficient", p);
        out.tia_feedback_resistance_ohm = number(r, "tia_feedback_resistance_ohm", p);
        out.extinction_ratio_db = number(r, "extinction_ratio_db", p);
        out.temperature_k = number(r, "temperature_k", p);
        with_path(p, [&] {
            rx::validate(out);
            return 0;
        });
    }
    {
        const std::string p = "$.laser_budget";
        const auto& l = full.at("laser_budget");
        s.laser_budget.c_total_ff = number(l, "c_total_ff", p);
        s.laser_budget.path_loss_db = number(l, "path_loss_db", p);
        s.laser_budget.n_channels = integer(l, "n_channels", p);
        if (s.laser_budget.n_channels < 1) fail(p + ".n_channels", "must be >= 1");
    }

    const json& profile = full.at("pitch_profile");
    if (profile.is_object()) {
        s.pitch_profile = pitch_profile_from_json(profile, "inline");
    } else if (profile.get<std::string>() != "builtin") {
        s.pitch_profile = load_pitch_profile(resolve_relative(profile.get<std::string>(), base_dir));
    }

    const json& db = full.at("fom_database");
    if (db.is_string() && db.get<std::string>() == "builtin")
        s.technologies = fom::sample_database();
    else if (db.is_string())
        s.technologies = load_technology_db(resolve_relative(db.get<std::string>(), base_dir));
    else
        s.technologies = technologies_from_json(db);

    std::size_t i = 0;
    for (const auto& sw : full.at("sweeps")) s.sweeps.push_back(sweep_from_json(sw, "$.sweeps[" + std::to_string(i++) + "]"));
    return s;
}

Scenario load_scenario(const LoadOptions& opts) {
    json doc = default_scenario_json();
    fs::path base_dir;
    if (opts.scenario_file) {
        if (!fs::exists(*opts.scenario_file))
            throw ValidationError("scenario file '" + opts.scenario_file->string() + "' does not exist");
        merge_strict(doc, read_json_file(*opts.scenario_file));
        base_dir = opts.scenario_file->parent_path();
    }
    for (const auto& o : opts.overrides) apply_override(doc, o);

    if (opts.pitch_profile_override) {
        doc["pitch_profile"] = fs::absolute(*opts.pitch_profile_override).string();
    } else if (const char* env = std::getenv("EPIC_LINKBENCH_PROFILE"); env != nullptr && *env != '\0') {
        doc["pitch_profile"] = fs::absolute(env).string();
    }
    return scenario_from_json(doc, base_dir);
}

std::string scenario_hash(const json& doc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace linkbench
