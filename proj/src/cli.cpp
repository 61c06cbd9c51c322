// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkbench/error.hpp"
#include "linkbench/scenario.hpp"
#include "linkbench/sweep.hpp"
#include "linkbench/version.hpp"

namespace linkbench::cli {

namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct GlobalFlags {
    std::string scenario;
    std::string out;
    std::string format = "csv";
    std::string profile;
    std::vector<std::string> sets;
    // Named shortcuts for --set, keyed by the JSON path they write.
    std::map<std::string, std::string> named;
};

struct NamedOverride {
    const char* flag;
    const char* path;
    const char* help;
};

constexpr NamedOverride kNamed[] = {
    {"--bit-rate", "electrical.bit_rate_gbps", "electrical bit rate, Gb/s"},
    {"--vdd", "electrical.vdd_v", "supply voltage, V"},
    {"--activity", "electrical.activity_factor", "driver activity factor"},
    {"--min-swing-mv", "electrical.min_receiver_swing_mv", "minimum receiver swing, mV"},
    {"--line-width", "electrical.line_width_um", "CPW line width, um"},
    {"--gap", "electrical.gap_to_ground_um", "CPW gap to ground, um"},
    {"--loss-tangent", "electrical.dielectric_loss_tangent", "dielectric loss tangent"},
    {"--waveguide-loss", "optical.waveguide_loss_db_per_cm", "waveguide loss, dB/cm"},
    {"--couplers", "optical.n_couplers", "number of couplers"},
    {"--wpe", "optical.laser_wpe", "laser wall-plug efficiency"},
    {"--tia-energy", "optical.tia_energy_fj", "fixed optical receiver TIA energy, fJ/bit"},
    {"--pitch", "bump.bump_pitch_um", "bump pitch, um"},
    {"--pattern", "bump.pattern", "bump pattern (hex|square)"},
    {"--overhead", "bump.overhead_total", "total bump overhead fraction"},
    {"--die-edge", "bump.die_edge_mm", "die edge, mm"},
    {"--fiber-pitch", "bump.fiber_pitch_um", "fibre array pitch, um"},
    {"--tsov-ratio", "tsov.tsov_ratio", "TSOV conversion ratio"},
    {"--wdm", "tsov.n_wdm", "WDM channels per TSOV"},
    {"--c-total", "laser_budget.c_total_ff", "total receiver input capacitance, fF"},
    {"--path-loss", "laser_budget.path_loss_db", "optical link loss for the laser budget, dB"},
    {"--channels", "laser_budget.n_channels", "WDM channels fed by the laser budget"},
};

Scenario resolve(const GlobalFlags& g, const std::vector<std::string>& extra = {}) {
    LoadOptions opts;
    if (!g.scenario.empty()) opts.scenario_file = g.scenario;
    opts.overrides = g.sets;
    for (const auto& [path, value] : g.named) opts.overrides.push_back(path + "=" + value);
    opts.overrides.insert(opts.overrides.end(), extra.begin(), extra.end());
    if (!g.profile.empty()) opts.pitch_profile_override = g.profile;
    return load_scenario(opts);
}

void check_format(const std::string& f) {
    if (f != "csv" && f != "svg" && f != "both")
        throw ValidationError("--format must be csv, svg or both (got '" + f + "')");
}

fs::path with_extension(const fs::path& p, const char* ext) {
    fs::path out = p;
    out.replace_extension(ext);
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path.string() + "'");
    f << text;
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

/// Writes csv/svg next to `out` (or the CSV to stdout when out is empty).
void emit(const sweep::Table& table, const sweep::SweepSpec& spec, const Scenario& sc, const GlobalFlags& g,
          std::ostream& out) {
    check_format(g.format);
    const std::string csv = sweep::to_csv(table, sweep::provenance_lines(sc, &spec));
    if (g.out.empty()) {
        if (g.format != "csv") throw ValidationError("--format svg/both needs --out");
        out << csv;
        return;
    }
    const fs::path base(g.out);
    if (g.format != "svg") {
        const auto p = base.extension() == ".csv" ? base : with_extension(base, ".csv");
        write_text(p, csv);
        out << "wrote " << p.string() << "\n";
    }
    if (g.format != "csv") {
        if (table.rows.empty()) {
            out << "warning: empty table, no plot written\n";
            return;
        }
        const auto p = with_extension(base, ".svg");
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        sweep::emit_plot(table, sweep::default_style(spec, table), p.string());
        out << "wrote " << p.string() << "\n";
    }
}

sweep::SweepSpec make_spec(sweep::SweepKind kind, std::vector<double> values) {
    sweep::SweepSpec s;
    s.kind = kind;
    s.axis.name = std::string(sweep::axis_name_for(kind));
    s.axis.values = std::move(values);
    s.output = std::string(sweep::to_string(kind));
    return s;
}

struct RangeFlags {
    double start;
    double stop;
    double step;
    std::vector<double> values;

    std::vector<double> expand() const {
        return values.empty() ? sweep::expand_range(start, stop, step) : values;
    }
};

void add_range(CLI::App* sub, RangeFlags& r) {
    sub->add_option("--start", r.start, "axis start")->capture_default_str();
    sub->add_option("--stop", r.stop, "axis stop (inclusive)")->capture_default_str();
    sub->add_option("--step", r.step, "axis step")->capture_default_str();
    sub->add_option("--values", r.values, "explicit axis values (overrides the range)")->delimiter(',');
}

std::vector<fs::path> stock_figures() {
    return {"fig1", "fig3", "fig4", "fig5", "fig6", "fig11"};
}

int reproduce_figure(const std::string& figure, const GlobalFlags& g, std::ostream& out) {
    check_format(g.format);
    fs::path scenario_path = g.scenario.empty() ? fs::path(LINKBENCH_SCENARIO_DIR) / (figure + ".json")
                                                : fs::path(g.scenario);
    if (!fs::exists(scenario_path)) {
        std::string known;
        for (const auto& f : stock_figures()) known += " " + f.string();
        throw ValidationError("no stock scenario for '" + figure + "' (known:" + known + ")");
    }
    GlobalFlags local = g;
    local.scenario = scenario_path.string();
    const Scenario sc = resolve(local);
    if (sc.sweeps.empty()) throw ValidationError("scenario '" + scenario_path.string() + "' defines no sweeps");
    const fs::path dir = g.out.empty() ? fs::path("figures") : fs::path(g.out);
    fs::create_directories(dir);
    for (const auto& spec : sc.sweeps) {
        const auto table = sweep::run_sweep(spec, sc);
        GlobalFlags sub = g;
        sub.out = (dir / (spec.output + ".csv")).string();
        emit(table, spec, sc, sub, out);
    }
    return kExitOk;
}

std::string dsp_label(const Scenario& sc) {
    if (sc.dsp_blocks.empty()) return "none";
    std::string s;
    for (const auto& b : sc.dsp_blocks) s += (s.empty() ? "" : "+") + std::string(elec::to_string(b.kind));
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Die-to-die interconnect design-space calculator", "linkbench"};
    app.set_version_flag("--version", std::string("linkbench ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--scenario", g.scenario, "scenario JSON layered over the built-in defaults");
    app.add_option("--out", g.out, "output file (directory for reproduce-figure)");
    app.add_option("--format", g.format, "csv, svg or both")->capture_default_str();
    app.add_option("--profile", g.profile, "pitch profile JSON (overrides EPIC_LINKBENCH_PROFILE)");
    app.add_option("--set", g.sets, "override any scenario key: section.key=value");
    std::map<std::string, std::string> named_values;
    for (const auto& n : kNamed) app.add_option(n.flag, named_values[n.path], n.help);

    auto* fom_cmd = app.add_subcommand("fom", "rank the technology database by figure of merit");
    std::string db_path;
    fom_cmd->add_option("--db", db_path, "technology database JSON");

    auto* energy_cmd = app.add_subcommand("energy-sweep", "electrical vs optical energy per bit over link length");
    RangeFlags energy_range{1.0, 50.0, 1.0, {}};
    add_range(energy_cmd, energy_range);
    std::vector<std::string> energy_dsp;
    energy_cmd->add_option("--dsp", energy_dsp, "DSP blocks added to the electrical link (FEC,CTLE,DFE,CDR)")
        ->delimiter(',');

    auto* partition_cmd = app.add_subcommand("partition-length", "length where optical starts to beat electrical");
    std::vector<std::string> partition_dsp;
    partition_cmd->add_option("--dsp", partition_dsp, "DSP blocks added to the electrical link")->delimiter(',');

    auto* density_cmd = app.add_subcommand("bw-density", "electrical and optical bandwidth density at one pitch");
    bool use_profile = false;
    density_cmd->add_flag("--use-profile", use_profile,
                          "take pattern, datarate and overhead from the pitch profile instead of the bump section");

    auto* total_cmd = app.add_subcommand("bw-total", "total bandwidth vs die edge");
    RangeFlags total_range{1.0, 30.0, 1.0, {}};
    add_range(total_cmd, total_range);

    auto* wdm_cmd = app.add_subcommand("wdm-sweep", "optical total bandwidth vs WDM channel count");
    RangeFlags wdm_range{4.0, 32.0, 4.0, {}};
    add_range(wdm_cmd, wdm_range);

    auto* match_cmd = app.add_subcommand("pitch-match", "electrical pitches against a fixed 3D optical baseline");
    RangeFlags match_range{0, 0, 1, {1, 2, 4, 9, 16, 25, 32, 45, 55, 70, 110}};
    add_range(match_cmd, match_range);

    auto* rx_cmd = app.add_subcommand("rx-sensitivity", "receiver OMA sensitivity vs total input capacitance");
    RangeFlags rx_range{1.0, 40.0, 1.0, {}};
    add_range(rx_cmd, rx_range);

    auto* laser_cmd = app.add_subcommand("laser-budget", "laser electrical power per channel from the receiver sensitivity");
    std::optional<double> sensitivity_flag;
    laser_cmd->add_option("--sensitivity-dbm", sensitivity_flag, "use this OMA sensitivity instead of the rx model");

    auto* figure_cmd = app.add_subcommand("reproduce-figure", "run a stock figure scenario (fig1 fig3 fig4 fig5 fig6 fig11)");
    std::string figure;
    figure_cmd->add_option("figure", figure, "figure name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const auto extra = app.remaining();
        if (app.get_subcommands().empty() && !extra.empty() && extra.front().rfind("-", 0) != 0)
            err << "error: unknown subcommand '" << extra.front() << "'\n\n" << app.help();
        else
            err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }
    for (const auto& [path, value] : named_values)
        if (!value.empty()) g.named[path] = value;

    const auto dsp_override = [](const std::vector<std::string>& blocks) {
        std::vector<std::string> o;
        if (!blocks.empty()) {
            std::string list = "[";
            for (std::size_t i = 0; i < blocks.size(); ++i) list += (i ? ",\"" : "\"") + blocks[i] + "\"";
            o.push_back("electrical.dsp_blocks=" + list + "]");
        }
        return o;
    };

    try {
        if (fom_cmd->parsed()) {
            std::vector<std::string> extra;
            if (!db_path.empty()) extra.push_back("fom_database=" + fs::absolute(db_path).string());
            const Scenario sc = resolve(g, extra);
            if (sc.technologies.empty()) err << "warning: technology database is empty\n";
            const auto spec = make_spec(sweep::SweepKind::FomTable, {});
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (energy_cmd->parsed()) {
            const Scenario sc = resolve(g, dsp_override(energy_dsp));
            auto spec = make_spec(sweep::SweepKind::EnergyVsLength, energy_range.expand());
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (partition_cmd->parsed()) {
            const Scenario sc = resolve(g, dsp_override(partition_dsp));
            const double sens = optical::link_sensitivity_dbm(sc.rx, sc.optical, sc.electrical.bit_rate_gbps);
            optical::PartitionOptions popts;
            popts.max_length_mm = sc.max_length_mm;
            const auto r = optical::partition_length(sc.electrical, sc.optical, sc.dsp_blocks, sens, popts);
            out << "scenario: " << sc.name << " (sha " << scenario_hash(sc.source) << ")\n";
            out << "dsp blocks: " << dsp_label(sc) << "\n";
            out << "receiver sensitivity: " << fixed(sens, 2) << " dBm OMA at " << sc.optical.c_load_ff << " fF, "
                << sc.electrical.bit_rate_gbps << " Gb/s\n";
            switch (r.dominance) {
                case optical::Dominance::Crossover:
                    out << "partition length: " << fixed(*r.length_mm, 1) << " mm (bisection to "
                        << popts.tolerance_mm << " mm, raw " << fixed(*r.length_mm, 4) << " mm)\n";
                    break;
                case optical::Dominance::OpticalEverywhere:
                    out << "partition length: 0.0 mm (optical is cheaper at every length)\n";
                    break;
                case optical::Dominance::ElectricalEverywhere:
                    out << "partition length: none up to " << sc.max_length_mm
                        << " mm (electrical is cheaper everywhere)\n";
                    break;
            }
            out << "note: calibration-anchored; activity_factor=" << sc.electrical.activity_factor
                << ", min_receiver_swing_mv=" << sc.electrical.min_receiver_swing_mv
                << ", tia_energy_fj=" << sc.tia_energy_fj << " are frozen defaults from tools/calibrate.cpp\n";
            return kExitOk;
        }
        if (density_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto bump = use_profile ? sc.pitch_profile.resolve(sc.bump.bump_pitch_um, sc.bump.die_edge_mm)
                                          : sc.bump;
            const auto d = bw::bump_density(bump);
            const auto opt = bw::optical_bw_density(bump, sc.tsov);
            out << "pitch " << bump.bump_pitch_um << " um, " << bw::to_string(bump.pattern) << ", "
                << bump.channel_datarate_gbps << " Gb/s, overhead " << bump.overhead_total << "\n";
            out << "bump density: " << fixed(d.per_mm2, 2) << " bumps/mm^2 (" << d.count << " whole bumps)\n";
            out << "theoretical electrical: " << fixed(bw::theoretical_bw_density(bump).gbyte_s_mm2(), 2)
                << " GB/s/mm^2\n";
            out << "realizable electrical: " << fixed(bw::realizable_bw_density(bump), 2) << " GB/s/mm^2\n";
            out << "optical: " << opt.tsov_per_mm2 << " TSOV/mm^2 x " << sc.tsov.n_wdm << " WDM x "
                << sc.tsov.channel_datarate_gbps << " Gb/s = " << fixed(opt.gbyte_s_mm2, 2) << " GB/s/mm^2\n";
            if (opt.no_tsov) out << "warning: no TSOV fits at ratio " << sc.tsov.tsov_ratio << "\n";
            return kExitOk;
        }
        if (total_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto spec = make_spec(sweep::SweepKind::TotalBwVsEdge, total_range.expand());
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (wdm_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto spec = make_spec(sweep::SweepKind::WdmSweep, wdm_range.expand());
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (match_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto spec = make_spec(sweep::SweepKind::PitchMatch, match_range.expand());
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (rx_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto spec = make_spec(sweep::SweepKind::OmaVsCap, rx_range.expand());
            emit(sweep::run_sweep(spec, sc), spec, sc, g, out);
            return kExitOk;
        }
        if (laser_cmd->parsed()) {
            const Scenario sc = resolve(g);
            const auto& lb = sc.laser_budget;
            const double sens = sensitivity_flag ? *sensitivity_flag : rx::oma_sensitivity(lb.c_total_ff, sc.rx);
            const double uw = optical::required_laser_electrical_power(sens, lb.path_loss_db, sc.optical);
            out << "receiver OMA sensitivity: " << fixed(sens, 2) << " dBm"
                << (sensitivity_flag ? " (given)" : " (rx model at " + fixed(lb.c_total_ff, 2) + " fF)") << "\n";
            out << "link loss " << lb.path_loss_db << " dB, margin " << sc.optical.link_margin_db << " dB, ER "
                << sc.optical.extinction_ratio_db << " dB, WPE " << sc.optical.laser_wpe << "\n";
            out << "laser electrical power: " << fixed(uw, 2) << " uW per channel, "
                << fixed(uw * lb.n_channels * 1e-3, 3) << " mW for " << lb.n_channels << " channels\n";
            return kExitOk;
        }
        if (figure_cmd->parsed()) return reproduce_figure(figure, g, out);
    } catch (const ModelError& e) {
        err << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    err << app.help();
    return kExitValidation;
}

}  // namespace linkbench::cli
