// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include "linkbench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "linkbench/error.hpp"
#include "linkbench/version.hpp"

namespace linkbench::sweep {

namespace {

struct KindInfo {
    SweepKind kind;
    std::string_view name;
    std::string_view axis;
};

constexpr KindInfo kKinds[] = {
    {SweepKind::EnergyVsLength, "energy_vs_length", "length_mm"},
    {SweepKind::BwDensityVsPitch, "bw_density_vs_pitch", "pitch_um"},
    {SweepKind::TotalBwVsEdge, "total_bw_vs_edge", "die_edge_mm"},
    {SweepKind::WdmSweep, "wdm_sweep", "n_wdm"},
    {SweepKind::PitchMatch, "pitch_match", "pitch_um"},
    {SweepKind::OmaVsCap, "oma_vs_cap", "c_total_ff"},
    {SweepKind::FomTable, "fom_table", ""},
};

const KindInfo& info(SweepKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw ValidationError("unknown sweep kind");
}

}  // namespace

std::string_view to_string(SweepKind kind) { return info(kind).name; }

SweepKind parse_sweep_kind(std::string_view name) {
    for (const auto& k : kKinds)
        if (k.name == name) return k.kind;
    std::string known;
    for (const auto& k : kKinds) known += (known.empty() ? "" : ", ") + std::string(k.name);
    throw ValidationError("unknown sweep kind '" + std::string(name) + "' (expected one of " + known + ")");
}

std::string_view axis_name_for(SweepKind kind) { return info(kind).axis; }

std::vector<double> expand_range(double start, double stop, double step) {
    detail::require(step > 0.0, "axis step must be > 0");
    detail::require(stop >= start, "axis stop must be >= start");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    detail::require(n <= 1'000'000, "axis has too many points");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

void validate(const SweepSpec& spec) {
    if (spec.kind == SweepKind::FomTable) return;
    detail::require(!spec.axis.values.empty(), std::string("sweep '") + std::string(to_string(spec.kind)) + "': axis is empty");
    detail::require(spec.axis.name == axis_name_for(spec.kind),
                    "sweep '" + std::string(to_string(spec.kind)) + "': axis must be '" +
                        std::string(axis_name_for(spec.kind)) + "', got '" + spec.axis.name + "'");
    for (double v : spec.axis.values) detail::require(std::isfinite(v), "sweep axis values must be finite");
}

std::size_t Table::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw ValidationError("table has no column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::numeric_column(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (const auto* d = std::get_if<double>(&row[c]))
            out.push_back(*d);
        else if (const auto* l = std::get_if<long>(&row[c]))
            out.push_back(static_cast<double>(*l));
        else
            out.push_back(std::nan(""));
    }
    return out;
}

namespace {

using Row = std::vector<Cell>;
using Evaluator = std::function<Row(double)>;

std::string what_of(const std::exception& e) { return e.what(); }

struct Plan {
    std::string title;
    std::vector<std::string> columns;
    Evaluator eval;
};

Plan plan_energy(const Scenario& sc) {
    const double sensitivity = optical::link_sensitivity_dbm(sc.rx, sc.optical, sc.electrical.bit_rate_gbps);
    Plan p;
    p.title = "Energy per bit vs link length";
    p.columns = {"length_mm",           "channel_loss_db",       "launch_swing_v", "electrical_fj_per_bit",
                 "electrical_dsp_fj_per_bit", "optical_path_loss_db", "laser_power_uw", "optical_fj_per_bit",
                 "error"};
    p.eval = [&sc, sensitivity](double length) -> Row {
        Row row(9);
        row[0] = length;
        std::string error;
        try {
            const auto op = elec::driver_operating_point(sc.electrical, length);
            row[1] = op.channel_loss_db;
            row[2] = op.launch_swing_v;
            if (op.feasible) {
                const double e = op.driver_energy_fj + sc.electrical.receiver_energy_fj;
                row[3] = e;
                row[4] = e + elec::dsp_energy(sc.dsp_blocks, op.channel_loss_db);
            } else {
                error = "link infeasible: launch swing exceeds vdd";
            }
        } catch (const Error& e) {
            error = what_of(e);
        }
        try {
            const double loss = optical::optical_path_loss(sc.optical, length);
            row[5] = loss;
            row[6] = optical::required_laser_electrical_power(sensitivity, loss, sc.optical);
            row[7] = optical::optical_energy_per_bit(sc.optical, length, sc.electrical.bit_rate_gbps, sensitivity);
        } catch (const Error& e) {
            error += (error.empty() ? "" : "; ") + what_of(e);
        }
        row[8] = error;
        return row;
    };
    return p;
}

std::string wdm_column(double n) {
    std::ostringstream os;
    os << "optical_wdm" << static_cast<long>(n) << "_gbyte_s_mm2";
    return os.str();
}

Plan plan_density(const SweepSpec& spec, const Scenario& sc) {
    std::vector<double> wdm = spec.series;
    if (wdm.empty()) wdm.push_back(sc.tsov.n_wdm);
    for (double n : wdm) detail::require(n >= 1 && std::floor(n) == n, "bw_density_vs_pitch: series must be WDM counts >= 1");
    Plan p;
    p.title = "Bandwidth density vs bump pitch";
    p.columns = {"pitch_um",          "pattern",       "channel_datarate_gbps",   "overhead_total",
                 "bumps_per_mm2",     "bump_count",    "theoretical_gbyte_s_mm2", "realizable_gbyte_s_mm2",
                 "tsov_per_mm2"};
    for (double n : wdm) p.columns.push_back(wdm_column(n));
    p.columns.push_back("error");
    const std::size_t width = p.columns.size();
    p.eval = [&sc, wdm, width](double pitch) -> Row {
        Row row(width);
        row[0] = pitch;
        try {
            const auto spec = sc.pitch_profile.resolve(pitch, sc.bump.die_edge_mm);
            const auto density = bw::bump_density(spec);
            row[1] = std::string(bw::to_string(spec.pattern));
            row[2] = spec.channel_datarate_gbps;
            row[3] = spec.overhead_total;
            row[4] = density.per_mm2;
            row[5] = density.count;
            row[6] = bw::theoretical_bw_density(spec).gbyte_s_mm2();
            row[7] = bw::realizable_bw_density(spec);
            for (std::size_t i = 0; i < wdm.size(); ++i) {
                bw::TsovWdmSpec t = sc.tsov;
                t.n_wdm = static_cast<int>(wdm[i]);
                const auto opt = bw::optical_bw_density(spec, t);
                row[8] = opt.tsov_per_mm2;
                row[9 + i] = opt.gbyte_s_mm2;
            }
        } catch (const Error& e) {
            row[width - 1] = what_of(e);
        }
        return row;
    };
    return p;
}

Plan plan_total(const Scenario& sc) {
    Plan p;
    p.title = "Total bandwidth vs die edge";
    p.columns = {"die_edge_mm", "electrical_3d_gbyte_s", "optical_3d_gbyte_s", "optical_shoreline_gbyte_s", "fibers",
                 "error"};
    p.eval = [&sc](double edge) -> Row {
        Row row(6);
        row[0] = edge;
        try {
            row[1] = bw::total_bandwidth_3d(sc.bump, sc.tsov, bw::BandwidthModel::Electrical, edge);
            row[2] = bw::total_bandwidth_3d(sc.bump, sc.tsov, bw::BandwidthModel::Optical, edge);
            const auto shore = bw::total_bandwidth_shoreline(edge, sc.fiber_pitch_um, sc.tsov.n_wdm,
                                                             sc.tsov.channel_datarate_gbps);
            row[3] = shore.gbyte_s;
            row[4] = shore.fibers;
            if (shore.no_fibers) row[5] = std::string("warning: die perimeter shorter than one fibre pitch");
        } catch (const Error& e) {
            row[5] = what_of(e);
        }
        return row;
    };
    return p;
}

Plan plan_wdm(const Scenario& sc) {
    Plan p;
    p.title = "Total bandwidth vs WDM channel count";
    p.columns = {"n_wdm", "tsov_per_mm2", "optical_gbyte_s_mm2", "optical_total_gbyte_s", "electrical_total_gbyte_s",
                 "error"};
    p.eval = [&sc](double n) -> Row {
        Row row(6);
        row[0] = n;
        try {
            detail::require(n >= 1 && std::floor(n) == n && n < 1e6, "n_wdm must be a whole number >= 1");
            bw::TsovWdmSpec t = sc.tsov;
            t.n_wdm = static_cast<int>(n);
            const auto opt = bw::optical_bw_density(sc.bump, t);
            row[1] = opt.tsov_per_mm2;
            row[2] = opt.gbyte_s_mm2;
            row[3] = bw::total_bandwidth_3d(opt.gbyte_s_mm2, sc.bump.die_edge_mm);
            row[4] = bw::total_bandwidth_3d(sc.bump, t, bw::BandwidthModel::Electrical, sc.bump.die_edge_mm);
            if (opt.no_tsov) row[5] = std::string("warning: no TSOV fits at this ratio");
        } catch (const Error& e) {
            row[5] = what_of(e);
        }
        return row;
    };
    return p;
}

Plan plan_pitch_match(const Scenario& sc) {
    Plan p;
    p.title = "Electrical pitch needed to match the 3D optical baseline";
    p.columns = {"pitch_um", "electrical_total_gbyte_s", "optical_total_gbyte_s", "beats_optical", "within_1pct",
                 "error"};
    p.eval = [&sc](double pitch) -> Row {
        const double pitches[] = {pitch};
        const auto r = bw::matching_pitch_table(sc.bump, sc.tsov, pitches, sc.pitch_profile).front();
        Row row(6);
        row[0] = pitch;
        row[2] = r.optical_total_gbyte_s;
        if (r.error.empty()) {
            row[1] = r.electrical_total_gbyte_s;
            row[3] = r.beats_optical;
            row[4] = r.within_one_percent;
        } else {
            row[5] = r.error;
        }
        return row;
    };
    return p;
}

Plan plan_oma(const Scenario& sc) {
    Plan p;
    p.title = "Receiver OMA sensitivity vs total TIA input capacitance";
    p.columns = {"c_total_ff", "oma_sensitivity_dbm", "oma_uw", "error"};
    p.eval = [&sc](double c) -> Row {
        Row row(4);
        row[0] = c;
        try {
            const auto s = rx::solve_sensitivity(c, sc.rx);
            row[1] = s.oma_dbm;
            row[2] = s.oma_w * 1e6;
        } catch (const Error& e) {
            row[3] = what_of(e);
        }
        return row;
    };
    return p;
}

Table fom_table(const Scenario& sc) {
    Table t;
    t.kind = SweepKind::FomTable;
    t.title = "Interconnect figure of merit";
    t.columns = {"rank",
                 "name",
                 "fom",
                 "bandwidth_efficiency_per_mm",
                 "areal_bw_density_gbps_per_mm2",
                 "shoreline_bw_density_gbps_per_mm",
                 "energy_efficiency_pj_per_bit",
                 "link_length_mm",
                 "link_latency_ns",
                 "source_note"};
    long rank = 1;
    for (const auto& r : fom::rank_technologies(sc.technologies)) {
        const auto& e = r.entry;
        t.rows.push_back({rank++, e.name, r.fom, e.bandwidth_efficiency(), e.areal_bw_density_gbps_mm2,
                          e.shoreline_bw_density_gbps_mm, e.energy_efficiency_pj_per_bit, e.link_length_mm,
                          e.link_latency_ns, e.source_note});
    }
    return t;
}

}  // namespace

Table run_sweep(const SweepSpec& spec, const Scenario& scenario, const RunOptions& opts) {
    validate(spec);
    if (spec.kind == SweepKind::FomTable) return fom_table(scenario);

    Plan plan;
    switch (spec.kind) {
        case SweepKind::EnergyVsLength: plan = plan_energy(scenario); break;
        case SweepKind::BwDensityVsPitch: plan = plan_density(spec, scenario); break;
        case SweepKind::TotalBwVsEdge: plan = plan_total(scenario); break;
        case SweepKind::WdmSweep: plan = plan_wdm(scenario); break;
        case SweepKind::PitchMatch: plan = plan_pitch_match(scenario); break;
        case SweepKind::OmaVsCap: plan = plan_oma(scenario); break;
        case SweepKind::FomTable: break;
    }

    const auto& xs = spec.axis.values;
    std::vector<std::size_t> order = opts.evaluation_order;
    if (order.empty()) {
        order.resize(xs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
    }
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            detail::require(sorted.size() == xs.size() && sorted[i] == i, "evaluation_order must permute the axis");
    }

    std::vector<Row> results(xs.size());
    const auto width = plan.columns.size();
    const auto evaluate = [&](std::size_t idx) {
        try {
            results[idx] = plan.eval(xs[idx]);
            if (std::holds_alternative<std::monostate>(results[idx].back())) results[idx].back() = std::string();
        } catch (const std::exception& e) {
            Row row(width);
            row[0] = xs[idx];
            row[width - 1] = std::string(e.what());
            results[idx] = std::move(row);
        }
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, xs.size()));
    if (threads <= 1) {
        for (std::size_t idx : order) evaluate(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < order.size(); k = next++) evaluate(order[k]);
            });
    }

    Table table;
    table.kind = spec.kind;
    table.title = plan.title;
    table.columns = std::move(plan.columns);
    table.rows = std::move(results);
    return table;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double d) const { return format_number(d); }
        std::string operator()(long l) const { return std::to_string(l); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const std::vector<std::string>& provenance) {
    for (const auto& line : provenance) out << "# " << line << "\r\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
    out << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << "\r\n";
    }
}

std::string to_csv(const Table& table, const std::vector<std::string>& provenance) {
    std::ostringstream os;
    write_csv(os, table, provenance);
    return os.str();
}

std::vector<std::string> provenance_lines(const Scenario& scenario, const SweepSpec* spec) {
    std::vector<std::string> out;
    out.push_back(std::string("linkbench ") + kVersion);
    out.push_back("scenario " + scenario.name + " v" + scenario.version + " sha " + scenario_hash(scenario.source));
    out.push_back("pitch profile " + scenario.pitch_profile.name());
    if (spec != nullptr) {
        out.push_back("sweep " + std::string(to_string(spec->kind)));
        if (!spec->note.empty()) out.push_back("note " + spec->note);
    }
    return out;
}

}  // namespace linkbench::sweep
