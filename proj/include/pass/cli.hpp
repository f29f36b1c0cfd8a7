#pragma once

// Command-line front end: optimize, oracle, sweep-l and heatmap subcommands.
// Exit codes: 0 success, 1 usage or validation error, 2 runtime failure.

#include "pass/config.hpp"
#include "pass/csv.hpp"
#include "pass/experiments.hpp"
#include "pass/oracle.hpp"
#include "pass/pso.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pass {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

namespace detail {

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::optional<int> antennas;
    std::optional<double> area_side;
    std::optional<int> drops;
    std::optional<unsigned> workers;
    std::optional<double> resolution;
    std::optional<double> grid_step;
};

inline ExperimentConfig load_config(const CliOptions& o) {
    ExperimentConfig c;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw ConfigError("cannot open config file '" + o.config_path + "'");
        c = experiment_config_from(parse_key_values(in));
    }
    if (o.seed) c.master_seed = *o.seed;
    if (o.drops) c.num_drops = *o.drops;
    if (o.workers) c.workers = *o.workers;
    if (o.grid_step) c.grid_step = *o.grid_step;
    if (o.area_side) c.L_values = {*o.area_side};
    if (o.antennas) c.M_values = {*o.antennas};
    validate(c);
    return c;
}

// Parameters, users and swarm seed of the single-scenario subcommands: the
// first sweep point, drop 0.
struct SingleScenario {
    SystemParams params;
    Scenario scenario;
    PsoConfig pso;
};

inline SingleScenario single_scenario(const ExperimentConfig& c) {
    SystemSpec spec = c.system;
    spec.area_side = c.L_values.front();
    spec.num_antennas = c.M_values.front();
    SingleScenario s{SystemParams(spec), drop_users(c.num_users, spec.area_side, scenario_seed(c.master_seed, 0, 0)),
                     c.pso};
    s.pso.seed = pso_seed(c.master_seed, 0, 0, 0);
    return s;
}

template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    write(f);
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

inline void print_layout(std::ostream& os, const PaLayout& layout, const Scenario& scenario,
                         const SystemParams& params) {
    os << std::setprecision(6);
    os << "antenna positions (m):";
    for (double x : layout.x) os << ' ' << x;
    os << '\n';
    for (std::size_t k = 0; k < scenario.users.size(); ++k) {
        const auto& u = scenario.users[k];
        const double s = snr_user(u, layout.x, params);
        os << "  user " << k << " at (" << u.x << ", " << u.y << "): snr " << s << " (" << 10.0 * std::log10(s)
           << " dB), rate " << multicast_rate(s) << " bit/s/Hz\n";
    }
}

inline int run_optimize(const CliOptions& o, std::ostream& out) {
    const ExperimentConfig c = load_config(o);
    const SingleScenario s = single_scenario(c);
    const PsoResult r = run_pso(s.scenario, s.params, s.pso);
    out << "pass-pso  L=" << s.params.area_side() << " m  M=" << s.params.num_antennas() << "  K="
        << s.scenario.users.size() << '\n';
    print_layout(out, r.best_layout, s.scenario, s.params);
    out << "multicast snr " << r.best_min_snr << "  rate " << r.best_rate << " bit/s/Hz  fitness " << r.best_fitness
        << (r.feasible ? "  feasible" : "  INFEASIBLE") << '\n';
    if (!o.out_path.empty())
        emit(o.out_path, out, [&](std::ostream& os) { write_layout_csv(os, r.best_layout, s.scenario, s.params, r.feasible); });
    return kExitOk;
}

inline int run_oracle(const CliOptions& o, std::ostream& out) {
    const ExperimentConfig c = load_config(o);
    const SingleScenario s = single_scenario(c);
    GridSpec grid;
    grid.resolution = o.resolution.value_or(s.params.num_antennas() == 1 ? 1e-3 : 1e-2);
    const OracleResult r = grid_search(s.scenario, s.params, grid, c.workers);
    out << "grid-search  L=" << s.params.area_side() << " m  M=" << s.params.num_antennas() << "  resolution "
        << grid.resolution << " m\n";
    print_layout(out, r.layout, s.scenario, s.params);
    out << "multicast snr " << r.min_snr << "  rate " << multicast_rate(r.min_snr) << " bit/s/Hz\n";
    if (!o.out_path.empty())
        emit(o.out_path, out, [&](std::ostream& os) { write_layout_csv(os, r.layout, s.scenario, s.params, true); });
    return kExitOk;
}

inline int run_sweep(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const ExperimentConfig c = load_config(o);
    const std::vector<ExperimentRecord> records = sweep_area(c);
    emit(o.out_path, out, [&](std::ostream& os) { write_sweep_csv(os, records); });
    int failures = 0;
    for (const auto& r : records) {
        if (r.error.empty()) continue;
        ++failures;
        err << "run failed (L=" << r.L << ", M=" << r.M << ", drop " << r.drop << ", " << label(r.method)
            << "): " << r.error << '\n';
    }
    return failures == 0 ? kExitOk : kExitRuntime;
}

inline int run_heatmap(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const ExperimentConfig c = load_config(o);
    const SingleScenario s = single_scenario(c);
    const PsoResult r = run_pso(s.scenario, s.params, s.pso);
    const HeatmapRaster raster = heatmap(r.best_layout, s.params, c.grid_step, s.scenario.users);
    emit(o.out_path, out, [&](std::ostream& os) { write_heatmap_csv(os, raster); });
    std::ostream& log = o.out_path.empty() ? err : out;
    log << "heatmap " << raster.xs.size() << "x" << raster.ys.size() << "  median " << raster_median(raster) << '\n';
    print_layout(log, r.best_layout, s.scenario, s.params);
    for (std::size_t k = 0; k < s.scenario.users.size(); ++k)
        log << "  user " << k << " normalized gain "
            << normalized_gain_at(raster, s.scenario.users[k], r.best_layout, s.params) << '\n';
    return kExitOk;
}

} // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Pinching-antenna multicast simulator and optimizer", "pass_cli"};
    app.require_subcommand(1);
    detail::CliOptions o;
    app.add_option("-c,--config", o.config_path, "Key-value configuration file");
    app.add_option("-s,--seed", o.seed, "Master seed");
    app.add_option("-o,--out", o.out_path, "Output CSV path ('-' for stdout)");
    app.add_option("-m,--m", o.antennas, "Number of pinching antennas (overrides M_values)")->check(CLI::PositiveNumber);
    app.add_option("-l,--l", o.area_side, "Area side length in meters (overrides L_values)")->check(CLI::PositiveNumber);
    app.add_option("--drops", o.drops, "Monte Carlo drops per sweep point")->check(CLI::PositiveNumber);
    app.add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
    app.add_option("--resolution", o.resolution, "Oracle grid resolution in meters")->check(CLI::PositiveNumber);
    app.add_option("--grid-step", o.grid_step, "Heatmap grid step in meters")->check(CLI::PositiveNumber);

    auto* optimize = app.add_subcommand("optimize", "Optimize antenna positions for one user drop");
    auto* oracle = app.add_subcommand("oracle", "Grid-search reference optimum for one drop (M <= 2)");
    auto* sweep = app.add_subcommand("sweep-l", "Multicast rate versus area side, CSV");
    auto* heat = app.add_subcommand("heatmap", "Normalized channel-gain raster of an optimized layout, CSV");
    for (auto* sub : {optimize, oracle, sweep, heat}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*optimize) return detail::run_optimize(o, out);
        if (*oracle) return detail::run_oracle(o, out);
        if (*sweep) return detail::run_sweep(o, out, err);
        if (*heat) return detail::run_heatmap(o, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedSizeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

} // namespace pass
