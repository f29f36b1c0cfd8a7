// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include "pass/pass.hpp"
#include "pass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace pass;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SystemParams paper_params(double L, int M) {
    SystemSpec s;
    s.area_side = L;
    s.num_antennas = M;
    return SystemParams(s);
}

struct Triple {
    SystemParams params;
    Scenario scenario;
    std::vector<double> x;
};

std::vector<Triple> random_triples(int n) {
    Rng rng(0xacce);
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        SystemSpec s;
        s.area_side = rng.uniform(1.0, 30.0);
        s.height = rng.uniform(0.5, 10.0);
        s.carrier_freq = rng.uniform(1e9, 100e9);
        s.refractive_index = rng.uniform(1.0, 2.0);
        s.num_antennas = 1 + static_cast<int>(rng.uniform01() * 16);
        const double h = s.area_side / 2;
        Triple t{SystemParams(s), {}, {}};
        for (int k = 0; k < 4; ++k) t.scenario.users.push_back({rng.uniform(-h, h), rng.uniform(-h, h)});
        for (int m = 0; m < s.num_antennas; ++m) t.x.push_back(rng.uniform(-h, h));
        out.push_back(std::move(t));
    }
    return out;
}

void criterion_1_2() {
    const auto triples = random_triples(10000);
    auto t0 = Clock::now();
    double worst_rel = 0.0;
    for (const auto& t : triples)
        for (const auto& u : t.scenario.users) {
            const double a = snr_user(u, t.x, t.params);
            const double b = snr_user_via_channels(u, t.x, t.params);
            worst_rel = std::max(worst_rel, std::abs(a - b) / b);
        }
    const double dt = seconds_since(t0);
    report(1, worst_rel <= 1e-10 && dt < 5.0,
           fmt("two-path SNR equivalence, 10^4 triples: max rel err %.3e (<= 1e-10), %.2f s (< 5 s)", worst_rel, dt));

    int violations = 0;
    for (const auto& t : triples)
        for (const auto& u : t.scenario.users)
            if (snr_user(u, t.x, t.params) > coherent_snr_bound(u, t.x, t.params) * (1.0 + 1e-12)) ++violations;
    report(2, violations == 0, fmt("coherent-bound inequality: %d violations over 10^4 triples", violations));
}

void criterion_3() {
    const SystemParams p = paper_params(5.0, 1);
    int ok = 0;
    double worst_ratio = 1e300, slowest = 0.0;
    for (int d = 0; d < 20; ++d) {
        const Scenario s = drop_users(4, 5.0, scenario_seed(3, 0, static_cast<std::size_t>(d)));
        const auto t0 = Clock::now();
        PsoConfig c;
        c.seed = pso_seed(3, 0, 0, static_cast<std::size_t>(d));
        const PsoResult r = run_pso(s, p, c);
        const OracleResult o = grid_search(s, p, GridSpec{1e-3, 2});
        const double dt = seconds_since(t0);
        const double ratio = r.best_fitness / o.min_snr;
        worst_ratio = std::min(worst_ratio, ratio);
        slowest = std::max(slowest, dt);
        if (ratio >= 0.999 && dt < 10.0) ++ok;
    }
    report(3, ok == 20,
           fmt("M=1 oracle equivalence: %d/20 drops with PSO >= 0.999 x grid(1e-3); worst ratio %.6f, slowest %.2f s",
               ok, worst_ratio, slowest));
}

void criterion_4() {
    const SystemParams p = paper_params(5.0, 2);
    int ok = 0;
    double worst_ratio = 1e300, slowest_oracle = 0.0;
    for (int d = 0; d < 10; ++d) {
        const Scenario s = drop_users(4, 5.0, scenario_seed(4, 0, static_cast<std::size_t>(d)));
        PsoConfig c;
        c.seed = pso_seed(4, 0, 0, static_cast<std::size_t>(d));
        const PsoResult r = run_pso(s, p, c);
        const auto t0 = Clock::now();
        const OracleResult o = grid_search(s, p, GridSpec{1e-2, 2});
        const double dt = seconds_since(t0);
        const double ratio = r.best_fitness / o.min_snr;
        worst_ratio = std::min(worst_ratio, ratio);
        slowest_oracle = std::max(slowest_oracle, dt);
        if (ratio >= 0.98 && dt < 120.0) ++ok;
    }
    report(4, ok == 10,
           fmt("M=2 oracle equivalence: %d/10 drops with PSO >= 0.98 x grid(0.01); worst ratio %.4f, slowest oracle %.2f s",
               ok, worst_ratio, slowest_oracle));
}

void criterion_5() {
    int monotone = 0, feasible = 0, flagged_right = 0, ranged = 0;
    for (int run = 0; run < 100; ++run) {
        const double L = 5.0 * (1 + run % 4);
        const int M = 2 + 2 * (run % 5);
        const SystemParams p = paper_params(L, M);
        const Scenario s = drop_users(4, L, scenario_seed(5, 0, static_cast<std::size_t>(run)));
        PsoConfig c;
        c.swarm_size = 50;
        c.max_iters = 1000;
        c.seed = pso_seed(5, 0, 0, static_cast<std::size_t>(run));
        const PsoResult r = run_pso(s, p, c);
        if (r.fitness_history.size() == 1000 &&
            std::is_sorted(r.fitness_history.begin(), r.fitness_history.end()))
            ++monotone;
        const bool in_range = std::all_of(r.best_layout.x.begin(), r.best_layout.x.end(),
                                          [&](double x) { return x >= -L / 2 && x <= L / 2; });
        bool spaced = true;
        for (std::size_t m = 0; m + 1 < r.best_layout.x.size(); ++m)
            if (r.best_layout.x[m + 1] - r.best_layout.x[m] < p.min_spacing() - 1e-9) spaced = false;
        if (in_range) ++ranged;
        if (in_range && spaced) ++feasible;
        if (r.feasible == (in_range && spaced)) ++flagged_right;
    }
    report(5, monotone == 100 && ranged == 100 && feasible >= 95 && flagged_right == 100,
           fmt("PSO invariants over 100 runs: monotone history %d/100, in range %d/100, feasible %d/100 (>= 95), "
               "flag correct %d/100",
               monotone, ranged, feasible, flagged_right));
}


void criterion_6_7() {
    const auto t0 = Clock::now();
    ExperimentConfig c;
    c.L_values = {5.0, 10.0, 15.0, 20.0};
    c.M_values = {2};
    c.num_drops = 200;
    c.master_seed = 6;
    const auto m2 = sweep_area(c);
    c.L_values = {5.0};
    c.M_values = {2, 10};
    const auto l5 = sweep_area(c);
    const double dt = seconds_since(t0);

    int errors = 0;
    std::map<std::pair<double, int>, std::map<Method, double>> mean;
    for (const auto* set : {&m2, &l5})
        for (const auto& r : *set) {
            if (!r.error.empty()) ++errors;
            mean[{r.L, r.M}][r.method] += r.rate / 200.0;
        }

    // Per drop: PSO never loses to the fixed array unless its answer is flagged infeasible.
    int dominated = 0;
    for (const auto* set : {&m2, &l5})
        for (std::size_t i = 0; i + 1 < set->size(); i += 3) {
            const auto& ps = (*set)[i];
            const auto& fx = (*set)[i + 1];
            if (ps.feasible && ps.min_snr < fx.min_snr) ++dominated;
        }

    bool beats = true, dec_pass = true, dec_fixed = true;
    std::string detail;
    double prev_pass = 1e300, prev_fixed = 1e300;
    for (double L : {5.0, 10.0, 15.0, 20.0}) {
        const double mp = mean[{L, 2}][Method::PassPso];
        const double mf = mean[{L, 2}][Method::FixedArray];
        beats = beats && mp > mf;
        dec_pass = dec_pass && mp < prev_pass;
        dec_fixed = dec_fixed && mf < prev_fixed;
        prev_pass = mp;
        prev_fixed = mf;
        detail += fmt(" L=%g: pass %.3f / fixed %.3f;", L, mp, mf);
    }
    report(6, beats && dec_pass && dec_fixed && errors == 0 && dominated == 0 && dt < 1800.0,
           fmt("M=2 mean rates (bit/s/Hz), 200 drops:%s pass>fixed at all L %s, decreasing pass %s, fixed %s; "
               "feasible PSO below fixed array on %d drops; %d errors; %.1f s",
               detail.c_str(), beats ? "yes" : "no", dec_pass ? "yes" : "no", dec_fixed ? "yes" : "no", dominated,
               errors, dt));

    // Same drops for both M (users depend on L and drop index only).
    auto gap = [&](int M, Method base) {
        double g = 0.0;
        for (std::size_t i = 0; i < l5.size(); i += 3) {
            if (l5[i].M != M) continue;
            const ExperimentRecord& pass_rec = l5[i];
            const ExperimentRecord& base_rec = l5[i + (base == Method::FixedArray ? 1 : 2)];
            g += (pass_rec.rate - base_rec.rate) / 200.0;
        }
        return g;
    };
    const double g2 = gap(2, Method::CoherentBound), g10 = gap(10, Method::CoherentBound);
    const double f2 = gap(2, Method::FixedArray), f10 = gap(10, Method::FixedArray);
    report(7, g10 < g2,
           fmt("gap vs M at L=5: mean(pass - coherent-bound) M=2 %.3f, M=10 %.3f; fixed-array gap M=2 %.3f, M=10 "
               "%.3f (%s, informational)",
               g2, g10, f2, f10, f10 < f2 ? "also shrinks" : "does not shrink"));
}

void criterion_8() {
    const SystemParams p = paper_params(5.0, 2);
    int ok = 0;
    for (int d = 0; d < 20; ++d) {
        const Scenario s = drop_users(4, 5.0, scenario_seed(8, 0, static_cast<std::size_t>(d)));
        PsoConfig c;
        c.seed = pso_seed(8, 0, 0, static_cast<std::size_t>(d));
        const PsoResult r = run_pso(s, p, c);
        const HeatmapRaster raster = heatmap(r.best_layout, p, 0.05, s.users);
        const double median = raster_median(raster);
        bool all = true;
        for (const auto& u : s.users) all = all && normalized_gain_at(raster, u, r.best_layout, p) > median;
        if (all) ++ok;
    }
    report(8, ok >= 15, fmt("beamfocusing: every user above raster median in %d/20 drops (>= 15)", ok));
}

struct CliRun {
    int code;
    std::string csv;
};

CliRun cli(std::vector<std::string> args, const std::filesystem::path& out) {
    args.insert(args.begin(), "pass_cli");
    args.push_back("--out");
    args.push_back(out.string());
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), o, e);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {code, ss.str()};
}

// wall_time_s is a measurement, not a result; it is blanked before comparison.
std::string without_wall_time(const std::string& csv) {
    std::istringstream is(csv);
    std::string line, out;
    while (std::getline(is, line)) out += line.substr(0, line.rfind(',')) + '\n';
    return out;
}

void criterion_9() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pass_acceptance";
    fs::create_directories(dir);
    std::ofstream(dir / "c.cfg") << "L_values = 5, 10\nM_values = 2, 3\nnum_drops = 4\nswarm_size = 30\n"
                                    "max_iters = 300\ngrid_step = 0.1\n";
    const std::string cfg = (dir / "c.cfg").string();
    bool ok = true;
    std::string detail;
    struct Case {
        std::string name;
        std::vector<std::string> a, b;
        bool sweep;
    };
    const std::vector<Case> cases = {
        {"optimize", {"optimize", "-c", cfg, "--seed", "7"}, {"optimize", "-c", cfg, "--seed", "7"}, false},
        {"oracle", {"oracle", "-c", cfg, "--seed", "7", "--workers", "1"},
         {"oracle", "-c", cfg, "--seed", "7", "--workers", "3"}, false},
        {"heatmap", {"heatmap", "-c", cfg, "--seed", "7"}, {"heatmap", "-c", cfg, "--seed", "7"}, false},
        {"sweep-l", {"sweep-l", "-c", cfg, "--seed", "7", "--workers", "1"},
         {"sweep-l", "-c", cfg, "--seed", "7", "--workers", "4"}, true},
    };
    for (const auto& c : cases) {
        const CliRun a = cli(c.a, dir / (c.name + "_a.csv"));
        const CliRun b = cli(c.b, dir / (c.name + "_b.csv"));
        const bool same = a.code == 0 && b.code == 0 && !a.csv.empty() &&
                          (c.sweep ? without_wall_time(a.csv) == without_wall_time(b.csv) : a.csv == b.csv);
        ok = ok && same;
        detail += " " + c.name + (same ? " identical;" : " DIFFERS;");
    }
    fs::remove_all(dir);
    report(9, ok, "determinism across repeats and worker counts:" + detail);
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    criterion_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_8();
    criterion_9();
    criterion_6_7();
    std::printf("%d criterion failure(s), %.1f s total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
