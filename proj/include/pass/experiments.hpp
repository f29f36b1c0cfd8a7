#pragma once

// Monte Carlo harness: random user drops, the rate-vs-area sweep and the
// normalised channel-gain raster.

#include "pass/baseline.hpp"
#include "pass/channel.hpp"
#include "pass/errors.hpp"
#include "pass/oracle.hpp"
#include "pass/parallel.hpp"
#include "pass/params.hpp"
#include "pass/pso.hpp"
#include "pass/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pass {

enum class Method { PassPso, FixedArray, CoherentBound };

inline std::string_view label(Method m) {
    switch (m) {
    case Method::PassPso: return "pass-pso";
    case Method::FixedArray: return "fixed-array";
    case Method::CoherentBound: return "coherent-bound";
    }
    return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s) {
    for (Method m : {Method::PassPso, Method::FixedArray, Method::CoherentBound})
        if (label(m) == s) return m;
    return std::nullopt;
}

struct ExperimentConfig {
    std::vector<double> L_values{5.0, 10.0, 15.0, 20.0};
    std::vector<int> M_values{2, 10};
    int num_drops = 200;
    int num_users = 4;
    std::uint64_t master_seed = 1;
    std::vector<Method> methods{Method::PassPso, Method::FixedArray, Method::CoherentBound};
    PsoConfig pso;
    SystemSpec system; // area_side and num_antennas are overridden per sweep point
    double grid_step = 0.05;
    unsigned workers = 0;
};

inline void validate(const ExperimentConfig& c) {
    if (c.num_drops < 1) throw DomainError("num_drops must be >= 1");
    if (c.num_users < 1) throw DomainError("num_users must be >= 1");
    if (c.L_values.empty() || c.M_values.empty()) throw DomainError("L_values and M_values must be non-empty");
    for (double L : c.L_values)
        if (!(L > 0.0)) throw DomainError("all L_values must be positive");
    for (int M : c.M_values)
        if (M < 1) throw DomainError("all M_values must be >= 1");
    if (c.methods.empty()) throw DomainError("at least one method is required");
    if (!(c.grid_step > 0.0)) throw DomainError("grid_step must be positive");
    validate(c.pso);
}

struct ExperimentRecord {
    std::uint64_t drop_seed = 0;
    int drop = 0;
    double L = 0.0;
    int M = 0;
    Method method = Method::PassPso;
    double min_snr = 0.0;
    double rate = 0.0;
    bool feasible = false;
    double wall_time = 0.0;
    std::string error; // non-empty marks a failed run
};

// Users depend on (L, drop) only, so every M and method sees the same drops.
inline std::uint64_t scenario_seed(std::uint64_t master, std::size_t L_index, std::size_t drop) {
    return derive_seed(master, {0x5ce0ULL, L_index, drop});
}

inline std::uint64_t pso_seed(std::uint64_t master, std::size_t L_index, std::size_t M_index, std::size_t drop) {
    return derive_seed(master, {0x950ULL, L_index, M_index, drop});
}

inline Scenario drop_users(int K, double L, std::uint64_t seed) {
    if (K < 1) throw DomainError("drop_users: K must be >= 1");
    if (!(L > 0.0)) throw DomainError("drop_users: L must be positive");
    Rng rng(seed);
    Scenario s;
    s.users.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const double x = rng.uniform(-L / 2.0, L / 2.0);
        const double y = rng.uniform(-L / 2.0, L / 2.0);
        s.users.push_back({x, y});
    }
    return s;
}

inline ExperimentRecord run_method(Method method, const Scenario& scenario, const SystemParams& params,
                                   const PsoConfig& pso) {
    ExperimentRecord rec;
    rec.method = method;
    rec.L = params.area_side();
    rec.M = params.num_antennas();
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (method) {
        case Method::PassPso: {
            const PsoResult r = run_pso(scenario, params, pso);
            rec.min_snr = r.best_min_snr;
            rec.feasible = r.feasible;
            break;
        }
        case Method::FixedArray:
            rec.min_snr = baseline_min_snr(scenario, params, BaselineKind::FixedArray);
            rec.feasible = true;
            break;
        case Method::CoherentBound:
            rec.min_snr = baseline_min_snr(scenario, params, BaselineKind::CoherentUpperBound);
            rec.feasible = true;
            break;
        }
        rec.rate = multicast_rate(rec.min_snr);
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.min_snr = std::numeric_limits<double>::quiet_NaN();
        rec.rate = std::numeric_limits<double>::quiet_NaN();
        rec.feasible = false;
    }
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

// Records come back ordered by (L index, M index, drop, method) whatever the
// worker count.
inline std::vector<ExperimentRecord> sweep_area(const ExperimentConfig& config) {
    validate(config);
    const std::size_t nL = config.L_values.size();
    const std::size_t nM = config.M_values.size();
    const auto nD = static_cast<std::size_t>(config.num_drops);
    const std::size_t nMethods = config.methods.size();
    std::vector<ExperimentRecord> out(nL * nM * nD * nMethods);

    parallel_for(nL * nM * nD, config.workers, [&](std::size_t job) {
        const std::size_t li = job / (nM * nD);
        const std::size_t mi = (job / nD) % nM;
        const std::size_t d = job % nD;
        SystemSpec spec = config.system;
        spec.area_side = config.L_values[li];
        spec.num_antennas = config.M_values[mi];
        const std::uint64_t seed = scenario_seed(config.master_seed, li, d);
        PsoConfig pso = config.pso;
        pso.seed = pso_seed(config.master_seed, li, mi, d);
        for (std::size_t k = 0; k < nMethods; ++k) {
            ExperimentRecord rec;
            try {
                const SystemParams params(spec);
                const Scenario scenario = drop_users(config.num_users, spec.area_side, seed);
                rec = run_method(config.methods[k], scenario, params, pso);
            } catch (const std::exception& e) {
                rec.method = config.methods[k];
                rec.L = spec.area_side;
                rec.M = spec.num_antennas;
                rec.error = e.what();
                rec.min_snr = rec.rate = std::numeric_limits<double>::quiet_NaN();
            }
            rec.drop_seed = seed;
            rec.drop = static_cast<int>(d);
            out[job * nMethods + k] = std::move(rec);
        }
    });
    return out;
}

struct HeatmapRaster {
    std::vector<double> xs; // column coordinates
    std::vector<double> ys; // row coordinates
    std::vector<double> values; // row-major, ys.size() x xs.size(), normalised to max 1
    double peak_gain = 0.0; // raw |h^H g|^2 dividing every entry
    std::vector<UserPosition> user_markers;

    double at(std::size_t row, std::size_t col) const { return values[row * xs.size() + col]; }
};

inline HeatmapRaster heatmap(const PaLayout& layout, const SystemParams& params, double grid_step,
                             std::vector<UserPosition> markers = {}) {
    if (!(grid_step > 0.0)) throw DomainError("heatmap: grid_step must be positive");
    HeatmapRaster r;
    r.xs = grid_points(params.area_side(), grid_step);
    r.ys = r.xs;
    r.values.resize(r.xs.size() * r.ys.size());
    for (std::size_t i = 0; i < r.ys.size(); ++i)
        for (std::size_t j = 0; j < r.xs.size(); ++j)
            r.values[i * r.xs.size() + j] = channel_gain({r.xs[j], r.ys[i]}, layout.x, params);
    r.peak_gain = *std::max_element(r.values.begin(), r.values.end());
    for (double& v : r.values) v /= r.peak_gain;
    r.user_markers = std::move(markers);
    return r;
}

// Gain at an arbitrary point on the same normalisation as the raster (may exceed 1
// off-grid).
inline double normalized_gain_at(const HeatmapRaster& r, const UserPosition& u, const PaLayout& layout,
                                 const SystemParams& params) {
    return channel_gain(u, layout.x, params) / r.peak_gain;
}

inline double raster_median(const HeatmapRaster& r) {
    std::vector<double> v = r.values;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    if (v.size() % 2 == 1) return v[mid];
    const double hi = v[mid];
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

} // namespace pass
