#pragma once

// Exhaustive grid maximiser of the multicast SNR for M = 1 or 2. Used as
// ground truth for the swarm optimiser on small instances.

#include "pass/channel.hpp"
#include "pass/errors.hpp"
#include "pass/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>
#include <vector>

namespace pass {

struct GridSpec {
    double resolution = 1e-3;
    int max_antennas = 2;
};

struct OracleResult {
    PaLayout layout;
    double min_snr = -std::numeric_limits<double>::infinity();
};

// Inclusive grid over [-L/2, L/2] with n = ceil(L / resolution) intervals.
// Points are -L/2 + (L i) / n, so a grid whose interval count divides another's
// is an exact subset of it.
inline std::vector<double> grid_points(double L, double resolution) {
    if (!(resolution > 0.0)) throw DomainError("grid resolution must be positive");
    const auto n = static_cast<std::size_t>(std::ceil(L / resolution - 1e-9));
    std::vector<double> pts(n + 1);
    for (std::size_t i = 0; i <= n; ++i) pts[i] = -L / 2.0 + (L * static_cast<double>(i)) / static_cast<double>(n);
    pts.back() = L / 2.0;
    return pts;
}

inline OracleResult grid_search(const Scenario& scenario, const SystemParams& params, const GridSpec& grid,
                                unsigned workers = 0) {
    const int M = params.num_antennas();
    if (M < 1 || M > 2 || M > grid.max_antennas)
        throw UnsupportedSizeError("grid_search supports only M = 1 or M = 2");
    validate_scenario(scenario, params);
    const std::vector<double> pts = grid_points(params.area_side(), grid.resolution);
    const double delta = params.min_spacing();
    const std::size_t n = pts.size();

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    // Each chunk scans outer indices [begin, end) in lexicographic order and keeps
    // the first strict maximum; chunks are reduced in order, so ties resolve to
    // the lexicographically smallest layout regardless of the worker count.
    std::vector<OracleResult> partial(workers);
    auto scan = [&](std::size_t chunk) {
        const std::size_t begin = n * chunk / workers;
        const std::size_t end = n * (chunk + 1) / workers;
        OracleResult& best = partial[chunk];
        double x2[2];
        for (std::size_t i = begin; i < end; ++i) {
            if (M == 1) {
                x2[0] = pts[i];
                const double v = multicast_snr(scenario, std::span<const double>(x2, 1), params).value;
                if (v > best.min_snr) best = {PaLayout{{pts[i]}}, v};
                continue;
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                if (pts[j] - pts[i] < delta) continue;
                x2[0] = pts[i];
                x2[1] = pts[j];
                const double v = multicast_snr(scenario, std::span<const double>(x2, 2), params).value;
                if (v > best.min_snr) best = {PaLayout{{pts[i], pts[j]}}, v};
            }
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned c = 0; c < workers; ++c) threads.emplace_back(scan, c);
    }

    OracleResult out;
    for (const auto& p : partial)
        if (!p.layout.x.empty() && p.min_snr > out.min_snr) out = p;
    if (out.layout.x.empty()) throw DomainError("grid_search: no feasible grid layout");
    return out;
}

} // namespace pass
