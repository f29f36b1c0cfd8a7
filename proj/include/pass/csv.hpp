#pragma once

#include "pass/experiments.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

namespace pass {

inline constexpr const char* kSweepHeader = "drop_seed,L,M,method,min_snr_linear,rate_bps_hz,feasible,wall_time_s";
inline constexpr const char* kHeatmapHeader = "x_m,y_m,normalized_gain";
inline constexpr const char* kLayoutHeader = "entity,index,x_m,y_m,snr_linear,rate_bps_hz,feasible";

// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline void write_sweep_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << kSweepHeader << '\n';
    for (const auto& r : records) {
        os << r.drop_seed << ',' << format_double(r.L) << ',' << r.M << ',' << label(r.method) << ','
           << format_double(r.min_snr) << ',' << format_double(r.rate) << ',' << (r.feasible ? "true" : "false")
           << ',' << format_double(r.wall_time) << '\n';
    }
}

inline void write_heatmap_csv(std::ostream& os, const HeatmapRaster& raster) {
    os << kHeatmapHeader << '\n';
    for (std::size_t i = 0; i < raster.ys.size(); ++i)
        for (std::size_t j = 0; j < raster.xs.size(); ++j)
            os << format_double(raster.xs[j]) << ',' << format_double(raster.ys[i]) << ','
               << format_double(raster.at(i, j)) << '\n';
}

// One row per antenna, one per user, and a final "multicast" row whose index
// is the worst user.
inline void write_layout_csv(std::ostream& os, const PaLayout& layout, const Scenario& scenario,
                             const SystemParams& params, bool feasible) {
    os << kLayoutHeader << '\n';
    for (std::size_t m = 0; m < layout.x.size(); ++m)
        os << "antenna," << m << ',' << format_double(layout.x[m]) << ",0,,," << '\n';
    for (std::size_t k = 0; k < scenario.users.size(); ++k) {
        const double s = snr_user(scenario.users[k], layout.x, params);
        os << "user," << k << ',' << format_double(scenario.users[k].x) << ','
           << format_double(scenario.users[k].y) << ',' << format_double(s) << ','
           << format_double(multicast_rate(s)) << ",\n";
    }
    const MulticastSnr mc = multicast_snr(scenario, layout, params);
    os << "multicast," << mc.worst_user << ",,," << format_double(mc.value) << ','
       << format_double(multicast_rate(mc.value)) << ',' << (feasible ? "true" : "false") << '\n';
}

} // namespace pass
