#pragma once

// Conventional BS comparators: M antennas frozen at the feed end, Delta apart.

#include "pass/channel.hpp"
#include "pass/errors.hpp"
#include "pass/params.hpp"

#include <algorithm>
#include <limits>
#include <string_view>

namespace pass {

enum class BaselineKind { FixedArray, CoherentUpperBound };

inline std::string_view label(BaselineKind kind) {
    return kind == BaselineKind::FixedArray ? "fixed-array" : "coherent-bound";
}

inline PaLayout fixed_array_layout(const SystemParams& params) {
    const int M = params.num_antennas();
    const double delta = params.min_spacing();
    if (M * delta > params.area_side())
        throw DomainError("fixed_array_layout: array longer than the waveguide");
    PaLayout layout;
    layout.x.reserve(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) layout.x.push_back(-params.half_side() + m * delta);
    return layout;
}

inline double baseline_min_snr(const Scenario& scenario, const SystemParams& params, BaselineKind kind) {
    validate_scenario(scenario, params);
    const PaLayout layout = fixed_array_layout(params);
    if (kind == BaselineKind::FixedArray) return multicast_snr(scenario, layout, params).value;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& u : scenario.users) worst = std::min(worst, coherent_snr_bound(u, layout.x, params));
    return worst;
}

} // namespace pass
