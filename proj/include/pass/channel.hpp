#pragma once

// PASS channel model: in-waveguide phases, LoS free-space links and the
// resulting per-user / multicast SNR. Everything here is pure.

#include "pass/errors.hpp"
#include "pass/params.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace pass {

using ComplexVector = std::vector<std::complex<double>>;

// length / wavelength reduced to [-1/2, 1/2] cycles. Phase terms are wrapped
// before they are combined so the rounding of a sum of two ~1e4 rad
// arguments does not swamp deep interference nulls.
inline double wrapped_cycles(double length, double wavelength) {
    const double c = length / wavelength;
    return c - std::nearbyint(c);
}

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double user_pa_distance(const UserPosition& user, double x_m, double height) {
    if (height < 0.0) throw DomainError("user_pa_distance: height must be non-negative");
    const double dx = user.x - x_m;
    return std::sqrt(dx * dx + (user.y * user.y + height * height));
}

// g(x): entry m = exp(-j 2pi/lambda_g (x_m + L/2)).
inline ComplexVector inwaveguide_vector(std::span<const double> x, double L, double guide_wl) {
    if (!(guide_wl > 0.0)) throw DomainError("inwaveguide_vector: guide wavelength must be positive");
    ComplexVector g;
    g.reserve(x.size());
    for (double xm : x) {
        const double phase = -kTwoPi * wrapped_cycles(xm + L / 2.0, guide_wl);
        g.emplace_back(std::cos(phase), std::sin(phase));
    }
    return g;
}

// h_k^H(x) as a row: entry m = sqrt(eta)/d_km * exp(-j 2pi/lambda d_km).
inline ComplexVector freespace_vector(const UserPosition& user, std::span<const double> x,
                                      const SystemParams& params) {
    ComplexVector h;
    h.reserve(x.size());
    for (double xm : x) {
        const double d = user_pa_distance(user, xm, params.height());
        if (!(d > 0.0)) throw SingularityError("freespace_vector: user coincides with an antenna");
        h.push_back(std::polar(params.amplitude_root() / d, -kTwoPi * wrapped_cycles(d, params.wavelength())));
    }
    return h;
}

// Raw array gain |h^H g|^2 at a ground point (no power or noise scaling).
inline double channel_gain(const UserPosition& user, std::span<const double> x, const SystemParams& params) {
    double re = 0.0;
    double im = 0.0;
    for (double xm : x) {
        const double d = user_pa_distance(user, xm, params.height());
        if (!(d > 0.0)) throw SingularityError("channel_gain: point coincides with an antenna");
        const double phase = -kTwoPi * (wrapped_cycles(d, params.wavelength()) +
                                        wrapped_cycles(xm + params.half_side(), params.guide_wavelength()));
        re += std::cos(phase) / d;
        im += std::sin(phase) / d;
    }
    return params.eta() * (re * re + im * im);
}

// Closed-form per-user SNR: P eta / (M sigma^2) |sum_m e^{-j(k d + k_g (x_m + L/2))} / d|^2.
// The prefactor uses x.size() as M so that synthetic layouts work too.
inline double snr_user(const UserPosition& user, std::span<const double> x, const SystemParams& params) {
    const double M = static_cast<double>(x.size());
    return params.tx_power() / (M * params.noise_power()) * channel_gain(user, x, params);
}

// Same quantity through the explicit channel vectors: (P/M) |h^H g|^2 / sigma^2.
inline double snr_user_via_channels(const UserPosition& user, std::span<const double> x,
                                    const SystemParams& params) {
    const ComplexVector h = freespace_vector(user, x, params);
    const ComplexVector g = inwaveguide_vector(x, params.area_side(), params.guide_wavelength());
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < h.size(); ++m) acc += h[m] * g[m];
    const double M = static_cast<double>(x.size());
    return params.tx_power() / M * std::norm(acc) / params.noise_power();
}

// Phase-aligned ceiling: P eta / (M sigma^2) (sum_m 1/d_km)^2.
inline double coherent_snr_bound(const UserPosition& user, std::span<const double> x,
                                 const SystemParams& params) {
    double s = 0.0;
    for (double xm : x) s += 1.0 / user_pa_distance(user, xm, params.height());
    const double M = static_cast<double>(x.size());
    return params.tx_power() * params.eta() / (M * params.noise_power()) * s * s;
}

struct MulticastSnr {
    double value = 0.0;
    std::size_t worst_user = 0;
};

inline MulticastSnr multicast_snr(const Scenario& scenario, std::span<const double> x,
                                  const SystemParams& params) {
    if (scenario.users.empty()) throw DomainError("multicast_snr: empty scenario");
    MulticastSnr out{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t k = 0; k < scenario.users.size(); ++k) {
        const double s = snr_user(scenario.users[k], x, params);
        if (s < out.value) out = {s, k};
    }
    return out;
}

inline MulticastSnr multicast_snr(const Scenario& scenario, const PaLayout& layout,
                                  const SystemParams& params) {
    return multicast_snr(scenario, std::span<const double>(layout.x), params);
}

inline double multicast_rate(double min_snr) {
    if (!(min_snr >= 0.0)) throw DomainError("multicast_rate: SNR must be non-negative");
    return std::log2(1.0 + min_snr);
}

} // namespace pass
