#pragma once

#include "pass/errors.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace pass {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

inline double guide_wavelength(double wavelength, double refractive_index) {
    if (!(wavelength > 0.0))
        throw DomainError("guide_wavelength: wavelength must be positive");
    if (!(refractive_index >= 1.0))
        throw DomainError("guide_wavelength: refractive index must be >= 1");
    return wavelength / refractive_index;
}

// User-facing description of a system. All powers in watts, frequencies in Hz.
// When min_spacing is empty the half free-space wavelength is used.
struct SystemSpec {
    double area_side = 5.0;
    double height = 3.0;
    double carrier_freq = 28e9;
    double refractive_index = 1.4;
    double tx_power = 1e-3;
    double noise_power = 1e-12;
    std::optional<double> min_spacing;
    int num_antennas = 2;
};

// Validated physical parameters with the derived quantities cached.
class SystemParams {
public:
    SystemParams() : SystemParams(SystemSpec{}) {}

    explicit SystemParams(const SystemSpec& spec) : spec_(spec) {
        if (!(spec.area_side > 0.0)) throw DomainError("area side L must be positive");
        if (!(spec.height > 0.0)) throw DomainError("height H must be positive");
        if (!(spec.carrier_freq > 0.0)) throw DomainError("carrier frequency must be positive");
        if (!(spec.tx_power > 0.0)) throw DomainError("transmit power must be positive");
        if (!(spec.noise_power > 0.0)) throw DomainError("noise power must be positive");
        if (spec.num_antennas < 1) throw DomainError("number of antennas M must be >= 1");
        wavelength_ = kSpeedOfLight / spec.carrier_freq;
        guide_wavelength_ = pass::guide_wavelength(wavelength_, spec.refractive_index);
        amplitude_root_ = wavelength_ / (4.0 * std::numbers::pi);
        min_spacing_ = spec.min_spacing.value_or(wavelength_ / 2.0);
        if (!(min_spacing_ > 0.0)) throw DomainError("minimum spacing must be positive");
    }

    double area_side() const { return spec_.area_side; }
    double half_side() const { return spec_.area_side / 2.0; }
    double height() const { return spec_.height; }
    double carrier_freq() const { return spec_.carrier_freq; }
    double lightspeed() const { return kSpeedOfLight; }
    double wavelength() const { return wavelength_; }
    double refractive_index() const { return spec_.refractive_index; }
    double guide_wavelength() const { return guide_wavelength_; }
    double tx_power() const { return spec_.tx_power; }
    double noise_power() const { return spec_.noise_power; }
    double min_spacing() const { return min_spacing_; }
    int num_antennas() const { return spec_.num_antennas; }
    // sqrt(eta) = c / (4 pi fc)
    double amplitude_root() const { return amplitude_root_; }
    double eta() const { return amplitude_root_ * amplitude_root_; }

    const SystemSpec& spec() const { return spec_; }

    SystemParams with_area_side(double L) const {
        SystemSpec s = spec_;
        s.area_side = L;
        return SystemParams(s);
    }
    SystemParams with_antennas(int M) const {
        SystemSpec s = spec_;
        s.num_antennas = M;
        return SystemParams(s);
    }

private:
    SystemSpec spec_;
    double wavelength_ = 0.0;
    double guide_wavelength_ = 0.0;
    double amplitude_root_ = 0.0;
    double min_spacing_ = 0.0;
};

struct UserPosition {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const UserPosition&) const = default;
};

// Ground-plane user drop (z = 0).
struct Scenario {
    std::vector<UserPosition> users;
    bool operator==(const Scenario&) const = default;
};

inline void validate_scenario(const Scenario& scenario, const SystemParams& params) {
    if (scenario.users.empty()) throw DomainError("scenario must contain at least one user");
    const double h = params.half_side();
    for (const auto& u : scenario.users) {
        if (!(std::abs(u.x) <= h && std::abs(u.y) <= h))
            throw DomainError("user position outside the service square");
    }
}

// Pinching-antenna x-coordinates on the waveguide (y = 0, z = H).
struct PaLayout {
    std::vector<double> x;
    std::size_t size() const { return x.size(); }
    bool operator==(const PaLayout&) const = default;
};

inline bool in_range(const std::vector<double>& x, double L) {
    const double h = L / 2.0;
    for (double v : x)
        if (!(v >= -h && v <= h)) return false;
    return true;
}

// Builds a layout, rejecting entries outside [-L/2, L/2].
inline PaLayout make_layout(std::vector<double> x, const SystemParams& params) {
    if (x.empty()) throw DomainError("layout must contain at least one antenna");
    if (!in_range(x, params.area_side())) throw DomainError("antenna position outside the waveguide");
    return PaLayout{std::move(x)};
}

// Range plus pairwise spacing >= min_spacing - tol.
inline bool is_feasible(const PaLayout& layout, const SystemParams& params, double tol = 1e-9) {
    if (!in_range(layout.x, params.area_side())) return false;
    const double delta = params.min_spacing();
    for (std::size_t m = 0; m < layout.x.size(); ++m)
        for (std::size_t n = m + 1; n < layout.x.size(); ++n)
            if (std::abs(layout.x[m] - layout.x[n]) < delta - tol) return false;
    return true;
}

} // namespace pass
