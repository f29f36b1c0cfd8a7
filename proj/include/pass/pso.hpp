#pragma once

// Penalty-augmented particle swarm optimisation of pinching-antenna positions.
//
// Fitness is the linear multicast SNR minus xi times the number of antenna
// pairs closer than the minimum spacing. Positions are clamped to the
// waveguide after every move; velocities are not clamped. The global best is
// updated immediately after each particle (asynchronous PSO), processing
// particles in index order, so a run is a pure function of its inputs.

#include "pass/channel.hpp"
#include "pass/errors.hpp"
#include "pass/params.hpp"
#include "pass/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace pass {

struct PsoConfig {
    int swarm_size = 200;
    int max_iters = 1000;
    double c1 = 1.5;
    double c2 = 1.5;
    double inertia_max = 0.8;
    double inertia_min = 0.2;
    double penalty = 1000.0;
    std::uint64_t seed = 0;
    // Half-width of the initial velocity box; L/10 when unset.
    std::optional<double> velocity_init_span;
};

inline void validate(const PsoConfig& c) {
    if (c.swarm_size < 1) throw DomainError("swarm size must be >= 1");
    if (c.max_iters < 1) throw DomainError("max iterations must be >= 1");
    if (!(c.inertia_max >= c.inertia_min && c.inertia_min >= 0.0))
        throw DomainError("inertia bounds must satisfy inertia_max >= inertia_min >= 0");
    if (!(c.penalty > 0.0)) throw DomainError("penalty factor must be positive");
    if (!(c.c1 >= 0.0) || !(c.c2 >= 0.0)) throw DomainError("learning factors must be non-negative");
    if (c.velocity_init_span && !(*c.velocity_init_span >= 0.0))
        throw DomainError("velocity init span must be non-negative");
}

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_fitness = -std::numeric_limits<double>::infinity();
    Rng rng{0};
};

struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> global_best_position;
    double global_best_fitness = -std::numeric_limits<double>::infinity();
    int iteration = 0;
};

struct PsoResult {
    PaLayout best_layout; // sorted ascending
    double best_fitness = 0.0;
    double best_min_snr = 0.0;
    double best_rate = 0.0;
    bool feasible = false;
    std::vector<double> fitness_history; // global best after each of the T iterations
};

inline double inertia_weight(int t, const PsoConfig& config) {
    if (t < 0 || t > config.max_iters) throw DomainError("inertia_weight: t outside [0, T]");
    return config.inertia_max -
           (config.inertia_max - config.inertia_min) * static_cast<double>(t) / config.max_iters;
}

inline std::vector<double> clamp_positions(std::vector<double> x, double L) {
    const double h = L / 2.0;
    for (double& v : x) v = std::clamp(v, -h, h);
    return x;
}

// Number of unordered pairs strictly closer than delta.
inline std::size_t penalty_count(std::span<const double> x, double delta) {
    std::size_t count = 0;
    for (std::size_t m = 0; m < x.size(); ++m)
        for (std::size_t n = m + 1; n < x.size(); ++n)
            if (std::abs(x[m] - x[n]) < delta) ++count;
    return count;
}

inline double fitness(std::span<const double> x, const Scenario& scenario, const SystemParams& params,
                      double penalty) {
    return multicast_snr(scenario, x, params).value -
           penalty * static_cast<double>(penalty_count(x, params.min_spacing()));
}

// v' = w v + c1 a1 (x_p - x) + c2 a2 (x_g - x) with the random factors supplied.
inline std::vector<double> update_velocity(const Particle& p, std::span<const double> global_best, double w,
                                           const PsoConfig& config, std::span<const double> alpha1,
                                           std::span<const double> alpha2) {
    const std::size_t M = p.position.size();
    if (p.velocity.size() != M || p.best_position.size() != M || global_best.size() != M ||
        alpha1.size() != M || alpha2.size() != M)
        throw DomainError("update_velocity: dimension mismatch");
    std::vector<double> v(M);
    for (std::size_t m = 0; m < M; ++m) {
        v[m] = w * p.velocity[m] + config.c1 * alpha1[m] * (p.best_position[m] - p.position[m]) +
               config.c2 * alpha2[m] * (global_best[m] - p.position[m]);
    }
    return v;
}

// Fresh uniform [0, 1) factors per dimension, all alpha1 first then alpha2.
inline std::vector<double> update_velocity(const Particle& p, std::span<const double> global_best, double w,
                                           const PsoConfig& config, Rng& rng) {
    const std::size_t M = p.position.size();
    std::vector<double> a1(M), a2(M);
    for (double& a : a1) a = rng.uniform01();
    for (double& a : a2) a = rng.uniform01();
    return update_velocity(p, global_best, w, config, a1, a2);
}

inline std::vector<double> update_position(std::span<const double> x, std::span<const double> v, double L) {
    if (x.size() != v.size()) throw DomainError("update_position: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t m = 0; m < x.size(); ++m) out[m] = x[m] + v[m];
    return clamp_positions(std::move(out), L);
}

inline SwarmState init_swarm(const PsoConfig& config, const Scenario& scenario, const SystemParams& params) {
    validate(config);
    const auto M = static_cast<std::size_t>(params.num_antennas());
    const double h = params.half_side();
    const double span = config.velocity_init_span.value_or(params.area_side() / 10.0);

    SwarmState s;
    s.particles.reserve(static_cast<std::size_t>(config.swarm_size));
    for (int i = 0; i < config.swarm_size; ++i) {
        Particle p;
        p.rng = Rng(derive_seed(config.seed, {static_cast<std::uint64_t>(i)}));
        p.position.resize(M);
        p.velocity.resize(M);
        for (double& x : p.position) x = p.rng.uniform(-h, h);
        for (double& v : p.velocity) v = p.rng.uniform(-span, span);
        p.best_position = p.position;
        p.best_fitness = fitness(p.position, scenario, params, config.penalty);
        if (p.best_fitness > s.global_best_fitness) {
            s.global_best_fitness = p.best_fitness;
            s.global_best_position = p.position;
        }
        s.particles.push_back(std::move(p));
    }
    // Every fitness is finite, so the first particle always seeds the global best.
    return s;
}

using IterationObserver = std::function<void(const SwarmState&)>;

inline PsoResult run_pso(const Scenario& scenario, const SystemParams& params, const PsoConfig& config,
                         const IterationObserver& observer = {}) {
    validate(config);
    validate_scenario(scenario, params);

    SwarmState s = init_swarm(config, scenario, params);
    PsoResult r;
    r.fitness_history.reserve(static_cast<std::size_t>(config.max_iters));
    const double L = params.area_side();

    for (int t = 1; t <= config.max_iters; ++t) {
        const double w = inertia_weight(t, config);
        for (Particle& p : s.particles) {
            p.velocity = update_velocity(p, s.global_best_position, w, config, p.rng);
            p.position = update_position(p.position, p.velocity, L);
            const double f = fitness(p.position, scenario, params, config.penalty);
            if (f > p.best_fitness) {
                p.best_fitness = f;
                p.best_position = p.position;
            }
            if (f > s.global_best_fitness) {
                s.global_best_fitness = f;
                s.global_best_position = p.position;
            }
        }
        s.iteration = t;
        r.fitness_history.push_back(s.global_best_fitness);
        if (observer) observer(s);
    }

    std::vector<double> best = s.global_best_position;
    std::sort(best.begin(), best.end());
    r.best_layout = PaLayout{std::move(best)};
    r.best_fitness = s.global_best_fitness;
    r.best_min_snr = multicast_snr(scenario, r.best_layout, params).value;
    r.best_rate = multicast_rate(r.best_min_snr);
    r.feasible = is_feasible(r.best_layout, params);
    return r;
}

} // namespace pass
