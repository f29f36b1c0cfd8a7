#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pass {

inline constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Keyed hash of a master seed and a sequence of indices. Used to give every
// (drop, particle, ...) its own stream independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return h;
}

// mt19937_64 has a fully specified output sequence; the uniform mapping is
// done by hand because std::uniform_real_distribution is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi].
    double uniform(double lo, double hi) {
        const double u = uniform01();
        const double v = lo + (hi - lo) * u;
        return v > hi ? hi : v;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace pass
