#pragma once

// Flat "key = value" experiment configuration.
//
//   # comment
//   L_values       = 5, 10, 15, 20
//   M_values       = 2, 10
//   carrier_freq   = 28 GHz        (Hz, kHz, MHz, GHz; unit required)
//   tx_power       = 1 mW          (W, mW, dBm; unit required)
//   noise_power    = -90 dBm       (W, mW, dBm; unit required)
//   min_spacing    = 0.5 lambda    (m or lambda)
//
// Key names mirror ExperimentConfig / PsoConfig / SystemSpec fields. Unknown
// keys and duplicate keys are errors.

#include "pass/errors.hpp"
#include "pass/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pass {

class ConfigError : public DomainError {
public:
    explicit ConfigError(const std::string& what) : DomainError(what) {}
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(',');
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

// Leading number and the trimmed remainder (the unit).
inline std::pair<double, std::string_view> split_quantity(std::string_view key, std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || !std::isfinite(v))
        throw ConfigError("config key '" + std::string(key) + "': expected a number, got '" + std::string(s) + "'");
    return {v, trim(std::string_view(res.ptr, static_cast<std::size_t>(s.data() + s.size() - res.ptr)))};
}

inline double parse_number(std::string_view key, std::string_view s) {
    const auto [v, unit] = split_quantity(key, s);
    if (!unit.empty()) throw ConfigError("config key '" + std::string(key) + "': unexpected suffix '" + std::string(unit) + "'");
    return v;
}

inline std::int64_t parse_integer(std::string_view key, std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError("config key '" + std::string(key) + "': expected an integer, got '" + std::string(s) + "'");
    return v;
}

inline std::uint64_t parse_unsigned(std::string_view key, std::string_view s) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError("config key '" + std::string(key) + "': expected an unsigned integer, got '" + std::string(s) + "'");
    return v;
}

} // namespace detail

using KeyValueDocument = std::map<std::string, std::string, std::less<>>;

inline KeyValueDocument parse_key_values(std::istream& is) {
    KeyValueDocument doc;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view s = line;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = detail::trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key(detail::trim(s.substr(0, eq)));
        const std::string value(detail::trim(s.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        if (!doc.emplace(key, value).second) throw ConfigError("config key '" + key + "' given twice");
    }
    return doc;
}

// Power to watts. Accepts W, mW and dBm.
inline double parse_power(std::string_view key, std::string_view s) {
    const auto [v, unit] = detail::split_quantity(key, s);
    if (unit == "W") return v;
    if (unit == "mW") return v * 1e-3;
    if (unit == "dBm") return std::pow(10.0, v / 10.0) * 1e-3;
    throw ConfigError("config key '" + std::string(key) + "': power needs a unit of W, mW or dBm");
}

inline double parse_frequency(std::string_view key, std::string_view s) {
    const auto [v, unit] = detail::split_quantity(key, s);
    if (unit == "Hz") return v;
    if (unit == "kHz") return v * 1e3;
    if (unit == "MHz") return v * 1e6;
    if (unit == "GHz") return v * 1e9;
    throw ConfigError("config key '" + std::string(key) + "': frequency needs a unit of Hz, kHz, MHz or GHz");
}

inline ExperimentConfig experiment_config_from(const KeyValueDocument& doc) {
    using namespace detail;
    ExperimentConfig c;
    std::optional<double> spacing_lambdas;
    for (const auto& [key, value] : doc) {
        if (key == "L_values") {
            c.L_values.clear();
            for (auto item : split_list(value)) c.L_values.push_back(parse_number(key, item));
        } else if (key == "M_values") {
            c.M_values.clear();
            for (auto item : split_list(value)) c.M_values.push_back(static_cast<int>(parse_integer(key, item)));
        } else if (key == "num_drops") {
            c.num_drops = static_cast<int>(parse_integer(key, value));
        } else if (key == "num_users") {
            c.num_users = static_cast<int>(parse_integer(key, value));
        } else if (key == "master_seed") {
            c.master_seed = parse_unsigned(key, value);
        } else if (key == "methods") {
            c.methods.clear();
            for (auto item : split_list(value)) {
                const auto m = parse_method(item);
                if (!m) throw ConfigError("config key 'methods': unknown method '" + std::string(item) + "'");
                c.methods.push_back(*m);
            }
        } else if (key == "grid_step") {
            c.grid_step = parse_number(key, value);
        } else if (key == "workers") {
            c.workers = static_cast<unsigned>(parse_unsigned(key, value));
        } else if (key == "swarm_size") {
            c.pso.swarm_size = static_cast<int>(parse_integer(key, value));
        } else if (key == "max_iters") {
            c.pso.max_iters = static_cast<int>(parse_integer(key, value));
        } else if (key == "c1") {
            c.pso.c1 = parse_number(key, value);
        } else if (key == "c2") {
            c.pso.c2 = parse_number(key, value);
        } else if (key == "inertia_max") {
            c.pso.inertia_max = parse_number(key, value);
        } else if (key == "inertia_min") {
            c.pso.inertia_min = parse_number(key, value);
        } else if (key == "penalty") {
            c.pso.penalty = parse_number(key, value);
        } else if (key == "velocity_init_span") {
            c.pso.velocity_init_span = parse_number(key, value);
        } else if (key == "height") {
            c.system.height = parse_number(key, value);
        } else if (key == "carrier_freq") {
            c.system.carrier_freq = parse_frequency(key, value);
        } else if (key == "refractive_index") {
            c.system.refractive_index = parse_number(key, value);
        } else if (key == "tx_power") {
            const auto [v, unit] = split_quantity(key, value);
            if (unit == "dBm") throw ConfigError("config key 'tx_power': use W or mW");
            c.system.tx_power = parse_power(key, value);
        } else if (key == "noise_power") {
            c.system.noise_power = parse_power(key, value);
        } else if (key == "min_spacing") {
            const auto [v, unit] = split_quantity(key, value);
            if (unit == "lambda") {
                spacing_lambdas = v;
            } else if (unit == "m" || unit.empty()) {
                c.system.min_spacing = v;
            } else {
                throw ConfigError("config key 'min_spacing': unit must be m or lambda");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (spacing_lambdas) c.system.min_spacing = *spacing_lambdas * kSpeedOfLight / c.system.carrier_freq;
    validate(c);
    // Surfaces physical-parameter errors at load time rather than mid-sweep.
    SystemSpec probe = c.system;
    probe.area_side = c.L_values.front();
    probe.num_antennas = c.M_values.front();
    (void)SystemParams(probe);
    return c;
}

} // namespace pass
