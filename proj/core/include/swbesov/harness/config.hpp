#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace swbesov::harness {

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{
        "partition_check", "norm_suite",       "linear_damping",   "linear_smoothing",
        "transport_estimate", "heat_estimate", "variable_heat",    "nonlinear_global",
        "nonlinear_local",  "stability",       "scaling_check",    "convergence_sweep"};
    return names;
}

// JSON key/value tree with dotted-path access. Missing keys fall back to the given default.
class Config {
public:
    Config() = default;
    explicit Config(nlohmann::json j);
    static Config load(const std::string& path);

    // "a.b.c=value"; value is parsed as JSON when possible, otherwise taken as a string.
    void set(const std::string& assignment);
    void set(const std::string& path, nlohmann::json value);

    bool has(const std::string& path) const;
    double number(const std::string& path, double fallback) const;
    int integer(const std::string& path, int fallback) const;
    bool flag(const std::string& path, bool fallback) const;
    std::string text(const std::string& path, const std::string& fallback) const;
    std::vector<double> numbers(const std::string& path, const std::vector<double>& fallback) const;
    std::vector<int> integers(const std::string& path, const std::vector<int>& fallback) const;

    std::string scenario() const;
    std::uint64_t seed() const;
    const nlohmann::json& json() const { return j_; }
    // Sorted-key compact dump; the input to the config hash.
    std::string canonical() const { return j_.dump(); }

private:
    const nlohmann::json* find(const std::string& path) const;
    nlohmann::json j_ = nlohmann::json::object();
};

}  // namespace swbesov::harness
