#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpss/harness.hpp"
#include "cpss/policy.hpp"
#include "cpss/sim.hpp"

// Run configuration: JSON file in, validated settings out. Unknown keys
// are rejected by name; missing keys fall back to the code defaults, and
// configs/default.json spells out every key explicitly.
namespace cpss::config {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifySettings {
    double gamma = 0.9;
    long long min_pairs = 100;
};

struct RunConfig {
    std::string out_dir = "out";
    int jobs = 4;
    std::vector<std::uint64_t> seeds = {101, 102, 103, 104, 105, 106, 107, 108, 109, 110};
    int episodes_per_seed = 200;
    int trace_seeds = 1;
    int trace_episodes = 120;
    std::vector<std::string> scenarios = {"merge", "highway", "intersection", "track"};
    std::vector<std::string> regimes = {"stationary", "mild", "average", "high"};
    harness::ShieldSetup shield;
    policy::TrainParams policy;
    VerifySettings verify;
    // Fully resolved per-scenario settings for every name in `scenarios`.
    std::map<std::string, sim::ScenarioConfig> scenario_configs;

    void validate() const;
};

RunConfig default_config();
RunConfig load_config(const std::string& path);
std::string render_config_json(const RunConfig& rc);

} // namespace cpss::config
