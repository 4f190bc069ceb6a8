#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Episode logs and their on-disk text form. One file holds the episodes
// of a single (scenario, regime, method, seed) cell. Floats are written
// with 17 significant digits so a read-back reproduces every double
// bit-for-bit, which lets auditors recompute identities at tight
// tolerances.
namespace cpss::trace {

struct StepRecord {
    int step = 0;
    std::uint64_t state_digest = 0; // hash of the discretized decision state
    int proposed = 0;
    int executed = 0;
    bool intervened = false;
    bool infeasible = false;
    double threshold = 0.0;         // effective threshold at decision time
    double threshold_budget = 0.0;  // threshold before context modulation
    double modulation = 1.0;
    double remaining_before = 0.0;  // budget remaining at decision time
    double predicted_cost_proposed = 0.0;
    double predicted_cost_executed = 0.0;
    double realized_cost = 0.0;
    double reward = 0.0;
    double reward_proposed = 0.0;   // one-step counterfactual for the proposed action
    double min_distance = 0.0;
    double density = 0.0;           // decision-time density
};

struct EpisodeLog {
    std::string scenario;
    std::string regime;
    std::string method; // "shielded" or "unshielded"
    std::uint64_t seed = 0;
    int episode_index = 0;
    double budget_total = 0.0;
    double epsilon = 0.0;
    int horizon = 0;
    bool collided = false;
    bool off_road = false;
    std::vector<StepRecord> steps;
};

std::string format_episode(const EpisodeLog& log);

void write_episodes(const std::string& path, std::span<const EpisodeLog> logs);
std::vector<EpisodeLog> read_episodes(const std::string& path);

} // namespace cpss::trace
