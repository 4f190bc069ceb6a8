#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cpss/sim.hpp"

namespace cpss::policy {

inline constexpr int kContinuousBins = 5;
inline constexpr int kFeatureCount = 5;

// Maps a world state to a small discrete id via fixed per-feature bins.
// The bin layout depends only on the scenario configuration, so tables
// trained and loaded with the same configuration always agree.
class Discretizer {
public:
    explicit Discretizer(const sim::ScenarioConfig& cfg);

    int state_count() const { return state_count_; }
    std::array<int, kFeatureCount> shape() const { return shape_; }
    std::array<int, kFeatureCount> bins(const sim::WorldState& ws) const;
    int state_id(const sim::WorldState& ws) const;

private:
    sim::ScenarioConfig cfg_;
    std::array<int, kFeatureCount> shape_{};
    int state_count_ = 0;
};

struct QTable {
    std::uint32_t n_states = 0;
    std::uint32_t n_actions = 0;
    std::vector<double> values; // row-major [state][action]

    double at(int state, int action) const;
    double& at(int state, int action);
    // Highest value wins; equal values resolve to the lowest action id.
    int greedy_action(int state) const;
};

struct TrainParams {
    double learning_rate = 0.1;
    double discount = 0.9;
    double exploration_start = 0.1;
    double exploration_end = 0.01;
    int train_episodes = 240;
    std::uint64_t train_seed = 7;
};

QTable train_policy(const sim::ScenarioConfig& cfg, const sim::RegimeSchedule& schedule,
                    const TrainParams& params);

std::function<int(const sim::WorldState&)> make_greedy(const QTable& table,
                                                       const Discretizer& disc);
// Accelerates whenever below the speed cap; a deliberately unsafe baseline.
std::function<int(const sim::WorldState&)> make_scripted_aggressive(double v_max);

void save_qtable(const QTable& table, const Discretizer& disc, const std::string& path);
QTable load_qtable(const std::string& path, const Discretizer& disc);

} // namespace cpss::policy
