#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cpss/shield.hpp"
#include "cpss/sim.hpp"
#include "cpss/trace.hpp"

// Evaluation harness: runs single episodes with or without the shield and
// sweeps the full scenario x regime grid with paired seeds. Shielded and
// unshielded runs of the same (scenario, regime, seed, episode) share the
// episode seed, so they face identical environment draws and their returns
// can be compared pairwise.
namespace cpss::harness {

using ActionPolicy = std::function<int(const sim::WorldState&)>;

struct ShieldSetup {
    double budget = 2.0;
    double epsilon = 0.01;
    shield::ModulationParams modulation{};
    double smoothing_rate = 0.1;
};

// Method-independent episode seed.
std::uint64_t episode_env_seed(std::uint64_t seed, std::uint64_t scenario_salt,
                               int regime_index, int episode_index);

trace::EpisodeLog run_episode(const ActionPolicy& policy, bool use_shield,
                              const sim::ScenarioConfig& cfg,
                              const sim::RegimeSchedule& schedule, const ShieldSetup& setup,
                              std::uint64_t env_seed, int episode_index);

// Streaming per-(cell, seed) accumulators; episode logs are dropped after
// they are folded in, so grid memory stays flat.
struct SeedStats {
    std::uint64_t seed = 0;
    int episodes = 0;
    long long steps = 0;
    int collisions = 0; // episodes ending in a collision or off the road
    double sum_episode_risk_frac = 0.0; // per-episode fraction of steps below risk_margin
    double sum_episode_min_distance = 0.0;
    long long interventions = 0;
    long long infeasible = 0;
    double sum_cum_cost = 0.0;
};

void accumulate(SeedStats& stats, const trace::EpisodeLog& log, double risk_margin);

struct CellResult {
    std::string scenario;
    std::string regime;
    std::string method;
    std::vector<SeedStats> seeds; // ordered as in GridSpec::seeds
};

struct GridResult {
    std::vector<CellResult> cells; // scenario-major, then regime, then method
    std::vector<trace::EpisodeLog> traced;
};

struct GridSpec {
    std::vector<std::string> scenarios;
    std::vector<std::string> regimes;
    std::vector<std::uint64_t> seeds;
    int episodes_per_seed = 200;
    int trace_seeds = 1;    // first N seeds keep their logs
    int trace_episodes = 60; // first M episodes per kept seed and method
    int jobs = 1;
    ShieldSetup setup;
    std::map<std::string, sim::ScenarioConfig> configs;  // by scenario name
    std::map<std::string, ActionPolicy> policies;        // by scenario name
};

// Runs the grid. on_episode, when set, sees every finished episode
// (serialized by a lock, order not deterministic across jobs); aggregates
// and traced logs are merged into deterministic slot order regardless of
// thread scheduling.
GridResult run_grid(const GridSpec& spec,
                    const std::function<void(const trace::EpisodeLog&)>& on_episode = {});

// Cross-seed view of one cell. Rates are means of per-seed rates; the
// spread is the population standard deviation across seeds.
struct CellSummary {
    std::string scenario;
    std::string regime;
    std::string method;
    int episodes = 0;
    long long steps = 0;
    double collision_rate = 0.0;
    double collision_rate_sd = 0.0;
    double proximity_risk_raw = 0.0;
    double proximity_risk_norm = 0.0; // raw / unshielded raw of the same cell
    double min_distance_mean = 0.0;
    double intervention_rate = 0.0;
    long long infeasibility_count = 0;
    double mean_cum_cost = 0.0;
};

std::vector<CellSummary> summarize_cells(const GridResult& result);

// Mean collision rate across the cells of one method; the grid-level
// headline number.
double grand_collision_rate(const std::vector<CellSummary>& cells, const std::string& method);

std::string render_cell_csv(const GridResult& result);
std::string render_per_seed_csv(const GridResult& result);

// One row of the per-seed CSV, as written by render_per_seed_csv.
struct PerSeedRow {
    std::string scenario;
    std::string regime;
    std::string method;
    std::uint64_t seed = 0;
    int episodes = 0;
    double collision_rate = 0.0;
    double proximity_risk_raw = 0.0;
    double proximity_risk_norm = 0.0;
    double min_distance_mean = 0.0;
    double intervention_rate = 0.0;
    long long infeasibility_count = 0;
    double mean_cum_cost = 0.0;
};

std::vector<PerSeedRow> parse_per_seed_csv(const std::string& path);

// Rebuilds cell summaries from per-seed rows; cells appear in row order.
std::vector<CellSummary> summarize_rows(const std::vector<PerSeedRow>& rows);

// Groups retained logs by cell and seed; keys are the trace file basenames
// ("<scenario>_<regime>_<method>_seed<seed>.trace"), in sorted order.
std::vector<std::pair<std::string, std::vector<trace::EpisodeLog>>> group_traces(
    const GridResult& result);

} // namespace cpss::harness
