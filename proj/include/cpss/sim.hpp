#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Kinematic traffic simulator with four scenario archetypes. Transitions
// are deterministic given (state, action); all environment randomness is
// keyed by (episode seed, step), so rollouts that share a seed draw the
// same spawns and regime schedule even after their trajectories diverge.
//
// Other vehicles commit their velocity for the upcoming step before it
// runs, and the step outcome is measured before any behavior update or
// spawn. The one-step cost predictor replays exactly that motion, so the
// predicted cost of the executed action always equals the realized cost.
namespace cpss::sim {

inline constexpr int kActionKeep = 0;
inline constexpr int kActionAccelerate = 1;
inline constexpr int kActionDecelerate = 2;
inline constexpr int kActionLaneLeft = 3;
inline constexpr int kActionLaneRight = 4;
inline constexpr int kActionCount = 5;

std::span<const int> all_actions();
std::string action_name(int action);

enum class Archetype { merge, highway, intersection, track };
enum class Regime { stationary, mild, average, high };

Archetype archetype_from_string(const std::string& name);
Regime regime_from_string(const std::string& name);
std::string to_string(Archetype a);
std::string to_string(Regime r);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Ramp vehicles carry the position at which they start merging; everyone
// else keeps kNoMerge.
inline constexpr double kNoMerge = -1.0e18;

// One vehicle. On the track archetype position is (arc length, lateral
// offset) in a curvilinear frame; elsewhere it is world (x, y) with lanes
// running along +x. lane_index -1 marks crossing traffic on the minor road.
struct VehicleState {
    Vec2 position;
    Vec2 velocity;
    int lane_index = 0;
    double length = 4.5;
    int target_lane = 0;
    double merge_at_x = kNoMerge;
    double cruise_speed = 0.0;
};

struct LaneGeometry {
    int lane_count = 3;
    double lane_width = 4.0;
    bool has_ramp = false;     // merge: acceleration lane at index lane_count
    double track_length = 0.0; // track: loop length, 0 elsewhere
    double half_width = 0.0;   // track: road half width
};

// All numeric knobs are config-exposed; default_scenario() fills in the
// per-archetype defaults.
struct ScenarioConfig {
    Archetype archetype = Archetype::highway;
    int lane_count = 3;
    double spawn_rate_base = 0.3; // expected vehicles per step at multiplier 1
    int horizon = 80;
    double collision_radius = 2.5;
    double safety_margin = 15.0;
    double risk_margin = 5.0; // near-miss threshold for the proximity-risk metric
    std::uint64_t seed = 0; // scenario salt mixed into episode seeds
    double dt = 0.5;
    double lane_width = 4.0;
    double v_max = 24.0;
    double accel = 2.5;
    double brake = 8.0;
    double lateral_speed = 4.0;
    double min_distance_cap = 100.0;
    double density_window = 50.0;
    int max_vehicles = 12;
    double collision_penalty = 2.0;
    double lateral_weight = 6.0;    // lateral meters weigh this much in the gap metric
    double lookahead_horizon = 4.0;    // seconds of closest-approach projection
    double spawn_guard_horizon = 4.0;  // seconds the spawn guard screens; shorter than
                                       // lookahead_horizon so conflicts spawn detectable-early
    double spawn_standoff = 28.0;
    double despawn_range = 260.0;
    // scripted behavior of other vehicles
    double other_lateral_speed = 2.0;
    double other_braking = 9.0;
    double other_accel = 1.5;
    double other_brake_headway = 5.0;
    double other_anticipation = 1.0; // extra headway demanded per m/s of closure
    // spawn geometry (longitudinal offsets relative to ego)
    double spawn_ahead_min = 45.0;
    double spawn_ahead_max = 110.0;
    double spawn_behind_min = 35.0;
    double spawn_behind_max = 75.0;
    double speed_ahead_min = 15.0;
    double speed_ahead_max = 21.0;
    double speed_behind_min = 12.0;
    double speed_behind_max = 15.0;
    double p_behind = 0.2;
    // merge archetype
    double p_ramp = 0.5;
    double ramp_speed_min = 13.0;
    double ramp_speed_max = 18.0;
    double merge_run_min = 25.0;
    double merge_run_max = 50.0;
    double merge_min_gap = 18.0; // destination-lane clearance required to begin merging
    // intersection archetype
    double cross_speed_min = 3.5;
    double cross_speed_max = 6.5;
    double cross_offset_min = 35.0;
    double cross_offset_max = 90.0;
    double cross_start_y = 40.0;
    double cross_line_spacing = 60.0; // crossing paths snap to this grid; 0 = continuous
    // track archetype
    double track_length = 1200.0;
    double track_curvature = 0.006; // peak centerline curvature, 1/m
    double track_period = 400.0;    // curvature wavelength, m
    double drift_gain = 0.3;        // seconds; lateral drift = gain * curvature * v^2

    void validate() const;
};

ScenarioConfig default_scenario(Archetype a);

// Spawn-rate multiplier schedule. The multiplier stays within
// [multiplier_min, multiplier_max] for every regime and step.
struct RegimeSchedule {
    Regime regime = Regime::stationary;
    double mild_period = 200.0;
    double mild_amplitude = 0.25;
    int average_block = 100;
    int high_block = 25;
    double high_jitter = 0.10;
    double multiplier_min = 0.25;
    double multiplier_max = 4.0;
};

struct WorldState {
    VehicleState ego;
    std::vector<VehicleState> others;
    LaneGeometry lanes;
    int time_step = 0;
    double regime_phase = 1.0; // multiplier governing the upcoming step
    bool collided = false;
    bool off_road = false;
    std::uint64_t episode_seed = 0;
};

struct StepOutcome {
    WorldState next_state;
    double reward = 0.0;
    double cost = 0.0;
    double min_distance = 0.0;
    double density = 0.0;
    bool done = false;
};

// Predicted one-step consequences of an action.
struct ActionForecast {
    double cost = 0.0;
    double reward = 0.0;
    double min_distance = 0.0;
};

// Environment draw for one potential spawn. Pure function of
// (config, multiplier, seed, step), exposed so coupling can be tested.
struct SpawnDraw {
    bool crosser = false;
    bool behind = false;
    bool ramp = false;
    int lane = 0;
    double offset = 0.0; // longitudinal offset from ego (signed by `behind`)
    double speed = 0.0;
    double merge_run = 0.0;
    bool from_above = false; // crossers: approach from +y
};

double regime_multiplier(const RegimeSchedule& s, std::uint64_t seed, int step);

// Linear ramp from 1 at distance 0 to 0 at the margin; 0 beyond it.
double proximity_cost(double min_distance, double safety_margin);

// Vehicles per 100 m within a closed ball of window_radius around ego.
double density_estimate(const WorldState& state, double window_radius);

// Cost-bearing gap: smallest anticipated separation between ego and any
// relevant vehicle over the lookahead horizon, with lateral separation
// weighted up; on the track archetype, the distance to the road boundary.
// Returns min_distance_cap on an empty road.
double cost_proxy_distance(const WorldState& state, const ScenarioConfig& cfg);

std::vector<SpawnDraw> spawn_draws_for_step(const ScenarioConfig& cfg, double multiplier,
                                            std::uint64_t seed, int step);

WorldState reset(const ScenarioConfig& cfg, const RegimeSchedule& schedule,
                 std::uint64_t seed);

StepOutcome step(const WorldState& state, int action, const ScenarioConfig& cfg,
                 const RegimeSchedule& schedule);

// One-step forecasts with other vehicles extrapolated at their committed
// velocities. Exact for the action that step() actually executes.
std::vector<ActionForecast> predict_outcomes(const WorldState& state,
                                             std::span<const int> action_set,
                                             const ScenarioConfig& cfg);

std::vector<double> predict_costs(const WorldState& state, std::span<const int> action_set,
                                  const ScenarioConfig& cfg);

} // namespace cpss::sim
