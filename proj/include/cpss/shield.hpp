#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

// Runtime safety shield. A cumulative cost budget is projected onto each
// step as a threshold; proposed actions whose predicted one-step cost
// exceeds the threshold are replaced by the cheapest available action.
// Everything in this namespace is a pure function of its arguments.
namespace cpss::shield {

// Remaining-budget bookkeeping for one episode.
// Invariants: 0 <= consumed; 0 <= step_index <= horizon; epsilon > 0.
struct BudgetState {
    double budget_total = 0.0;
    double consumed = 0.0;
    int horizon = 0;
    int step_index = 0;
    double epsilon = 0.01;
};

// Traffic context at decision time. deviation == |density - density_smoothed|.
struct ContextSignal {
    double density = 0.0;
    double density_smoothed = 0.0;
    double deviation = 0.0;
    double smoothing_rate = 0.1;
};

// Parameters of the context modulation factor g = max(g_min, 1/(1 + a*d + b*dev)).
struct ModulationParams {
    double alpha = 0.5;
    double beta = 1.0;
    double g_min = 0.1;
};

struct ShieldDecision {
    int proposed_action = 0;
    int executed_action = 0;
    bool intervened = false;
    double threshold = 0.0;        // effective per-step threshold tau
    double threshold_budget = 0.0; // budget projection before modulation
    double modulation = 1.0;       // context factor g, in (0, 1]
    double predicted_cost_proposed = 0.0;
    double predicted_cost_executed = 0.0;
    bool infeasible = false;       // no action met the threshold
};

// Exponential smoothing of the density signal. The first observation seeds
// the average, so deviation starts at zero.
class ContextTracker {
  public:
    explicit ContextTracker(double smoothing_rate = 0.1);
    ContextSignal observe(double density);

  private:
    double rate_;
    double smoothed_ = 0.0;
    bool primed_ = false;
};

// Remaining budget spread over the remaining steps:
//   max(0, budget_total - consumed) / (horizon - step_index + epsilon).
// Returns 0 once the budget is exhausted.
double project_threshold(const BudgetState& b);

// Context factor in [g_min, 1], nonincreasing in density and deviation.
double context_modulation(const ContextSignal& ctx, const ModulationParams& p);

// project_threshold(b) * context_modulation(ctx, p).
double effective_threshold(const BudgetState& b, const ContextSignal& ctx,
                           const ModulationParams& p);

// Cheapest action in action_set; ties go to the lowest action id.
// .second reports whether that cheapest action meets the threshold.
std::pair<int, bool> select_fallback(std::span<const int> action_set,
                                     const std::function<double(int)>& cost_predictor,
                                     double threshold);

// One shield decision: pass the proposed action through when its predicted
// cost meets the effective threshold, otherwise fall back to the cheapest
// action. If even that exceeds the threshold, the step is flagged
// infeasible and the cheapest action is executed anyway.
ShieldDecision shield_step(const BudgetState& b, const ContextSignal& ctx,
                           const ModulationParams& p, int proposed_action,
                           const std::function<double(int)>& cost_predictor,
                           std::span<const int> action_set);

// Accounting after execution: consumed += realized_cost, step_index += 1.
// Throws if the episode already ran its full horizon.
BudgetState update_budget(const BudgetState& b, double realized_cost);

} // namespace cpss::shield
