#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cpss/trace.hpp"

// Trace auditors for the shield's three guarantees plus the threshold
// arithmetic itself. Each auditor streams over episode logs and reports
// how many checks ran, how many failed, and the worst slack it saw.
// assumption_violations counts steps or episodes where a guarantee's
// premise did not hold (infeasible steps, realized cost diverging from
// the prediction); those are reported separately from violations.
namespace cpss::verifier {

struct GuaranteeReport {
    std::string id;
    std::string description;
    long long checked = 0;
    long long violations = 0;
    long long assumption_violations = 0;
    // Smallest margin by which a check passed; negative means a violation
    // of that magnitude.
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string counterexample; // first failure, empty when none

    bool passed() const { return violations == 0; }
};

// Per-step admissibility: on every non-infeasible step of a shielded
// episode, the predicted cost of the executed action stays within the
// effective threshold (tolerance 1e-12).
class AdmissibilityAuditor {
  public:
    explicit AdmissibilityAuditor(double tolerance = 1e-12);
    void consume(const trace::EpisodeLog& log); // shielded logs only
    GuaranteeReport report() const { return rep_; }

  private:
    double tol_;
    GuaranteeReport rep_;
};

// Cumulative envelope: realized cost matches the prediction step by step
// (exactly), and for feasible episodes the episode total stays within both
// the sum of thresholds and the budget (tolerance 1e-9).
class EnvelopeAuditor {
  public:
    explicit EnvelopeAuditor(double tolerance = 1e-9);
    void consume(const trace::EpisodeLog& log); // shielded logs only
    GuaranteeReport report() const { return rep_; }

  private:
    double tol_;
    GuaranteeReport rep_;
};

// Recomputes the threshold arithmetic of every logged step from the
// logged remaining budget, horizon, and modulation (tolerance 1e-12).
class ThresholdIdentityAuditor {
  public:
    explicit ThresholdIdentityAuditor(double tolerance = 1e-12);
    void consume(const trace::EpisodeLog& log); // shielded logs only
    GuaranteeReport report() const { return rep_; }

  private:
    double tol_;
    GuaranteeReport rep_;
};

// Coupled value gap: across shielded/unshielded episode pairs that share
// an environment seed, the mean discounted-return gap must stay within
// eta * dr / (1 - gamma) + 3 standard errors, where eta is the peak
// per-step intervention frequency and dr the largest one-step reward
// change an intervention caused.
class ValueGapAuditor {
  public:
    explicit ValueGapAuditor(double gamma = 0.9);
    void consume_pair(const trace::EpisodeLog& shielded, const trace::EpisodeLog& unshielded);
    GuaranteeReport report() const;
    long long pairs() const { return n_; }

  private:
    double gamma_;
    long long n_ = 0;
    double sum_gap_ = 0.0;
    double sumsq_gap_ = 0.0;
    double dr_max_ = 0.0;
    std::vector<long long> interventions_at_; // indexed by step
};

GuaranteeReport verify_admissibility(std::span<const trace::EpisodeLog> logs,
                                   double tolerance = 1e-12);
GuaranteeReport verify_envelope(std::span<const trace::EpisodeLog> logs, double tolerance = 1e-9);
GuaranteeReport verify_threshold_identity(std::span<const trace::EpisodeLog> logs,
                                        double tolerance = 1e-12);
// Pairs episodes by (scenario, regime, seed, episode index).
GuaranteeReport verify_value_gap(std::span<const trace::EpisodeLog> shielded,
                               std::span<const trace::EpisodeLog> unshielded,
                               double gamma = 0.9);

struct VerificationRun {
    std::vector<GuaranteeReport> reports; // admissibility, envelope, identity, value gap
    long long shielded_episodes = 0;
    long long unshielded_episodes = 0;
    long long shielded_steps = 0;
    long long pairs = 0;

    // Guarantee verdicts only. Premise violations (infeasible steps,
    // realized-cost divergence) are reported by each auditor but do not
    // refute the conditional guarantees.
    bool all_passed() const {
        for (const auto& r : reports)
            if (r.violations > 0) return false;
        return true;
    }

    long long assumption_violations() const {
        long long n = 0;
        for (const auto& r : reports) n += r.assumption_violations;
        return n;
    }
};

// Reads every *.trace file in dir (sorted by name) and runs all four
// auditors. Throws std::runtime_error when the directory has no trace
// files or a file cannot be parsed.
VerificationRun verify_trace_dir(const std::string& dir, double gamma);

std::string format_report(const GuaranteeReport& r);

} // namespace cpss::verifier
