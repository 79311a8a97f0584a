#ifndef EVENTREADY_EVENT_SIM_HPP
#define EVENTREADY_EVENT_SIM_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "eventready/experiment.hpp"
#include "eventready/inequalities.hpp"

namespace eventready {

/// One Monte Carlo run: every trial emits one four-photon system; the
/// preselector gate opens (optionally thinned), the Bell-pair analyzer
/// outcome is drawn from the normalized pair distribution and each Bell
/// photon is then detected with probability eta.
struct TrialConfig {
    ExperimentConfig experiment;
    std::uint64_t n_trials = 1;
    std::uint64_t seed = 0;
    double preselector_thinning = 1.0;  // gate-open probability, default no thinning
};

/// Counts from a run.  Channel 0 is the analyzer's theta channel, channel 1
/// its perpendicular one; coincidences index [d1 channel][d2 channel].
struct CountTally {
    std::uint64_t n_emitted = 0;
    std::uint64_t gate_open = 0;
    std::array<std::array<std::uint64_t, 2>, 2> outcomes_emitted{};  // pre-detection
    std::array<std::array<std::uint64_t, 2>, 2> coincidences{};      // both photons seen
    std::array<std::uint64_t, 2> singles_d1{};
    std::array<std::uint64_t, 2> singles_d2{};

    /// Tallies merge by field-wise addition (chunked runs, any order).
    CountTally& merge(const CountTally& other);
};

CountTally simulate(const TrialConfig& config);

/// Count ratios over emitted systems (the loophole-free denominators), with
/// the primed settings mapped to the perpendicular analyzer channels:
/// a1 = theta1, a1' = theta1+90, a2 = theta2, a2' = theta2+90.
ChProbabilities proper_probabilities(const CountTally& tally);

/// The efficiency-independent coincidence ratio: the outcome's count over
/// the sum of the four coincidence counts.  outcome = 2*d1_channel + d2_channel.
double postselected_probability(const CountTally& tally, int outcome);

/// Empirical z-scores for the Hardy constraints identifiable from one tally,
/// matched by the tally's analyzer angles against the settings:
///   (theta1, theta2'): ratio1 target 1        (theta1', theta2): ratio2 target 1
///   (theta1', theta2'): zero target            (theta1, theta2): positivity
/// Ratio targets assume a unit-efficiency run.
struct HardyZScores {
    std::optional<double> ratio1;
    std::optional<double> ratio2;
    std::optional<double> zero;
    std::optional<double> positivity;
};
HardyZScores hardy_zscores(const CountTally& tally, const ExperimentConfig& run,
                           const HardySettings& settings);

/// sqrt(N p (1-p)) with p the empirical frequency.
double binomial_sigma(std::uint64_t trials, double p_hat);

}  // namespace eventready

#endif
