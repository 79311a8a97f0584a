#include "eventready/event_sim.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "eventready/core_model.hpp"
#include "eventready/rng.hpp"

namespace eventready {

namespace {

constexpr std::uint64_t kChunkTrials = 1u << 16;

struct OutcomeSampler {
    // cumulative distribution over the four analyzer outcomes
    double cdf[4];

    explicit OutcomeSampler(const ExperimentConfig& experiment) {
        const auto dist = bell_pair_outcome_distribution(
            experiment.bs.rho(), experiment.visibility_value(),
            experiment.theta1, experiment.theta2);
        const double flat[4] = {dist.p[0][0], dist.p[0][1], dist.p[1][0], dist.p[1][1]};
        const double total = flat[0] + flat[1] + flat[2] + flat[3];  // 1 up to rounding
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
            acc += flat[k] / total;
            cdf[k] = acc;
        }
        cdf[3] = 1.0;
    }

    int draw(double u) const {
        for (int k = 0; k < 3; ++k)
            if (u < cdf[k]) return k;
        return 3;
    }
};

void run_chunk(const TrialConfig& config, const OutcomeSampler& sampler,
               std::uint64_t chunk, std::uint64_t trials, CountTally& tally) {
    std::mt19937_64 rng(derive_chunk_seed(config.seed, chunk));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double eta = config.experiment.eta;
    const bool thinned = config.preselector_thinning < 1.0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        tally.n_emitted += 1;
        if (thinned && uniform(rng) >= config.preselector_thinning) continue;
        tally.gate_open += 1;

        const int outcome = sampler.draw(uniform(rng));
        const int d1_channel = outcome >> 1;
        const int d2_channel = outcome & 1;
        tally.outcomes_emitted[d1_channel][d2_channel] += 1;

        const bool d1_fired = uniform(rng) < eta;
        const bool d2_fired = uniform(rng) < eta;
        if (d1_fired) tally.singles_d1[d1_channel] += 1;
        if (d2_fired) tally.singles_d2[d2_channel] += 1;
        if (d1_fired && d2_fired) tally.coincidences[d1_channel][d2_channel] += 1;
    }
}

}  // namespace

CountTally& CountTally::merge(const CountTally& other) {
    n_emitted += other.n_emitted;
    gate_open += other.gate_open;
    for (int i = 0; i < 2; ++i) {
        singles_d1[i] += other.singles_d1[i];
        singles_d2[i] += other.singles_d2[i];
        for (int j = 0; j < 2; ++j) {
            outcomes_emitted[i][j] += other.outcomes_emitted[i][j];
            coincidences[i][j] += other.coincidences[i][j];
        }
    }
    return *this;
}

CountTally simulate(const TrialConfig& config) {
    if (config.n_trials < 1)
        throw std::invalid_argument("simulate: need at least one trial");
    if (!(config.preselector_thinning >= 0.0 && config.preselector_thinning <= 1.0))
        throw std::invalid_argument("simulate: thinning must lie in [0, 1]");

    const OutcomeSampler sampler(config.experiment);
    CountTally total;
    std::uint64_t done = 0, chunk = 0;
    while (done < config.n_trials) {
        const std::uint64_t trials = std::min<std::uint64_t>(kChunkTrials, config.n_trials - done);
        CountTally part;
        run_chunk(config, sampler, chunk, trials, part);
        total.merge(part);
        done += trials;
        chunk += 1;
    }
    return total;
}

ChProbabilities proper_probabilities(const CountTally& tally) {
    if (tally.n_emitted == 0)
        throw std::invalid_argument("proper_probabilities: empty tally");
    const double n = static_cast<double>(tally.n_emitted);
    ChProbabilities p;
    p.p11 = tally.coincidences[0][0] / n;
    p.p12 = tally.coincidences[0][1] / n;
    p.p21 = tally.coincidences[1][0] / n;
    p.p22 = tally.coincidences[1][1] / n;
    p.s1 = tally.singles_d1[1] / n;  // a1' = perpendicular channel of D1
    p.s2 = tally.singles_d2[0] / n;  // a2  = theta channel of D2
    const double both = static_cast<double>(tally.coincidences[0][0] + tally.coincidences[0][1] +
                                            tally.coincidences[1][0] + tally.coincidences[1][1]);
    p.pinf = both / n;
    p.p1inf = (tally.coincidences[1][0] + tally.coincidences[1][1]) / n;
    p.pinf2 = (tally.coincidences[0][0] + tally.coincidences[1][0]) / n;
    return p;
}

double postselected_probability(const CountTally& tally, int outcome) {
    if (outcome < 0 || outcome > 3)
        throw std::invalid_argument("postselected_probability: outcome index must be 0..3");
    const std::uint64_t sum = tally.coincidences[0][0] + tally.coincidences[0][1] +
                              tally.coincidences[1][0] + tally.coincidences[1][1];
    if (sum == 0)
        throw std::domain_error("postselected_probability: no coincidences recorded");
    return static_cast<double>(tally.coincidences[outcome >> 1][outcome & 1]) /
           static_cast<double>(sum);
}

double binomial_sigma(std::uint64_t trials, double p_hat) {
    return std::sqrt(static_cast<double>(trials) * p_hat * (1.0 - p_hat));
}

namespace {

bool same_orientation(Angle a, Angle b) {
    return std::abs(a.radians() - b.radians()) < 1e-9;
}

// z-score of an observed count against expectation target*trials
std::optional<double> count_zscore(std::uint64_t observed, std::uint64_t trials, double target) {
    if (trials == 0) return std::nullopt;
    const double p_hat = static_cast<double>(observed) / static_cast<double>(trials);
    const double sigma = binomial_sigma(trials, p_hat);
    const double deviation = static_cast<double>(observed) - target * static_cast<double>(trials);
    if (sigma == 0.0) {
        if (deviation == 0.0) return 0.0;
        return deviation > 0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
    }
    return deviation / sigma;
}

}  // namespace

HardyZScores hardy_zscores(const CountTally& tally, const ExperimentConfig& run,
                           const HardySettings& settings) {
    if (tally.gate_open == 0)
        throw std::invalid_argument("hardy_zscores: tally carries no counts");

    HardyZScores z;
    const Angle a1 = run.theta1, a2 = run.theta2;
    if (same_orientation(a1, settings.theta1) && same_orientation(a2, settings.theta2p)) {
        // P(t1, t2')/P(t1) = 1: of the D1 theta-channel singles, how many
        // came with a D2 theta-channel partner.
        z.ratio1 = count_zscore(tally.coincidences[0][0], tally.singles_d1[0], 1.0);
    }
    if (same_orientation(a1, settings.theta1p) && same_orientation(a2, settings.theta2)) {
        z.ratio2 = count_zscore(tally.coincidences[0][0], tally.singles_d2[0], 1.0);
    }
    if (same_orientation(a1, settings.theta1p) && same_orientation(a2, settings.theta2p)) {
        z.zero = count_zscore(tally.coincidences[0][0], tally.n_emitted, 0.0);
    }
    if (same_orientation(a1, settings.theta1) && same_orientation(a2, settings.theta2)) {
        z.positivity = count_zscore(tally.coincidences[0][0], tally.n_emitted, 0.0);
    }
    return z;
}

}  // namespace eventready
