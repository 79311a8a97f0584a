// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit code is the failure count.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "eventready/core_model.hpp"
#include "eventready/event_sim.hpp"
#include "eventready/fock_oracle.hpp"
#include "eventready/inequalities.hpp"
#include "eventready/optimizer.hpp"
#include "support.hpp"

using namespace eventready;
using eventready::testing::kPi;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

void criterion_1_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto config = testing::random_config(rng);
        worst = std::max(worst, std::abs(fourfold_probability(config) -
                                         fock::fourfold_expectation(config)));
    }
    const double elapsed = seconds_since(start);
    report(1, worst < 1e-12 && elapsed < 10.0, "oracle equivalence on 1000 random configs",
           fmt("max |delta| = %.3e, %.2f s", worst, elapsed));
}

void criterion_2_symmetric_reduction() {
    std::mt19937_64 rng(2025);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    const auto half = BeamSplitter::from_reflectivity(0.5);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Angle t1(angle(rng)), t2(angle(rng)), t1p(angle(rng)), t2p(angle(rng));
        const auto config = ExperimentConfig::with_visibility(half, 1.0, 0.0, t1, t2, t1p, t2p, 1.0);
        worst = std::max(worst, std::abs(fourfold_probability(config) -
                                         symmetric_probability(t1p, t2p, t1, t2)));
    }
    report(2, worst < 1e-12, "symmetric-splitter reduction on 10^4 angle quadruples",
           fmt("max |delta| = %.3e", worst));
}

void criterion_3_symmetric_threshold() {
    const auto start = std::chrono::steady_clock::now();
    const auto result = minimize_threshold(1.0, 1.0);
    const double elapsed = seconds_since(start);
    const double target = 2.0 * (std::sqrt(2.0) - 1.0);
    const bool pass = result.eta_min && std::abs(*result.eta_min - target) <= 1e-3 &&
                      elapsed < 60.0;
    report(3, pass, "eta_min(v=1, rho=1) = 2(sqrt(2)-1) +- 1e-3",
           result.eta_min ? fmt("eta_min = %.7f, target %.7f, %.2f s", *result.eta_min, target, elapsed)
                          : std::string("no violation found"));
}

void criterion_4_weak_entanglement_threshold() {
    const auto start = std::chrono::steady_clock::now();
    const auto result = minimize_threshold(1.0, 0.01);
    const double elapsed = seconds_since(start);
    const bool pass = result.eta_min && *result.eta_min > 0.666 && *result.eta_min < 0.680 &&
                      elapsed < 60.0;
    report(4, pass, "eta_min(v=1, rho=0.01) inside (0.666, 0.680)",
           result.eta_min ? fmt("eta_min = %.7f, %.2f s", *result.eta_min, elapsed)
                          : std::string("no violation found"));
}

void criterion_5_tradeoff_point() {
    const auto asym = minimize_threshold(0.7, 0.2 / 0.8);
    const auto sym = minimize_threshold(1.0, 1.0);
    const bool pass = asym.eta_min && sym.eta_min && *asym.eta_min < *sym.eta_min;
    report(5, pass, "eta_min(v=0.7, R=0.2) < eta_min(v=1.0, R=0.5)",
           asym.eta_min && sym.eta_min
               ? fmt("%.6f < %.6f", *asym.eta_min, *sym.eta_min)
               : std::string("missing threshold"));
}

void criterion_6_monotone_surface() {
    const auto start = std::chrono::steady_clock::now();
    const auto v_grid = std::array{0.6, 0.7, 0.8, 0.9, 1.0};
    const auto rho_grid = std::array{0.1, 0.325, 0.55, 0.775, 1.0};
    const auto rows = sweep_surface(v_grid, rho_grid);
    const double elapsed = seconds_since(start);

    auto eta_at = [&](std::size_t vi, std::size_t ri) {
        const auto& eta = rows[vi * rho_grid.size() + ri].eta_min;
        return eta ? *eta : std::numeric_limits<double>::infinity();
    };
    bool monotone = true;
    for (std::size_t ri = 0; ri < rho_grid.size(); ++ri)
        for (std::size_t vi = 0; vi + 1 < v_grid.size(); ++vi)
            if (eta_at(vi + 1, ri) > eta_at(vi, ri) + 1e-9) monotone = false;
    for (std::size_t vi = 0; vi < v_grid.size(); ++vi)
        for (std::size_t ri = 0; ri + 1 < rho_grid.size(); ++ri)
            if (eta_at(vi, ri + 1) < eta_at(vi, ri) - 1e-9) monotone = false;
    report(6, monotone && elapsed < 600.0,
           "5x5 surface monotone: non-increasing in v, non-decreasing in rho",
           fmt("corners eta(0.6,0.1) = %.4f, eta(1.0,1.0) = %.4f, %.2f s",
               eta_at(0, 0), eta_at(4, 4), elapsed));
}

void criterion_7_classical_bound() {
    bool pass = true;
    double low = 0.0, high = -1.0;
    auto table_for = [](int mask) {
        ChProbabilities p;
        const bool d1a = mask & 1, d1ap = mask & 2, d2a = mask & 4, d2ap = mask & 8;
        p.p11 = d1a && d2a;
        p.p12 = d1a && d2ap;
        p.p21 = d1ap && d2a;
        p.p22 = d1ap && d2ap;
        p.s1 = d1ap;
        p.s2 = d2a;
        return p;
    };
    for (int mask = 0; mask < 16; ++mask) {
        const double value = ch_loopholefree(table_for(mask));
        low = std::min(low, value);
        high = std::max(high, value);
        if (value < -1.0 - 1e-15 || value > 1e-15) pass = false;
    }
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        std::array<double, 16> w;
        double total = 0.0;
        for (auto& x : w) { x = weight(rng); total += x; }
        ChProbabilities mix{};
        for (int mask = 0; mask < 16; ++mask) {
            const auto p = table_for(mask);
            const double f = w[mask] / total;
            mix.p11 += f * p.p11; mix.p12 += f * p.p12;
            mix.p21 += f * p.p21; mix.p22 += f * p.p22;
            mix.s1 += f * p.s1;   mix.s2 += f * p.s2;
        }
        const double value = ch_loopholefree(mix);
        low = std::min(low, value);
        high = std::max(high, value);
        if (value < -1.0 - 1e-15 || value > 1e-15) pass = false;
    }
    report(7, pass, "classical CH bound over strategies and 10^4 mixtures",
           fmt("range [%.6f, %.3e]", low, high));
}

void criterion_8_outcome_normalization() {
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> log_rho(-2.0, 1.0);
    std::uniform_real_distribution<double> vis(0.0, 1.0);
    std::uniform_real_distribution<double> effs(0.05, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double rho = std::pow(10.0, log_rho(rng));
        const double eta = effs(rng);
        const Angle t1(angle(rng)), t2(angle(rng));
        const auto dist = bell_pair_outcome_distribution(rho, vis(rng), t1, t2);
        worst = std::max(worst, std::abs(eta * eta * dist.sum() - eta * eta));
    }
    report(8, worst < 1e-12, "four-outcome bell pair sum equals eta^2 on 10^4 draws",
           fmt("max |delta| = %.3e", worst));
}

void criterion_9_monte_carlo_convergence() {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t n = 1000000;
    const double rho = 0.25;
    const double t1 = 10.0 * kPi / 180.0, t2 = 55.0 * kPi / 180.0;
    int good_runs = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        TrialConfig config;
        config.experiment = ExperimentConfig::with_visibility(
            BeamSplitter::from_reflectivity(0.2), 1.0, 0.0, Angle(t1), Angle(t2),
            Angle::from_degrees(90), Angle::from_degrees(0), 1.0);
        config.n_trials = n;
        config.seed = seed;
        const auto p = proper_probabilities(simulate(config));
        const std::array<std::pair<double, double>, 6> entries = {{
            {p.p11, pair_p(rho, 1.0, t1, t2)},
            {p.p12, pair_p(rho, 1.0, t1, t2 + kPi / 2)},
            {p.p21, pair_p(rho, 1.0, t1 + kPi / 2, t2)},
            {p.p22, pair_p(rho, 1.0, t1 + kPi / 2, t2 + kPi / 2)},
            {p.s1, singles_p1(rho, t1 + kPi / 2)},
            {p.s2, singles_p2(rho, t2)},
        }};
        bool all_within = true;
        for (const auto& [got, expected] : entries) {
            const double sigma = binomial_sigma(n, got) / static_cast<double>(n);
            if (std::abs(got - expected) >= 4.0 * std::max(sigma, 1e-9)) all_within = false;
        }
        if (all_within) ++good_runs;
    }
    const double elapsed = seconds_since(start);
    report(9, good_runs >= 19 && elapsed < 120.0,
           "eta=1, n=10^6: probabilities within 4 sigma in >= 19/20 seeded runs",
           fmt("%d/20 runs clean, %.2f s", good_runs, elapsed));
}

void criterion_10_loophole_demonstration() {
    const std::uint64_t n = 1000000;
    auto run_at = [&](double eta, std::uint64_t seed) {
        TrialConfig config;
        config.experiment = ExperimentConfig::with_visibility(
            BeamSplitter::from_reflectivity(0.5), 1.0, 0.0, Angle::from_degrees(0),
            Angle::from_degrees(45), Angle::from_degrees(90), Angle::from_degrees(0), eta);
        config.n_trials = n;
        config.seed = seed;
        return simulate(config);
    };
    const auto full = run_at(1.0, 77);
    const auto starved = run_at(0.1, 78);

    bool postselected_stable = true;
    double worst_z = 0.0;
    for (int outcome = 0; outcome < 4; ++outcome) {
        const double p_full = postselected_probability(full, outcome);
        const double p_starved = postselected_probability(starved, outcome);
        const std::uint64_t n_full = full.coincidences[0][0] + full.coincidences[0][1] +
                                     full.coincidences[1][0] + full.coincidences[1][1];
        const std::uint64_t n_starved = starved.coincidences[0][0] + starved.coincidences[0][1] +
                                        starved.coincidences[1][0] + starved.coincidences[1][1];
        const double sigma = std::hypot(binomial_sigma(n_full, p_full) / n_full,
                                        binomial_sigma(n_starved, p_starved) / n_starved);
        const double z = std::abs(p_full - p_starved) / sigma;
        worst_z = std::max(worst_z, z);
        if (z >= 3.0) postselected_stable = false;
    }
    const double singles_rate = static_cast<double>(starved.singles_d1[0]);
    const double coincidence_rate = static_cast<double>(starved.coincidences[0][0]);
    const double ratio = singles_rate / coincidence_rate;
    report(10, postselected_stable && ratio > 10.0,
           "eta=0.1 postselected ratios stable while singles/coincidence > 10",
           fmt("worst |z| = %.2f, singles/coincidence = %.1f", worst_z, ratio));
}

void criterion_11_hardy() {
    const auto symmetric = hardy_search(0.5, 1.0, 1e-6);
    const bool found_symmetric = symmetric && hardy_check(*symmetric, 1.0).violating;

    const bool none_without_interference =
        !hardy_search(0.5, 0.0, 1e-6) && !hardy_search(0.2, 0.0, 1e-6);

    const auto low = hardy_search(0.1, 1.0, 1e-6);
    const auto high = hardy_search(0.4, 1.0, 1e-6);
    bool ordered = false;
    double threshold_low = -1.0, threshold_high = -1.0;
    if (low && high) {
        const auto vt_low = hardy_visibility_threshold(*low);
        const auto vt_high = hardy_visibility_threshold(*high);
        if (vt_low && vt_high) {
            threshold_low = *vt_low;
            threshold_high = *vt_high;
            ordered = threshold_low < threshold_high;
        }
    }
    report(11, found_symmetric && none_without_interference && ordered,
           "hardy: feasible at (R=0.5, v=1), none at v=0, v-threshold(R=0.1) < v-threshold(R=0.4)",
           fmt("p_pair(0.5) = %.3e, v*(0.1) = %.8f, v*(0.4) = %.8f",
               symmetric ? hardy_check(*symmetric, 1.0).p_pair : -1.0,
               threshold_low, threshold_high));
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1_oracle_equivalence();
    criterion_2_symmetric_reduction();
    criterion_3_symmetric_threshold();
    criterion_4_weak_entanglement_threshold();
    criterion_5_tradeoff_point();
    criterion_6_monotone_surface();
    criterion_7_classical_bound();
    criterion_8_outcome_normalization();
    criterion_9_monte_carlo_convergence();
    criterion_10_loophole_demonstration();
    criterion_11_hardy();
    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
