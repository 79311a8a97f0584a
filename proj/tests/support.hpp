#ifndef EVENTREADY_TESTS_SUPPORT_HPP
#define EVENTREADY_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "eventready/core_model.hpp"
#include "eventready/experiment.hpp"

namespace eventready::testing {

inline constexpr double kPi = std::numbers::pi;

/// Random unit-visibility config: angles uniform in [0, pi), R uniform in
/// (0, 1), phi uniform in [0, 2 pi).
inline ExperimentConfig random_config(std::mt19937_64& rng, double eta = 1.0) {
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> reflectivity(1e-6, 1.0 - 1e-6);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    return ExperimentConfig::with_visibility(
        BeamSplitter::from_reflectivity(reflectivity(rng)), 1.0, phase(rng),
        Angle(angle(rng)), Angle(angle(rng)), Angle(angle(rng)), Angle(angle(rng)), eta);
}

/// Exhaustive threshold minimum on an n-per-axis angle grid (1 degree when
/// n = 180).  Independent of the simplex path: for each (theta1', theta2)
/// pair the numerator is fixed, so the best grid value is num / max D.
inline double grid_min_threshold(double v, double rho, int n) {
    std::vector<double> p(static_cast<std::size_t>(n) * n), s1(n), s2(n);
    for (int i = 0; i < n; ++i) {
        const double t = i * kPi / n;
        s1[i] = singles_p1(rho, t);
        s2[i] = singles_p2(rho, t);
        for (int j = 0; j < n; ++j)
            p[static_cast<std::size_t>(i) * n + j] = pair_p(rho, v, t, j * kPi / n);
    }
    auto pp = [&](int i, int j) { return p[static_cast<std::size_t>(i) * n + j]; };

    double best = std::numeric_limits<double>::infinity();
    for (int i1p = 0; i1p < n; ++i1p) {
        for (int i2 = 0; i2 < n; ++i2) {
            const double num = s1[i1p] + s2[i2];
            const double base = pp(i1p, i2);
            double max_denom = -std::numeric_limits<double>::infinity();
            for (int i1 = 0; i1 < n; ++i1) {
                const double partial = pp(i1, i2) + base;
                for (int i2p = 0; i2p < n; ++i2p) {
                    const double denom = partial - pp(i1, i2p) + pp(i1p, i2p);
                    if (denom > max_denom) max_denom = denom;
                }
            }
            if (max_denom > 0.0) best = std::min(best, num / max_denom);
        }
    }
    return best;
}

}  // namespace eventready::testing

#endif
